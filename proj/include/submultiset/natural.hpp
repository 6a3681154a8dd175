#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace submultiset {

/// Exact signed integer of unbounded width.
using SignedBig = boost::multiprecision::cpp_int;

/// Exact non-negative integer of unbounded width.
///
/// Every count produced by the library is a Natural. Operations that could
/// leave the non-negative range (subtraction, construction from a signed
/// value) check and throw InvalidArgument rather than wrap.
class Natural {
public:
    Natural() = default;
    Natural(std::uint64_t v) : value_(v) {} // NOLINT(google-explicit-constructor)

    /// Throws InvalidArgument when `v` is negative.
    explicit Natural(SignedBig v);

    /// Parses a decimal string of digits only.
    static Natural from_decimal(std::string_view text);

    const SignedBig& value() const noexcept { return value_; }
    std::string to_decimal() const { return value_.str(); }

    bool is_zero() const noexcept { return value_.is_zero(); }

    /// True when the value fits in std::uint64_t.
    bool fits_u64() const noexcept;
    /// Throws CapacityError when the value does not fit.
    std::uint64_t to_u64() const;

    Natural& operator+=(const Natural& rhs) {
        value_ += rhs.value_;
        return *this;
    }
    Natural& operator*=(const Natural& rhs) {
        value_ *= rhs.value_;
        return *this;
    }
    /// Throws InvalidArgument if rhs > *this.
    Natural& operator-=(const Natural& rhs);

    friend Natural operator+(Natural lhs, const Natural& rhs) { return lhs += rhs; }
    friend Natural operator*(Natural lhs, const Natural& rhs) { return lhs *= rhs; }
    friend Natural operator-(Natural lhs, const Natural& rhs) { return lhs -= rhs; }

    friend bool operator==(const Natural& a, const Natural& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
        const int c = a.value_.compare(b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Natural& n);

private:
    SignedBig value_{0};
};

} // namespace submultiset
