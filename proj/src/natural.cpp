#include "submultiset/natural.hpp"

#include <limits>
#include <ostream>

#include "submultiset/errors.hpp"

namespace submultiset {

Natural::Natural(SignedBig v) : value_(std::move(v)) {
    if (value_.sign() < 0) {
        throw InvalidArgument("Natural: negative value " + value_.str());
    }
}

Natural Natural::from_decimal(std::string_view text) {
    if (text.empty()) {
        throw InvalidArgument("Natural: empty decimal string");
    }
    SignedBig v = 0;
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw InvalidArgument("Natural: not a decimal digit string: '" + std::string(text) + "'");
        }
        v = v * 10 + (c - '0');
    }
    return Natural(std::move(v));
}

bool Natural::fits_u64() const noexcept {
    return value_ <= std::numeric_limits<std::uint64_t>::max();
}

std::uint64_t Natural::to_u64() const {
    if (!fits_u64()) {
        throw CapacityError("Natural: " + to_decimal() + " does not fit in 64 bits");
    }
    return value_.convert_to<std::uint64_t>();
}

Natural& Natural::operator-=(const Natural& rhs) {
    if (rhs.value_ > value_) {
        throw InvalidArgument("Natural: subtraction would go negative");
    }
    value_ -= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Natural& n) {
    return os << n.value_.str();
}

} // namespace submultiset
