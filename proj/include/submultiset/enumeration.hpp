#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "submultiset/multiset_spec.hpp"
#include "submultiset/natural.hpp"

namespace submultiset {

/// One sub-multiset, written as its per-element multiplicities (x_1..x_k).
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<std::uint64_t> values) : values_(std::move(values)) {}
    Composition(std::initializer_list<std::uint64_t> values) : values_(values) {}

    std::span<const std::uint64_t> values() const noexcept { return values_; }
    std::uint64_t operator[](std::size_t j) const { return values_[j]; }
    std::size_t size() const noexcept { return values_.size(); }

    /// True when size() == spec.size(), every x_j <= a_j and sum x_j == n.
    bool satisfies(const MultisetSpec& spec, std::uint64_t n) const noexcept;

    /// "0,2,3"
    std::string to_csv() const;

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition&, const Composition&) = default;

private:
    friend class CompositionCursor;
    std::vector<std::uint64_t> values_;
};

/// Streams the compositions of n bounded by a spec in ascending
/// lexicographic order, position 1 most significant. Each step costs O(k);
/// nothing beyond the current composition is stored.
///
/// Single owner: not safe to step from several threads at once.
class CompositionCursor {
public:
    CompositionCursor(MultisetSpec spec, std::uint64_t n);

    /// Cursor positioned on the composition of 0-based rank `start`.
    /// Throws OutOfRange unless start < count (start == 0 on an empty
    /// stream is allowed and yields nothing).
    static CompositionCursor at_rank(MultisetSpec spec, std::uint64_t n, const Natural& start);

    /// The current composition, then advances. nullopt once exhausted.
    std::optional<Composition> next();

    bool exhausted() const noexcept { return exhausted_; }

private:
    void fill_minimal(std::size_t from, std::uint64_t remaining);
    void advance();

    MultisetSpec spec_;
    std::uint64_t n_;
    std::vector<std::uint64_t> capacity_; // capacity_[j] = a_j + ... + a_k
    Composition current_;
    bool exhausted_ = false;
};

CompositionCursor iterate(const MultisetSpec& spec, std::uint64_t n);

/// 0-based position of x in the lexicographic stream of iterate(spec, n),
/// by prefix counting. Throws InvalidArgument when x does not satisfy the
/// bounds or the sum.
Natural rank(const MultisetSpec& spec, std::uint64_t n, const Composition& x);

/// Inverse of rank. Throws OutOfRange when r >= count.
Composition unrank(const MultisetSpec& spec, std::uint64_t n, const Natural& r);

} // namespace submultiset
