#include "submultiset/enumeration.hpp"

#include <algorithm>

#include "submultiset/errors.hpp"
#include "submultiset/oracles.hpp"

namespace submultiset {

namespace {

// suffix(j)[t]: number of ways elements j..k-1 can take total t, for t <= n.
// Built right to left, one run-polynomial multiply per element.
class SuffixCounts {
public:
    SuffixCounts(const MultisetSpec& spec, std::uint64_t n) : tables_(spec.size() + 1) {
        std::vector<SignedBig> poly(n + 1);
        poly[0] = 1;
        tables_[spec.size()] = poly;
        for (std::size_t j = spec.size(); j-- > 0;) {
            detail::multiply_by_run(poly, spec[j]);
            tables_[j] = poly;
        }
    }

    const SignedBig& at(std::size_t j, std::uint64_t t) const { return tables_[j][t]; }

private:
    std::vector<std::vector<SignedBig>> tables_;
};

} // namespace

bool Composition::satisfies(const MultisetSpec& spec, std::uint64_t n) const noexcept {
    if (values_.size() != spec.size()) {
        return false;
    }
    std::uint64_t sum = 0;
    for (std::size_t j = 0; j < values_.size(); ++j) {
        if (values_[j] > spec[j]) {
            return false;
        }
        // Bounded by a_j, so the running sum stays <= N <= 2^62.
        sum += values_[j];
    }
    return sum == n;
}

std::string Composition::to_csv() const {
    std::string out;
    for (std::size_t j = 0; j < values_.size(); ++j) {
        if (j) {
            out += ',';
        }
        out += std::to_string(values_[j]);
    }
    return out;
}

CompositionCursor::CompositionCursor(MultisetSpec spec, std::uint64_t n)
    : spec_(std::move(spec)), n_(n), capacity_(spec_.size() + 1, 0) {
    for (std::size_t j = spec_.size(); j-- > 0;) {
        capacity_[j] = capacity_[j + 1] + spec_[j];
    }
    current_.values_.assign(spec_.size(), 0);
    if (n_ > spec_.cardinality()) {
        exhausted_ = true;
        return;
    }
    fill_minimal(0, n_);
}

CompositionCursor CompositionCursor::at_rank(MultisetSpec spec, std::uint64_t n, const Natural& start) {
    CompositionCursor cursor(std::move(spec), n);
    if (cursor.exhausted_ && start.is_zero()) {
        return cursor;
    }
    cursor.current_ = unrank(cursor.spec_, n, start);
    return cursor;
}

void CompositionCursor::fill_minimal(std::size_t from, std::uint64_t remaining) {
    for (std::size_t i = from; i < spec_.size(); ++i) {
        const std::uint64_t rest = capacity_[i + 1];
        current_.values_[i] = remaining > rest ? remaining - rest : 0;
        remaining -= current_.values_[i];
    }
}

void CompositionCursor::advance() {
    // Rightmost position that can grow by one while the tail still has
    // something to give up; the tail is then reset to its minimum.
    std::uint64_t tail = 0;
    for (std::size_t j = spec_.size(); j-- > 0;) {
        auto& x = current_.values_[j];
        if (x < spec_[j] && tail >= 1) {
            ++x;
            fill_minimal(j + 1, tail - 1);
            return;
        }
        tail += x;
    }
    exhausted_ = true;
}

std::optional<Composition> CompositionCursor::next() {
    if (exhausted_) {
        return std::nullopt;
    }
    Composition out = current_;
    advance();
    return out;
}

CompositionCursor iterate(const MultisetSpec& spec, std::uint64_t n) {
    return CompositionCursor(spec, n);
}

Natural rank(const MultisetSpec& spec, std::uint64_t n, const Composition& x) {
    if (!x.satisfies(spec, n)) {
        throw InvalidArgument("rank: " + x.to_csv() + " is not a composition of " + std::to_string(n) +
                              " bounded by " + spec.to_string());
    }
    const SuffixCounts suffix(spec, n);
    SignedBig position = 0;
    std::uint64_t remaining = n;
    for (std::size_t j = 0; j < spec.size(); ++j) {
        // Every smaller value at position j, completed by any tail.
        for (std::uint64_t v = 0; v < x[j]; ++v) {
            position += suffix.at(j + 1, remaining - v);
        }
        remaining -= x[j];
    }
    return Natural(std::move(position));
}

Composition unrank(const MultisetSpec& spec, std::uint64_t n, const Natural& r) {
    if (n > spec.cardinality()) {
        throw OutOfRange("unrank: rank " + r.to_decimal() + " out of range, there are no compositions");
    }
    const SuffixCounts suffix(spec, n);
    if (r.value() >= suffix.at(0, n)) {
        throw OutOfRange("unrank: rank " + r.to_decimal() + " out of range, count is " + suffix.at(0, n).str());
    }
    SignedBig left = r.value();
    std::vector<std::uint64_t> values(spec.size(), 0);
    std::uint64_t remaining = n;
    for (std::size_t j = 0; j < spec.size(); ++j) {
        const std::uint64_t hi = std::min(remaining, spec[j]);
        std::uint64_t v = 0;
        for (; v < hi; ++v) {
            const SignedBig& block = suffix.at(j + 1, remaining - v);
            if (left < block) {
                break;
            }
            left -= block;
        }
        values[j] = v;
        remaining -= v;
    }
    if (remaining != 0 || !left.is_zero()) {
        throw InternalError("unrank: suffix tables inconsistent");
    }
    return Composition(std::move(values));
}

} // namespace submultiset
