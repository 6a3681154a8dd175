#include "submultiset/counting.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

#include "submultiset/errors.hpp"

namespace submultiset {

namespace {

constexpr std::int64_t kInt64Max = std::numeric_limits<std::int64_t>::max();

// C(t + k - 1, k - 1) for the t = n - s values inclusion-exclusion asks for.
// Many subsets share the same s, so each value is computed once per call.
class StarsAndBarsCache {
public:
    explicit StarsAndBarsCache(std::int64_t parts_minus_one) : parts_minus_one_(parts_minus_one) {}

    const SignedBig& get(std::int64_t t) {
        auto it = cache_.find(t);
        if (it == cache_.end()) {
            it = cache_.emplace(t, binom_zero_convention(t + parts_minus_one_, parts_minus_one_).value()).first;
        }
        return it->second;
    }

private:
    std::int64_t parts_minus_one_;
    std::unordered_map<std::int64_t, SignedBig> cache_;
};

// Walks the subsets L in index order (each subset extends its parent by a
// larger index). `budget` is n - sum_{i in L}(a_i + 1); a subset with
// negative budget has a zero term, and so do all of its supersets.
class InclusionExclusion {
public:
    InclusionExclusion(std::vector<std::uint64_t> weights, std::int64_t k_minus_one)
        : weights_(std::move(weights)), cache_(k_minus_one) {}

    SignedBig sum(std::int64_t n) {
        total_ = 0;
        visit(0, n, false);
        return total_;
    }

private:
    void visit(std::size_t first, std::int64_t budget, bool odd) {
        if (odd) {
            total_ -= cache_.get(budget);
        } else {
            total_ += cache_.get(budget);
        }
        for (std::size_t i = first; i < weights_.size(); ++i) {
            // weights_ is sorted, so every later index fails too.
            if (weights_[i] > static_cast<std::uint64_t>(budget)) {
                break;
            }
            visit(i + 1, budget - static_cast<std::int64_t>(weights_[i]), !odd);
        }
    }

    std::vector<std::uint64_t> weights_;
    StarsAndBarsCache cache_;
    SignedBig total_;
};

} // namespace

std::string_view to_string(CountMethod method) noexcept {
    switch (method) {
    case CountMethod::InclusionExclusion:
        return "incexc";
    case CountMethod::DynamicProgramming:
        return "dp";
    case CountMethod::BruteForce:
        return "brute";
    }
    return "unknown";
}

std::optional<CountMethod> parse_count_method(std::string_view name) noexcept {
    if (name == "incexc") {
        return CountMethod::InclusionExclusion;
    }
    if (name == "dp") {
        return CountMethod::DynamicProgramming;
    }
    if (name == "brute") {
        return CountMethod::BruteForce;
    }
    return std::nullopt;
}

Natural binom_zero_convention(std::int64_t alpha, std::int64_t beta) {
    if (alpha < 0 || beta < 0 || alpha < beta) {
        return Natural{};
    }
    const std::int64_t steps = std::min(beta, alpha - beta);
    SignedBig result = 1;
    for (std::int64_t i = 1; i <= steps; ++i) {
        result *= alpha - steps + i;
        result /= i;
    }
    return Natural(std::move(result));
}

Natural count_unconstrained(std::uint64_t k, std::uint64_t n) {
    if (k == 0) {
        if (n == 0) {
            return Natural{1};
        }
        throw InvalidArgument("count_unconstrained: k = 0 admits no resolution of n = " + std::to_string(n));
    }
    if (n > static_cast<std::uint64_t>(kInt64Max) - k) {
        throw InvalidArgument("count_unconstrained: n + k - 1 overflows");
    }
    const auto k_minus_one = static_cast<std::int64_t>(k - 1);
    return binom_zero_convention(static_cast<std::int64_t>(n) + k_minus_one, k_minus_one);
}

Natural count_lower_constrained(const MultisetSpec& lower, std::uint64_t n) {
    const std::size_t k = lower.size();
    if (k == 0) {
        throw InvalidArgument("count_lower_constrained: requires at least one element");
    }
    if (n < lower.cardinality()) {
        return Natural{};
    }
    const std::uint64_t excess = n - lower.cardinality();
    if (excess > static_cast<std::uint64_t>(kInt64Max) - k) {
        throw InvalidArgument("count_lower_constrained: n - N + k - 1 overflows");
    }
    const auto k_minus_one = static_cast<std::int64_t>(k - 1);
    return binom_zero_convention(static_cast<std::int64_t>(excess) + k_minus_one, k_minus_one);
}

Natural count_upper_constrained(const MultisetSpec& spec, std::uint64_t n) {
    const std::size_t k = spec.size();
    if (k > kMaxInclusionExclusionDimension) {
        throw CapacityError("inclusion-exclusion supports at most " +
                            std::to_string(kMaxInclusionExclusionDimension) + " elements, got " + std::to_string(k) +
                            "; use the dynamic-programming method (dp) instead");
    }
    if (n > spec.cardinality()) {
        return Natural{};
    }
    if (k == 0) {
        return Natural{1};
    }

    // Weight of index i in the binomial's top argument: a_i + 1.
    std::vector<std::uint64_t> weights(spec.multiplicities().begin(), spec.multiplicities().end());
    for (auto& w : weights) {
        w += 1;
    }
    std::sort(weights.begin(), weights.end());

    InclusionExclusion ie(std::move(weights), static_cast<std::int64_t>(k - 1));
    SignedBig total = ie.sum(static_cast<std::int64_t>(n));
    if (total.sign() < 0) {
        throw InternalError("inclusion-exclusion produced a negative count " + total.str() + " for " +
                            spec.to_string() + ", n = " + std::to_string(n));
    }
    return Natural(std::move(total));
}

Natural count_two_elements(std::uint64_t a1, std::uint64_t a2, std::uint64_t n) {
    const std::uint64_t lo = n > a2 ? n - a2 : 0;
    const std::uint64_t hi = std::min(n, a1);
    if (hi < lo) {
        return Natural{};
    }
    return Natural{hi - lo + 1};
}

Natural count_wrong_formula(const MultisetSpec& spec, std::uint64_t n) {
    const std::size_t k = spec.size();
    if (k == 0) {
        throw InvalidArgument("count_wrong_formula: requires at least one element");
    }
    // n > N puts the top argument below k - 1.
    if (n > spec.cardinality()) {
        return Natural{};
    }
    const auto k_minus_one = static_cast<std::int64_t>(k - 1);
    const auto top = static_cast<std::int64_t>(spec.cardinality() - n) + k_minus_one;
    return binom_zero_convention(top, k_minus_one);
}

} // namespace submultiset
