#include "submultiset/oracles.hpp"

#include <algorithm>
#include <numeric>

#include "submultiset/errors.hpp"

namespace submultiset {

namespace {

class BruteForceCounter {
public:
    explicit BruteForceCounter(std::span<const std::uint64_t> bounds) : bounds_(bounds), capacity_(bounds.size() + 1, 0) {
        for (std::size_t j = bounds.size(); j-- > 0;) {
            capacity_[j] = capacity_[j + 1] + bounds[j];
        }
    }

    std::uint64_t count(std::uint64_t n) {
        found_ = 0;
        descend(0, n);
        return found_;
    }

private:
    void descend(std::size_t j, std::uint64_t remaining) {
        if (j == bounds_.size()) {
            if (remaining == 0) {
                ++found_;
            }
            return;
        }
        // x_j must leave 0 <= remaining - x_j <= capacity_[j + 1].
        const std::uint64_t rest = capacity_[j + 1];
        const std::uint64_t lo = remaining > rest ? remaining - rest : 0;
        const std::uint64_t hi = std::min(remaining, bounds_[j]);
        for (std::uint64_t x = lo; x <= hi; ++x) {
            descend(j + 1, remaining - x);
        }
    }

    std::span<const std::uint64_t> bounds_;
    std::vector<std::uint64_t> capacity_;
    std::uint64_t found_ = 0;
};

// Coefficients 0..degree of prod_j (1 + ... + x^{a_j}).
std::vector<SignedBig> truncated_product(const MultisetSpec& spec, std::uint64_t degree) {
    std::vector<SignedBig> poly(degree + 1);
    poly[0] = 1;
    for (std::uint64_t a : spec.multiplicities()) {
        detail::multiply_by_run(poly, a);
    }
    return poly;
}

} // namespace

namespace detail {

void multiply_by_run(std::vector<SignedBig>& poly, std::uint64_t a) {
    if (a == 0 || poly.empty()) {
        return;
    }
    // new[m] = sum_{t=0..min(a, m)} old[m - t] = P[m] - P[m - a - 1] with
    // P the prefix sums of old. Prefix in place, then difference from the
    // top down so P[m - a - 1] is still intact when read.
    for (std::size_t m = 1; m < poly.size(); ++m) {
        poly[m] += poly[m - 1];
    }
    if (a >= poly.size() - 1) {
        return;
    }
    const std::size_t width = static_cast<std::size_t>(a) + 1;
    for (std::size_t m = poly.size(); m-- > width;) {
        poly[m] -= poly[m - width];
    }
}

} // namespace detail

Budget::Budget(Natural max_items) : max_items_(std::move(max_items)) {
    if (max_items_.is_zero()) {
        throw InvalidArgument("budget must be at least 1");
    }
}

Natural brute_force_visit_estimate(const MultisetSpec& spec) {
    SignedBig product = 1;
    for (std::uint64_t a : spec.multiplicities()) {
        product *= SignedBig(a) + 1;
    }
    return Natural(std::move(product));
}

Natural count_brute_force(const MultisetSpec& spec, std::uint64_t n, const Budget& budget) {
    const Natural estimate = brute_force_visit_estimate(spec);
    if (estimate > budget.max_items()) {
        throw BudgetExceeded("brute force would visit up to " + estimate.to_decimal() +
                             " compositions, budget is " + budget.max_items().to_decimal());
    }
    if (n > spec.cardinality()) {
        return Natural{};
    }
    BruteForceCounter counter(spec.multiplicities());
    return Natural{counter.count(n)};
}

Natural count_dp(const MultisetSpec& spec, std::uint64_t n) {
    if (n > spec.cardinality()) {
        return Natural{};
    }
    // Coefficients are symmetric: x -> a - x maps size n onto size N - n.
    const std::uint64_t degree = std::min(n, spec.cardinality() - n);
    auto poly = truncated_product(spec, degree);
    return Natural(std::move(poly[degree]));
}

CountTable full_table(const MultisetSpec& spec) {
    auto poly = truncated_product(spec, spec.cardinality());
    CountTable table{spec, {}};
    table.counts.reserve(poly.size());
    for (auto& c : poly) {
        table.counts.emplace_back(std::move(c));
    }
    return table;
}

Natural count(const MultisetSpec& spec, std::uint64_t n, CountMethod method, const Budget& budget) {
    switch (method) {
    case CountMethod::InclusionExclusion:
        return count_upper_constrained(spec, n);
    case CountMethod::DynamicProgramming:
        return count_dp(spec, n);
    case CountMethod::BruteForce:
        return count_brute_force(spec, n, budget);
    }
    throw InvalidArgument("unknown count method");
}

std::size_t AgreementReport::methods_run() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(outcomes.begin(), outcomes.end(), [](const MethodOutcome& o) { return o.ran(); }));
}

AgreementReport cross_check(const MultisetSpec& spec, std::uint64_t n, const Budget& budget) {
    AgreementReport report;
    for (CountMethod method : {CountMethod::InclusionExclusion, CountMethod::DynamicProgramming, CountMethod::BruteForce}) {
        MethodOutcome outcome{method, std::nullopt, {}};
        try {
            outcome.value = count(spec, n, method, budget);
        } catch (const CapacityError& e) {
            outcome.skipped_reason = e.what();
        }
        report.outcomes.push_back(std::move(outcome));
    }
    const MethodOutcome* first = nullptr;
    for (const auto& o : report.outcomes) {
        if (!o.ran()) {
            continue;
        }
        if (first == nullptr) {
            first = &o;
        } else if (*o.value != *first->value) {
            report.agree = false;
        }
    }
    return report;
}

} // namespace submultiset
