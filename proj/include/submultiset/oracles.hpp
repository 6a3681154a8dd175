#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "submultiset/counting.hpp"
#include "submultiset/multiset_spec.hpp"
#include "submultiset/natural.hpp"

namespace submultiset {

/// Upper bound on the number of compositions the brute-force oracle may
/// visit.
class Budget {
public:
    static constexpr std::uint64_t kDefaultMaxItems = 10'000'000;

    Budget() = default;
    /// Throws InvalidArgument when max_items is zero.
    explicit Budget(Natural max_items);

    const Natural& max_items() const noexcept { return max_items_; }

private:
    Natural max_items_{kDefaultMaxItems};
};

/// Number of sub-multisets of every cardinality 0..N.
struct CountTable {
    MultisetSpec spec;
    std::vector<Natural> counts;

    const Natural& operator[](std::size_t n) const { return counts[n]; }
    std::size_t size() const noexcept { return counts.size(); }
};

/// Product of (a_j + 1): the number of compositions the brute-force oracle
/// may visit, and also the total number of sub-multisets of any size.
Natural brute_force_visit_estimate(const MultisetSpec& spec);

/// Counts bounded compositions by explicit recursive enumeration, fixing
/// x_1 first. Branches whose remaining sum cannot be reached by the
/// remaining capacity are cut.
///
/// Throws BudgetExceeded (carrying the estimate) when the visit estimate
/// exceeds budget.max_items().
Natural count_brute_force(const MultisetSpec& spec, std::uint64_t n, const Budget& budget = {});

/// Coefficient of x^n in prod_j (1 + x + ... + x^{a_j}), computed by
/// repeated convolution truncated at degree min(n, N - n). Works for any k.
Natural count_dp(const MultisetSpec& spec, std::uint64_t n);

/// All coefficients of prod_j (1 + x + ... + x^{a_j}) in one pass.
CountTable full_table(const MultisetSpec& spec);

/// Dispatches to the method's counting routine. Budget is only used by
/// BruteForce.
Natural count(const MultisetSpec& spec, std::uint64_t n, CountMethod method, const Budget& budget = {});

struct MethodOutcome {
    CountMethod method;
    std::optional<Natural> value;
    /// Why the method did not run; empty when it ran.
    std::string skipped_reason;

    bool ran() const noexcept { return value.has_value(); }
};

struct AgreementReport {
    /// One entry per method, in the order incexc, dp, brute.
    std::vector<MethodOutcome> outcomes;
    /// True when every method that ran produced the same value.
    bool agree = true;

    std::size_t methods_run() const noexcept;
};

/// Runs every method that accepts the instance and compares their values.
/// A capacity or budget failure is recorded as a skip; a disagreement is
/// reported, never thrown.
AgreementReport cross_check(const MultisetSpec& spec, std::uint64_t n, const Budget& budget = {});

namespace detail {

/// Multiplies `poly` in place by (1 + x + ... + x^{a}), keeping its length.
void multiply_by_run(std::vector<SignedBig>& poly, std::uint64_t a);

} // namespace detail

} // namespace submultiset
