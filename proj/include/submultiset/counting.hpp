#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "submultiset/multiset_spec.hpp"
#include "submultiset/natural.hpp"

namespace submultiset {

/// Selects the algorithm behind a count.
enum class CountMethod {
    InclusionExclusion,
    DynamicProgramming,
    BruteForce,
};

/// "incexc", "dp", "brute".
std::string_view to_string(CountMethod method) noexcept;
std::optional<CountMethod> parse_count_method(std::string_view name) noexcept;

/// Largest dimension the inclusion-exclusion method accepts. Subsets are
/// indexed by a 64-bit word.
inline constexpr std::size_t kMaxInclusionExclusionDimension = 63;

/// C(alpha, beta), taken to be zero when alpha < 0, beta < 0 or alpha < beta.
///
/// Uses the running product r <- r * (alpha - beta + i) / i, which divides
/// exactly at every step, with beta replaced by min(beta, alpha - beta).
Natural binom_zero_convention(std::int64_t alpha, std::int64_t beta);

/// Number of k-resolutions of n (weak compositions of n into k parts):
/// C(n + k - 1, k - 1).
///
/// k = 0 is accepted only with n = 0 (one empty resolution); otherwise
/// throws InvalidArgument. Also throws when n + k - 1 overflows 64 bits.
Natural count_unconstrained(std::uint64_t k, std::uint64_t n);

/// Number of k-resolutions of n with x_j >= a_j for every j:
/// C(n - N + k - 1, k - 1), zero when n < N. Requires k >= 1.
Natural count_lower_constrained(const MultisetSpec& lower, std::uint64_t n);

/// Number of sub-multisets of cardinality n, i.e. the number of
/// (x_1..x_k) with sum n and 0 <= x_j <= a_j, by inclusion-exclusion over
/// the subsets L of the element indices:
///
///     sum over L of (-1)^|L| * C(n + k - 1 - |L| - sum_{i in L} a_i, k - 1).
///
/// Subsets whose binomial argument drops below k - 1 contribute zero and
/// are skipped together with their supersets. Terms are accumulated in a
/// SignedBig; a negative final sum raises InternalError.
///
/// Throws CapacityError when k > kMaxInclusionExclusionDimension; count_dp
/// serves those instances.
Natural count_upper_constrained(const MultisetSpec& spec, std::uint64_t n);

/// Two-element closed form: the number of admissible x_1 in
/// [max(0, n - a2), min(n, a1)], or zero when that interval is empty.
Natural count_two_elements(std::uint64_t a1, std::uint64_t a2, std::uint64_t n);

/// C(N - n + k - 1, k - 1): the result of substituting y_j = a_j - x_j and
/// treating the y_j as unconstrained. Overcounts whenever some y_j would
/// have to be negative. Kept as a negative control; not a sub-multiset
/// count. Requires k >= 1.
Natural count_wrong_formula(const MultisetSpec& spec, std::uint64_t n);

/// Support size of the multivariate hypergeometric distribution drawing
/// `sample_size` items without replacement from classes of the given sizes.
/// Same value and errors as count_upper_constrained.
inline Natural hypergeometric_support_cardinality(const MultisetSpec& class_sizes, std::uint64_t sample_size) {
    return count_upper_constrained(class_sizes, sample_size);
}

} // namespace submultiset
