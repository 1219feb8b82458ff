#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cpairs/report.hpp"

namespace cpairs {

// Claim verifiers. Each returns report checks; nothing here throws on a
// failed identity, only on invalid arguments or capacity.

/// Exhaustive centeredness of {0,1}^n.
Check verify_kleitman(int n, int workers = 1);
/// Exhaustive centeredness of V(q, n).
Check verify_subspace_centeredness(int q, int n, int workers = 1);
/// Property (Q) and the rank profile of V(q, n).
std::vector<Check> verify_property_q(int q, int n);

/// The four SCD invariants for one (n, k).
Check verify_scd_instance(int n, int k);
/// Every (n, k) with n, k >= 1 and (k+1)^n <= max_elements, as one check.
Check verify_scd_grid(std::size_t max_elements);
/// Pairs sharing a chain >= |F| - #chains on seeded random families.
Check verify_pigeonhole(std::uint64_t seed, std::size_t samples);

/// For every comparable pair other than (0...0, k...k) the governing shadow
/// count, its rank-level minimum and the reduced B* all reach floor(n/2 + 1).
Check verify_shadows(int n, int k);

Check verify_claimfuncond(int n);
Check verify_3compressclaim(int n);
/// alpha_i, beta_i against enumeration and the Case 1 differences.
Check verify_3compress_formulas(int n);
/// Sum and ratio identities of f(c); the enumeration cross-check runs when
/// `enumerate` is set.
Check verify_averagethird(int n, bool enumerate);
Check verify_number_nbrs(int n);

/// Per n: size identity, comp(X, F) bound, comp(B, F) < comp(X, F), and the
/// canonical centered minimum against comp(F). Ends with an info check
/// naming the smallest n where F beats every canonical centered family.
std::vector<Check> verify_sec3(const std::vector<int>& ns, int workers = 1);

/// |delta(B)| > C(n, j-1) and the sign of comp(F') - comp(F). j defaults to
/// 2 ceil(log2 n) and moves up by one when nk + j is odd.
std::vector<Check> verify_sec5(int n, int k, std::optional<int> j = std::nullopt);
/// Polynomial sums agree with enumeration for every nk <= max_nk with
/// (k+1)^n <= 10^6.
Check verify_sec5_backends(int max_nk);

/// comp(Sigma_1 + t) >= t floor(n/2 + 1) from exhaustive minima, plus
/// monotonicity and witness recounts; k = 2 adds the informational
/// continuity and NSS comparisons.
std::vector<Check> verify_lower_bounds(int n, int k, int workers = 1);

/// Seeded random families through every transform.
std::vector<Check> verify_compression_props(std::uint64_t seed, std::size_t samples, int workers = 1);
/// Pairwise vs transform comp, Gray incremental vs from-scratch, parallel vs
/// serial kernels.
std::vector<Check> verify_oracle_consistency(std::uint64_t seed, std::size_t samples, std::size_t checkpoints,
                                             int workers = 1);

/// Annealing against the exact centered minimum for every M in [m_lo, m_hi].
/// Always informational.
Check explore_counterexample(int n, int k, std::size_t m_lo, std::size_t m_hi, std::uint64_t budget,
                             std::uint64_t seed, int workers = 1);

}  // namespace cpairs
