#pragma once

// Data-parallel inner loops. Every OpenMP kernel has a serial twin that the
// tests and benchmarks compare against.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cpairs/bigcount.hpp"

namespace cpairs::kernels {

/// Grid shape of {0,...,k}^n with coordinate 0 most significant.
struct Grid {
  int n = 0;
  int k = 0;
  std::size_t size() const;
};

/// values[x] <- sum of values[y] over y <= x (down-set zeta transform).
void down_zeta_serial(std::span<std::uint32_t> values, Grid grid);
void down_zeta_parallel(std::span<std::uint32_t> values, Grid grid, int workers);

/// values[x] <- sum of values[y] over y >= x.
void up_zeta_serial(std::span<std::uint32_t> values, Grid grid);
void up_zeta_parallel(std::span<std::uint32_t> values, Grid grid, int workers);

/// Comparable pairs of the family with the given 0/1 indicator:
/// sum over members B of |{A member : A <= B}| - 1.
Count comp_transform_serial(std::span<const std::uint8_t> indicator, Grid grid);
Count comp_transform_parallel(std::span<const std::uint8_t> indicator, Grid grid, int workers);

/// Strict comparability degree of every grid point against the family.
std::vector<std::uint32_t> degrees_serial(std::span<const std::uint8_t> indicator, Grid grid);
std::vector<std::uint32_t> degrees_parallel(std::span<const std::uint8_t> indicator, Grid grid, int workers);

/// Weighted pair objective over subsets of at most 32 items:
/// f(S) = sum_{i in S} weight[i] + |{i < j in S : j in adjacency[i]}|.
struct SubsetProblem {
  std::vector<std::uint64_t> adjacency;  // symmetric, no self loops
  std::vector<std::int64_t> weight;      // empty means all zero

  int items() const { return static_cast<int>(adjacency.size()); }
};

/// Per cardinality c: minimum objective and the lexicographically smallest
/// minimizer (bit i = item i).
struct SubsetScanResult {
  std::vector<std::int64_t> best;
  std::vector<std::uint64_t> witness;
};

inline constexpr int kMaxScanItems = 32;

std::int64_t subset_objective(const SubsetProblem& problem, std::uint64_t mask);

/// Equal-cardinality masks compared as sorted item lists.
inline bool lex_less(std::uint64_t x, std::uint64_t y) {
  const std::uint64_t d = x ^ y;
  return d != 0 && (x & d & (~d + 1)) != 0;
}

/// From-scratch evaluation of every subset; the oracle for the Gray scans.
SubsetScanResult subset_scan_reference(const SubsetProblem& problem);
/// Single Gray-code pass with O(1) incremental updates.
SubsetScanResult subset_scan_serial(const SubsetProblem& problem);
/// Gray-code scan sharded over fixed high-bit prefixes. The result does not
/// depend on the worker count.
SubsetScanResult subset_scan_parallel(const SubsetProblem& problem, int workers, int prefix_bits = 10);

/// (mask, incrementally maintained objective) sampled every `stride` steps
/// of the serial Gray walk, plus the final state.
std::vector<std::pair<std::uint64_t, std::int64_t>> gray_checkpoints(const SubsetProblem& problem,
                                                                     std::uint64_t stride);

}  // namespace cpairs::kernels
