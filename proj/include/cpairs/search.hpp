#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "cpairs/family.hpp"
#include "cpairs/graded_poset.hpp"
#include "cpairs/kernels.hpp"

namespace cpairs {

/// Exhaustive mode refuses posets with more elements than this.
inline constexpr std::size_t kMaxExhaustiveElements = 32;

struct OptimalityReport {
  std::size_t m = 0;
  Count min_comp = 0;
  std::vector<ElementId> witness;
  Count centered_min_comp = 0;
  std::vector<ElementId> centered_witness;
  bool centered_achieves = false;
};

/// Exact minimum of comp over the whole centered class of a given size.
/// Full distance classes form the core; the boundary class is an antichain
/// (degree sort) or is scanned exhaustively (at most 32 elements).
class CenteredMinimizer {
 public:
  explicit CenteredMinimizer(const GradedPoset& p, int workers = 1);

  struct Result {
    Count comp = 0;
    std::vector<ElementId> members;
  };
  Result minimum(std::size_t m);

 private:
  struct ClassTable {
    std::vector<ElementId> core;
    std::vector<ElementId> items;
    Count core_comp = 0;
    kernels::SubsetScanResult scan;  // best[s] = extra pairs from s class elements
    std::vector<std::size_t> order;  // antichain classes: degree-sorted positions
  };
  const ClassTable& table(std::size_t class_index, bool need_scan);

  const GradedPoset* p_;
  int workers_;
  std::vector<std::vector<ElementId>> classes_;
  std::map<std::size_t, ClassTable> cache_;
};

/// Per-M exhaustive minima from a single Gray-code pass over all subsets.
/// Items are ordered by encoding so witnesses are the lexicographically
/// smallest minimizers.
std::vector<OptimalityReport> exhaustive_all(const GradedPoset& p, int workers = 1);
OptimalityReport exhaustive_min_comp(const GradedPoset& p, std::size_t m, int workers = 1);

struct CenterednessReport {
  std::vector<OptimalityReport> per_m;
  bool holds() const;
};
CenterednessReport verify_centeredness_property(const GradedPoset& p, int workers = 1);

struct LocalSearchResult {
  std::vector<ElementId> best;
  Count best_comp = 0;
  Count centered_min = 0;
  std::uint64_t steps = 0;
  bool beats_centered() const { return best_comp < centered_min; }
};

/// Simulated annealing over member/non-member swaps from the exact centered
/// minimizer of size m. budget = number of proposed swaps.
LocalSearchResult local_search_counterexample(const ChainProductPoset& p, std::size_t m, std::uint64_t budget,
                                              std::uint64_t seed, CenteredMinimizer& centered);

struct LowerBoundRow {
  long t = 0;
  Count min_comp = 0;
  long long bound = 0;
  bool holds = true;
};

struct LowerBoundReport {
  int n = 0;
  int k = 0;
  std::vector<LowerBoundRow> rows;  // comp(Sigma_1 + t) >= t floor(n/2 + 1)
  bool holds() const;
};

/// Uses exhaustive minima (index = M).
LowerBoundReport check_lower_bounds(const ChainProduct& shape, const std::vector<OptimalityReport>& minima);

}  // namespace cpairs
