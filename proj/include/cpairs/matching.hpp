#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cpairs {

/// Bipartite graph on left vertices 0..left-1 and right vertices 0..right-1.
struct BipartiteGraph {
  int left = 0;
  int right = 0;
  std::vector<std::vector<int>> adj;  // left vertex -> right neighbors

  BipartiteGraph() = default;
  BipartiteGraph(int l, int r) : left(l), right(r), adj(static_cast<std::size_t>(l)) {}
  void add_edge(int u, int v);
  BipartiteGraph transposed() const;
  /// Subgraph on the listed vertices, re-indexed in list order.
  BipartiteGraph induced(const std::vector<int>& lefts, const std::vector<int>& rights) const;
};

struct Matching {
  std::vector<int> mate_left;   // -1 when unmatched
  std::vector<int> mate_right;
  int size = 0;
};

/// Maximum matching by Hopcroft-Karp.
Matching max_matching(const BipartiteGraph& g);

enum class Side { Left, Right };

/// Right neighbors of a set of left vertices (or left neighbors of right ones).
std::vector<int> neighborhood(const BipartiteGraph& g, Side side, const std::vector<int>& set);

/// Largest |S| - |N(S)| over subsets S of one side (zero for S empty).
int max_deficiency(const BipartiteGraph& g, Side side);

/// A set S on `side` with |N(S)| < |S|, or nullopt when a matching covers
/// that side. The default is the alternating-reachability set of a maximum
/// matching; `maximal` extends it to an inclusion-maximal violator.
std::optional<std::vector<int>> hall_violator(const BipartiteGraph& g, Side side, bool maximal = false);

/// One improving exchange between X (left, members at rank a) and the
/// non-members at rank b (right), following the case analysis of the
/// compression lemma.
struct ExchangePlan {
  std::vector<int> remove_left;
  std::vector<int> add_right;
  std::string case_label;  // "cover", "1", "2", "2a"
  int shrink_iterations = 0;
};

/// Requires at least one edge. Every removed left vertex is matched to the
/// added right vertex at the same position.
ExchangePlan plan_exchange(const BipartiteGraph& g);

}  // namespace cpairs
