#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "cpairs/bigcount.hpp"
#include "cpairs/graded_poset.hpp"

namespace cpairs {

/// A subset of a materialized graded poset. The poset must outlive it.
class Family {
 public:
  explicit Family(const GradedPoset& poset);
  Family(const GradedPoset& poset, std::span<const ElementId> members);

  const GradedPoset& poset() const { return *poset_; }
  std::size_t size() const { return size_; }
  bool contains(ElementId e) const { return in_[e] != 0; }
  std::span<const std::uint8_t> indicator() const { return in_; }
  /// Sorted member ids.
  std::vector<ElementId> members() const;
  std::vector<ElementId> layer_members(int r) const;
  std::size_t layer_count(int r) const;

  /// New family with `removed` taken out and `added` put in.
  Family exchange(std::span<const ElementId> removed, std::span<const ElementId> added) const;

  friend bool operator==(const Family& a, const Family& b) { return a.poset_ == b.poset_ && a.in_ == b.in_; }

 private:
  void set(ElementId e, bool value);

  const GradedPoset* poset_;
  std::vector<std::uint8_t> in_;
  std::vector<std::size_t> per_layer_;
  std::size_t size_ = 0;
};

enum class CompBackend { Auto, Pairwise, Transform };

/// Number of pairs A < B with both in F.
Count comp_count(const Family& f, CompBackend backend = CompBackend::Auto, int workers = 1);
/// Serial all-pairs reference; works on every poset.
Count comp_count_pairwise(const Family& f);
/// Down-set zeta transform; chain products only.
Count comp_count_transform(const Family& f, int workers = 1);

/// Members of F strictly comparable with e (e itself excluded).
Count comp_of_element(ElementId e, const Family& f);
/// comp_of_element for every element of the universe.
std::vector<std::uint32_t> comp_degrees(const Family& f, int workers = 1);

struct CompReport {
  Count total_pairs = 0;
  std::vector<std::pair<ElementId, Count>> degrees;  // members only
};
CompReport comp_report(const Family& f, int workers = 1);

/// Potential sum over members of |2 rank - R| (twice the distance to the middle).
long long twice_potential(const Family& f);

enum class FillOrder { Lexicographic, DegreeAscending };

/// Distance classes of ranks, nearest to the middle first; within a class
/// the higher rank comes first.
std::vector<std::vector<int>> distance_classes(const GradedPoset& p);

Family build_centered(const GradedPoset& p, std::size_t m, FillOrder order = FillOrder::DegreeAscending);
bool is_centered(const Family& f);
bool is_canonical_centered(const Family& f);

struct PartialLayerMinimum {
  Count comp = 0;
  Family family;
};

/// Exact minimum comp over window + s elements of one adjacent layer.
PartialLayerMinimum min_comp_one_partial_layer(const ChainProductPoset& p, LayerWindow window, int partial_rank,
                                               std::size_t s, int workers = 1);

/// floor((l_{3r-1}/l_{2r-1} - 1) t) for {0,1,2}^n.
BigCount nss_bound(const ChainProduct& p, int r, long t);

/// {"poset": descriptor, "members": [encodings...]}
nlohmann::json family_to_json(const Family& f);
/// Decodes members against an existing poset whose descriptor must match.
Family family_from_json(const GradedPoset& p, const nlohmann::json& j);

}  // namespace cpairs
