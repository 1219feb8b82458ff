#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cpairs/chain_product.hpp"
#include "cpairs/subspace.hpp"

namespace cpairs {

/// Dense index of a poset element. Id order is the canonical element order
/// used for every lexicographic tie-break.
using ElementId = std::uint32_t;

/// A finite graded poset with materialized elements.
class GradedPoset {
 public:
  virtual ~GradedPoset() = default;

  virtual std::size_t size() const = 0;
  /// Rank of the poset (maximum element rank).
  virtual int rank() const = 0;
  virtual int rank_of(ElementId e) const = 0;
  virtual bool leq(ElementId a, ElementId b) const = 0;
  virtual std::string encode(ElementId e) const = 0;
  virtual ElementId decode(std::string_view text) const = 0;
  /// {"type": ..., "n": ..., "k"|"q": ...}
  virtual nlohmann::json descriptor() const = 0;

  bool comparable(ElementId a, ElementId b) const { return a != b && (leq(a, b) || leq(b, a)); }
  /// |2 rank - R|: twice the distance to the middle.
  int twice_distance(ElementId e) const;
  int twice_distance_of_rank(int r) const { return std::abs(2 * r - rank()); }

  std::span<const ElementId> layer(int r) const;
  std::size_t layer_size(int r) const { return layer(r).size(); }

 protected:
  void index_layers();

 private:
  std::vector<std::vector<ElementId>> layers_;
};

/// {0,...,k}^n with id = base-(k+1) value of the coordinate string.
class ChainProductPoset final : public GradedPoset {
 public:
  explicit ChainProductPoset(ChainProduct shape);

  const ChainProduct& shape() const { return shape_; }
  std::size_t size() const override { return size_; }
  int rank() const override { return shape_.rank(); }
  int rank_of(ElementId e) const override { return ranks_[e]; }
  bool leq(ElementId a, ElementId b) const override;
  std::string encode(ElementId e) const override;
  ElementId decode(std::string_view text) const override;
  nlohmann::json descriptor() const override;

  std::span<const std::uint8_t> coords(ElementId e) const {
    return {coords_.data() + static_cast<std::size_t>(e) * static_cast<std::size_t>(shape_.n()),
            static_cast<std::size_t>(shape_.n())};
  }
  Element element(ElementId e) const;
  ElementId id_of(const Element& a) const;
  /// Id offset of a unit step in coordinate i (0-based, coordinate 1 first).
  std::size_t stride(int i) const { return strides_[static_cast<std::size_t>(i)]; }
  /// Complement maps id to size-1-id.
  ElementId complement_id(ElementId e) const { return static_cast<ElementId>(size_ - 1 - e); }

 private:
  ChainProduct shape_;
  std::size_t size_;
  std::vector<std::size_t> strides_;
  std::vector<std::uint8_t> coords_;
  std::vector<std::uint16_t> ranks_;
};

/// V(q, n) for prime q, ids ordered by (dimension, enumeration order).
class SubspacePoset final : public GradedPoset {
 public:
  explicit SubspacePoset(SubspaceLattice lattice);

  const SubspaceLattice& lattice() const { return lattice_; }
  std::size_t size() const override { return elements_.size(); }
  int rank() const override { return lattice_.n(); }
  int rank_of(ElementId e) const override { return elements_[e].dim; }
  bool leq(ElementId a, ElementId b) const override;
  std::string encode(ElementId e) const override { return cpairs::encode(elements_[e]); }
  ElementId decode(std::string_view text) const override;
  nlohmann::json descriptor() const override;

  const Subspace& element(ElementId e) const { return elements_[e]; }

 private:
  SubspaceLattice lattice_;
  std::vector<Subspace> elements_;
  std::vector<std::uint64_t> below_;  // bit matrix: row b has bit a set iff a <= b
  std::size_t words_ = 0;
};

/// Upper bound on materialized chain-product posets.
inline constexpr std::size_t kMaxMaterializedElements = std::size_t{1} << 24;

std::unique_ptr<GradedPoset> make_poset(const nlohmann::json& descriptor);

/// "chain:N:K" or "subspace:Q:N"
nlohmann::json parse_poset_spec(std::string_view spec);

}  // namespace cpairs
