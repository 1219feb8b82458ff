#include "cpairs/graded_poset.hpp"

#include <charconv>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "cpairs/errors.hpp"

namespace cpairs {

int GradedPoset::twice_distance(ElementId e) const { return twice_distance_of_rank(rank_of(e)); }

std::span<const ElementId> GradedPoset::layer(int r) const {
  if (r < 0 || r >= static_cast<int>(layers_.size())) return {};
  return layers_[static_cast<std::size_t>(r)];
}

void GradedPoset::index_layers() {
  layers_.assign(static_cast<std::size_t>(rank()) + 1, {});
  for (ElementId e = 0; e < size(); ++e) layers_[static_cast<std::size_t>(rank_of(e))].push_back(e);
}

ChainProductPoset::ChainProductPoset(ChainProduct shape) : shape_(shape) {
  const BigCount count = shape_.element_count();
  if (count > kMaxMaterializedElements) throw CapacityError("chain product too large to materialize");
  size_ = static_cast<std::size_t>(count);
  const int n = shape_.n();
  const std::size_t base = static_cast<std::size_t>(shape_.k()) + 1;
  strides_.assign(static_cast<std::size_t>(n), 1);
  for (int i = n - 2; i >= 0; --i) strides_[static_cast<std::size_t>(i)] = strides_[static_cast<std::size_t>(i + 1)] * base;
  coords_.resize(size_ * static_cast<std::size_t>(n));
  ranks_.resize(size_);
  for (std::size_t id = 0; id < size_; ++id) {
    std::size_t rest = id;
    int r = 0;
    for (int i = n - 1; i >= 0; --i) {
      const auto d = static_cast<std::uint8_t>(rest % base);
      rest /= base;
      coords_[id * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] = d;
      r += d;
    }
    ranks_[id] = static_cast<std::uint16_t>(r);
  }
  index_layers();
}

bool ChainProductPoset::leq(ElementId a, ElementId b) const {
  if (ranks_[a] > ranks_[b]) return false;
  const auto ca = coords(a);
  const auto cb = coords(b);
  for (std::size_t i = 0; i < ca.size(); ++i)
    if (ca[i] > cb[i]) return false;
  return true;
}

std::string ChainProductPoset::encode(ElementId e) const {
  std::string s;
  for (auto d : coords(e)) s.push_back(digit_char(d));
  return s;
}

ElementId ChainProductPoset::decode(std::string_view text) const { return id_of(cpairs::decode(shape_, text)); }

Element ChainProductPoset::element(ElementId e) const {
  const auto c = coords(e);
  return Element(shape_, std::vector<int>(c.begin(), c.end()));
}

ElementId ChainProductPoset::id_of(const Element& a) const {
  if (static_cast<int>(a.size()) != shape_.n()) throw std::domain_error("id_of: dimension mismatch");
  std::size_t id = 0;
  for (int i = 0; i < shape_.n(); ++i) id += static_cast<std::size_t>(a[static_cast<std::size_t>(i)]) * strides_[static_cast<std::size_t>(i)];
  return static_cast<ElementId>(id);
}

nlohmann::json ChainProductPoset::descriptor() const {
  return {{"type", "chain_product"}, {"n", shape_.n()}, {"k", shape_.k()}};
}

SubspacePoset::SubspacePoset(SubspaceLattice lattice)
    : lattice_(lattice), elements_(enumerate_subspaces(lattice_)) {
  const std::size_t n = elements_.size();
  words_ = (n + 63) / 64;
  if (n <= 16384) {
    below_.assign(n * words_, 0);
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t a = 0; a < n; ++a)
        if (elements_[a].dim <= elements_[b].dim && contains(lattice_, elements_[b], elements_[a]))
          below_[b * words_ + a / 64] |= std::uint64_t{1} << (a % 64);
  }
  index_layers();
}

bool SubspacePoset::leq(ElementId a, ElementId b) const {
  if (!below_.empty()) return (below_[static_cast<std::size_t>(b) * words_ + a / 64] >> (a % 64)) & 1u;
  return elements_[a].dim <= elements_[b].dim && contains(lattice_, elements_[b], elements_[a]);
}

ElementId SubspacePoset::decode(std::string_view text) const {
  const Subspace s = cpairs::decode(lattice_, text);
  for (ElementId id : layer(s.dim))
    if (elements_[id] == s) return id;
  throw std::domain_error("subspace not found");
}

nlohmann::json SubspacePoset::descriptor() const {
  return {{"type", "subspace"}, {"n", lattice_.n()}, {"q", lattice_.q()}};
}

std::unique_ptr<GradedPoset> make_poset(const nlohmann::json& d) {
  const std::string type = d.at("type").get<std::string>();
  if (type == "chain_product")
    return std::make_unique<ChainProductPoset>(ChainProduct(d.at("n").get<int>(), d.at("k").get<int>()));
  if (type == "subspace")
    return std::make_unique<SubspacePoset>(SubspaceLattice(d.at("q").get<int>(), d.at("n").get<int>()));
  throw std::domain_error("unknown poset type '" + type + "'");
}

nlohmann::json parse_poset_spec(std::string_view spec) {
  auto parts = std::vector<std::string_view>{};
  std::size_t start = 0;
  while (true) {
    const std::size_t colon = spec.find(':', start);
    parts.push_back(spec.substr(start, colon == spec.npos ? spec.npos : colon - start));
    if (colon == spec.npos) break;
    start = colon + 1;
  }
  auto num = [](std::string_view s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) throw std::domain_error("bad number in poset spec");
    return v;
  };
  if (parts.size() == 3 && parts[0] == "chain")
    return {{"type", "chain_product"}, {"n", num(parts[1])}, {"k", num(parts[2])}};
  if (parts.size() == 3 && parts[0] == "subspace")
    return {{"type", "subspace"}, {"q", num(parts[1])}, {"n", num(parts[2])}};
  throw std::domain_error("poset spec must be chain:N:K or subspace:Q:N");
}

}  // namespace cpairs
