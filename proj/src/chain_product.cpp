#include "cpairs/chain_product.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace cpairs {

namespace {

int floor_half(int x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

// Product of (1 + x + ... + x^v) over the given values, grouped by value.
Poly capped_product(std::span<const int> values, std::size_t max_degree) {
  std::vector<unsigned> mult;
  for (int v : values) {
    if (static_cast<std::size_t>(v) >= mult.size()) mult.resize(static_cast<std::size_t>(v) + 1, 0);
    ++mult[static_cast<std::size_t>(v)];
  }
  Poly out{BigCount(1)};
  for (std::size_t v = 1; v < mult.size(); ++v) {
    if (mult[v] == 0) continue;
    out = poly_mul(out, poly_pow(chain_poly(static_cast<int>(v)), mult[v], max_degree), max_degree);
  }
  return out;
}

void check_same_shape(const ChainProduct& p, const Element& a) {
  if (static_cast<int>(a.size()) != p.n()) throw std::domain_error("element dimension mismatch");
  for (int c : a.coords())
    if (c > p.k()) throw std::domain_error("element coordinate exceeds k");
}

}  // namespace

ChainProduct::ChainProduct(int n, int k) : n_(n), k_(k) {
  if (n < 1 || k < 1) throw std::domain_error("ChainProduct needs n >= 1 and k >= 1");
}

BigCount ChainProduct::element_count() const {
  BigCount r = 1;
  for (int i = 0; i < n_; ++i) r *= (k_ + 1);
  return r;
}

Element::Element(const ChainProduct& p, std::vector<int> coords) : coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != p.n()) throw std::domain_error("element has wrong number of coordinates");
  for (int c : coords_) {
    if (c < 0 || c > p.k()) throw std::domain_error("element coordinate out of range");
    rank_ += c;
  }
}

int Element::count_of(int v) const {
  return static_cast<int>(std::count(coords_.begin(), coords_.end(), v));
}

LayerWindow middle_window(int poset_rank, int j) {
  if (j < 0 || j > poset_rank + 1) throw std::domain_error("middle_window: j out of range");
  return {floor_half(poset_rank - j) + 1, floor_half(poset_rank + j)};
}

std::vector<BigCount> layer_sizes(const ChainProduct& p) {
  Poly poly = poly_pow(chain_poly(p.k()), static_cast<unsigned>(p.n()));
  poly.resize(static_cast<std::size_t>(p.rank()) + 1, 0);
  return poly;
}

BigCount layer_size(const ChainProduct& p, int r) {
  if (r < 0 || r > p.rank()) throw std::domain_error("layer_size: rank out of range");
  return layer_sizes(p)[static_cast<std::size_t>(r)];
}

BigCount sigma(const ChainProduct& p, int j) {
  if (j < 0 || j > p.rank() + 1) throw std::domain_error("sigma: j out of range");
  const auto sizes = layer_sizes(p);
  const LayerWindow w = middle_window(p.rank(), j);
  BigCount total = 0;
  for (int r = w.lo; r <= w.hi; ++r) total += sizes[static_cast<std::size_t>(r)];
  return total;
}

Order compare(const Element& a, const Element& b) {
  if (a.size() != b.size()) throw std::domain_error("compare: dimension mismatch");
  bool le = true;
  bool ge = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) le = false;
    if (a[i] < b[i]) ge = false;
  }
  if (le && ge) return Order::Equal;
  if (le) return Order::Less;
  if (ge) return Order::Greater;
  return Order::Incomparable;
}

Element complement(const ChainProduct& p, const Element& a) {
  check_same_shape(p, a);
  std::vector<int> c(a.coords().begin(), a.coords().end());
  for (int& v : c) v = p.k() - v;
  return Element(p, std::move(c));
}

BigCount neighbor_count(const ChainProduct& p, const Element& a, int r) {
  check_same_shape(p, a);
  if (r < 0 || r > p.rank()) throw std::domain_error("neighbor_count: rank out of range");
  if (r == a.rank()) return 1;
  if (r < a.rank()) return coefficient(capped_product(a.coords(), static_cast<std::size_t>(r)), r);
  std::vector<int> room(a.coords().begin(), a.coords().end());
  for (int& v : room) v = p.k() - v;
  const int up = r - a.rank();
  return coefficient(capped_product(room, static_cast<std::size_t>(up)), up);
}

BigCount delta(const ChainProduct& p, const Element& b, int a) {
  check_same_shape(p, b);
  if (a < 0) throw std::domain_error("delta: negative rank");
  if (a > b.rank()) return 0;
  return coefficient(capped_product(b.coords(), static_cast<std::size_t>(a)), a);
}

BigCount delta_min(const ChainProduct& p, int b, int a) {
  if (!(0 < a && a < b && b <= p.rank())) throw std::domain_error("delta_min needs 0 < a < b <= nk");
  // Coordinate order does not affect delta, so walk non-increasing profiles.
  std::optional<BigCount> best;
  std::vector<int> profile(static_cast<std::size_t>(p.n()), 0);
  auto rec = [&](auto&& self, int pos, int remaining, int cap) -> void {
    if (pos == p.n()) {
      if (remaining != 0) return;
      BigCount d = coefficient(capped_product(profile, static_cast<std::size_t>(a)), a);
      if (!best || d < *best) best = d;
      return;
    }
    const int slots = p.n() - pos;
    for (int v = std::min(cap, remaining); v >= 0; --v) {
      if (v * slots < remaining) break;
      profile[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, remaining - v, v);
    }
  };
  rec(rec, 0, b, p.k());
  if (!best) throw std::domain_error("delta_min: empty layer");
  return *best;
}

Element bstar_reduce(const ChainProduct& p, const Element& b, int target) {
  check_same_shape(p, b);
  if (!(target >= 0 && b.rank() > target)) throw std::domain_error("bstar_reduce needs |B| > target >= 0");
  std::vector<int> c(b.coords().begin(), b.coords().end());
  int rank = b.rank();
  auto all_binary = [&] { return std::all_of(c.begin(), c.end(), [](int v) { return v <= 1; }); };
  while (!all_binary() && rank != target + 1) {
    auto it = std::find_if(c.begin(), c.end(), [](int v) { return v >= 2; });
    --*it;
    --rank;
  }
  return Element(p, std::move(c));
}

char digit_char(int v) {
  if (v < 0 || v >= 36) throw std::domain_error("digit out of encodable range");
  return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + v - 10);
}

int digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  throw std::domain_error(std::string("invalid digit '") + c + "'");
}

std::string encode(const ChainProduct& p, const Element& a) {
  check_same_shape(p, a);
  std::string s;
  s.reserve(a.size());
  for (int c : a.coords()) s.push_back(digit_char(c));
  return s;
}

Element decode(const ChainProduct& p, std::string_view text) {
  if (static_cast<int>(text.size()) != p.n()) throw std::domain_error("element encoding has wrong length");
  std::vector<int> c;
  c.reserve(text.size());
  for (char ch : text) c.push_back(digit_value(ch));
  return Element(p, std::move(c));
}

}  // namespace cpairs
