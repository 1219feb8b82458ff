#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cpairs/bigcount.hpp"

namespace cpairs {

/// The poset {0,...,k}^n under the coordinatewise order.
class ChainProduct {
 public:
  ChainProduct(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  int rank() const { return n_ * k_; }
  BigCount element_count() const;

  friend bool operator==(const ChainProduct&, const ChainProduct&) = default;

 private:
  int n_;
  int k_;
};

/// A point of {0,...,k}^n with its cached rank (coordinate sum).
class Element {
 public:
  Element(const ChainProduct& p, std::vector<int> coords);

  std::span<const int> coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  int operator[](std::size_t i) const { return coords_[i]; }
  int rank() const { return rank_; }
  /// Number of coordinates equal to v (a_v in the k = 2 notation).
  int count_of(int v) const;

  friend bool operator==(const Element& a, const Element& b) { return a.coords_ == b.coords_; }
  friend auto operator<=>(const Element& a, const Element& b) { return a.coords_ <=> b.coords_; }

 private:
  std::vector<int> coords_;
  int rank_ = 0;
};

/// Inclusive rank interval [lo, hi]; empty when hi < lo.
struct LayerWindow {
  int lo = 0;
  int hi = -1;

  int width() const { return hi >= lo ? hi - lo + 1 : 0; }
  bool contains(int r) const { return lo <= r && r <= hi; }
  friend bool operator==(const LayerWindow&, const LayerWindow&) = default;
};

/// The j middle layers of a graded poset of rank R: ranks
/// floor((R-j)/2)+1 .. floor((R+j)/2). With an ambiguous middle the extra
/// layer sits above.
LayerWindow middle_window(int poset_rank, int j);

enum class Order { Less, Greater, Equal, Incomparable };

std::vector<BigCount> layer_sizes(const ChainProduct& p);
BigCount layer_size(const ChainProduct& p, int r);
BigCount sigma(const ChainProduct& p, int j);

Order compare(const Element& a, const Element& b);
Element complement(const ChainProduct& p, const Element& a);

/// |{B : |B| = r, B <= A or A <= B}|; A itself counts when r = |A|.
BigCount neighbor_count(const ChainProduct& p, const Element& a, int r);

/// Elements of rank a below B. Zero when a > |B|.
BigCount delta(const ChainProduct& p, const Element& b, int a);

/// min over |B| = b of delta(B, a), for 0 < a < b <= nk.
BigCount delta_min(const ChainProduct& p, int b, int a);

/// Decrements coordinates >= 2 (lowest index first) until every coordinate
/// is 0/1 or the rank reaches target + 1.
Element bstar_reduce(const ChainProduct& p, const Element& b, int target);

/// Base-(k+1) digit string, coordinate 1 first. Digits past 9 use a-z.
std::string encode(const ChainProduct& p, const Element& a);
Element decode(const ChainProduct& p, std::string_view text);

char digit_char(int v);
int digit_value(char c);

}  // namespace cpairs
