#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cpairs/bigcount.hpp"

namespace cpairs {

/// The lattice V(q, n) of subspaces of F_q^n. Enumeration needs q prime;
/// the counting formulas accept any q >= 2.
class SubspaceLattice {
 public:
  SubspaceLattice(int q, int n);

  int q() const { return q_; }
  int n() const { return n_; }
  BigCount element_count() const;

  friend bool operator==(const SubspaceLattice&, const SubspaceLattice&) = default;

 private:
  int q_;
  int n_;
};

/// A subspace stored by its reduced row-echelon basis (dim rows of n entries).
struct Subspace {
  int n = 0;
  int dim = 0;
  std::vector<int> rref;  // row-major, dim * n entries in [0, q)

  int at(int row, int col) const { return rref[static_cast<std::size_t>(row * n + col)]; }
  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend auto operator<=>(const Subspace&, const Subspace&) = default;
};

bool is_prime(int q);

/// Gaussian binomial [n choose i]_q as [n]!/([i]![n-i]!) with [m] = q^m - 1.
BigCount gaussian(int n, int i, int q);

/// Every subspace exactly once, grouped by dimension.
std::vector<Subspace> enumerate_subspaces(const SubspaceLattice& lattice);

/// Row-reduces an arbitrary spanning set (rows of n entries mod q).
Subspace span_of(const SubspaceLattice& lattice, const std::vector<std::vector<int>>& rows);

/// T is a subspace of S.
bool contains(const SubspaceLattice& lattice, const Subspace& s, const Subspace& t);

/// Rows of n digits joined by '/'; the zero space is "".
std::string encode(const Subspace& s);
Subspace decode(const SubspaceLattice& lattice, std::string_view text);

struct PropertyQCheck {
  std::string condition;  // Q1..Q4
  int rank_b = 0;
  int rank_a = 0;
  int offset = 0;
  BigCount lhs;
  BigCount rhs;
  bool holds = true;
};

struct PropertyQReport {
  int q = 0;
  int n = 0;
  std::vector<PropertyQCheck> checks;
  std::vector<PropertyQCheck> violations;
  bool holds() const { return violations.empty(); }
};

/// Checks (Q1)-(Q4) using the rank-only neighbor counts of V(q, n):
/// [m choose i]_q below a rank-m space, [n-m choose i]_q above it.
PropertyQReport check_property_q(const SubspaceLattice& lattice);

struct RankProfileReport {
  std::vector<BigCount> profile;
  bool symmetric = true;
  bool unimodal = true;
};

RankProfileReport check_rank_profile(const SubspaceLattice& lattice);

/// True when the values rise weakly to a peak and then fall weakly.
bool is_unimodal(const std::vector<BigCount>& values);

}  // namespace cpairs
