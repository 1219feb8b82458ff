#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cpairs/chain_product.hpp"
#include "cpairs/family.hpp"
#include "cpairs/graded_poset.hpp"

namespace cpairs {

/// Chains as element sequences of increasing rank.
struct SCD {
  std::vector<std::vector<Element>> chains;
};

/// Inductive product construction: an SCD of P and the chain 0..k give one
/// of P x chain by splitting each grid c_0..c_m x 0..k into hooks.
SCD build_scd(const ChainProduct& p);

struct SCDCheck {
  bool partition = true;       // every element exactly once
  bool saturated = true;       // consecutive ranks differ by one along <
  bool symmetric = true;       // first + last rank = nk
  bool chain_count = true;     // = middle layer size
  std::size_t chains = 0;
  bool ok() const { return partition && saturated && symmetric && chain_count; }
};
SCDCheck check_scd(const ChainProduct& p, const SCD& scd);

/// Chain index of every element (by chain-product id).
std::vector<std::size_t> scd_chain_of(const ChainProductPoset& p, const SCD& scd);

/// Comparable member pairs that share a chain.
Count pairs_in_common_chains(const Family& f, const std::vector<std::size_t>& chain_of);

/// Ranks n-2..n+3 of {0,1,2}^n without {B in L_{n+3} : b_0 = 0} and without
/// X = (0,0,1,...,1).
Family build_family_sec3(const ChainProductPoset& p);

ElementId sec3_x(const ChainProductPoset& p);
/// (0,2,2,2,2,1,...,1)
ElementId sec3_b(const ChainProductPoset& p);

struct Sec3Report {
  int n = 0;
  std::size_t size = 0;
  BigCount expected_size;  // Sigma_6 - C(n,3) - 1
  std::size_t removed_top = 0;
  Count comp_f = 0;
  Count comp_x = 0;  // comp(X, F)
  Count comp_b = 0;  // comp(B, F)
  BigCount x_lower;  // C(n,5) + C(n,4)
  Count centered_upper = 0;  // partial layer n+3
  Count centered_lower = 0;  // partial layer n-3
  Count centered_min = 0;
  Count comp_cc_star = 0;    // F + X - B, verified by recount
  bool x_below_b = false;
  bool beats_centered() const { return comp_f < centered_min; }
};
Sec3Report compare_sec3(int n, int workers = 1);

struct Sec5Construction {
  int n = 0;
  int k = 0;
  int j = 0;
  LayerWindow window;
  Element b;
  Element c;
};
/// Bumps j by one when nk + j is odd unless `strict` is set, which throws instead.
Sec5Construction build_family_sec5(int n, int k, int j, bool strict = true);

struct Sec5Report {
  explicit Sec5Report(Sec5Construction c) : construction(std::move(c)) {}
  Sec5Construction construction;
  BigCount delta_b;  // sum over l = 1..j-1
  BigCount delta_c;  // sum over l = 1..j
  bool b_below_c = false;
  BigCount comp_diff;  // comp(F') - comp(F)
  BigCount binom_j_minus_1;
  int zeros_in_c = 0;
};
Sec5Report delta_sums_sec5(const Sec5Construction& s);

/// Direct enumeration of the same sums; for small nk.
Sec5Report delta_sums_sec5_enumerated(const Sec5Construction& s);

/// f(c) = C(n,c) C(n-c,c+1): elements of L_{n+1}(n,2) with c zeros.
BigCount averagethird_f(int n, int c);

}  // namespace cpairs
