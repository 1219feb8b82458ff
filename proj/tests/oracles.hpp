#pragma once

// Brute-force oracles used only by the tests. They enumerate coordinate
// vectors directly and never call the generating-function code.

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using Vec = std::vector<int>;

inline std::vector<Vec> all_vectors(int n, int k) {
  std::vector<Vec> out;
  Vec v(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(v);
    int i = n - 1;
    while (i >= 0 && v[static_cast<std::size_t>(i)] == k) v[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++v[static_cast<std::size_t>(i)];
  }
  return out;
}

inline int sum(const Vec& v) {
  int s = 0;
  for (int x : v) s += x;
  return s;
}

inline bool leq(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline long count_rank(int n, int k, int r) {
  long c = 0;
  for (const auto& v : all_vectors(n, k))
    if (sum(v) == r) ++c;
  return c;
}

/// Elements of rank r comparable with (or equal to) a.
inline long brute_neighbors(const Vec& a, int k, int r) {
  long c = 0;
  for (const auto& v : all_vectors(static_cast<int>(a.size()), k))
    if (sum(v) == r && (leq(v, a) || leq(a, v))) ++c;
  return c;
}

/// Elements of rank r below b.
inline long brute_below(const Vec& b, int k, int r) {
  long c = 0;
  for (const auto& v : all_vectors(static_cast<int>(b.size()), k))
    if (sum(v) == r && leq(v, b)) ++c;
  return c;
}

/// Pairs a < b among the listed vectors.
inline long brute_comp(const std::vector<Vec>& fam) {
  long c = 0;
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = 0; j < fam.size(); ++j)
      if (i != j && leq(fam[i], fam[j])) ++c;
  return c;
}

inline long long brute_binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
