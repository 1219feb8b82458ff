#include "cpairs/bigcount.hpp"

#include <algorithm>
#include <stdexcept>

namespace cpairs {

Poly chain_poly(int len) {
  if (len < 0) throw std::domain_error("chain_poly: negative length");
  return Poly(static_cast<std::size_t>(len) + 1, BigCount(1));
}

Poly poly_mul(const Poly& a, const Poly& b, std::size_t max_degree) {
  if (a.empty() || b.empty()) return {};
  std::size_t deg = a.size() + b.size() - 2;
  if (max_degree != kNoTruncation) deg = std::min(deg, max_degree);
  Poly out(deg + 1, BigCount(0));
  for (std::size_t i = 0; i < a.size() && i <= deg; ++i) {
    if (a[i] == 0) continue;
    const std::size_t jmax = std::min(b.size() - 1, deg - i);
    for (std::size_t j = 0; j <= jmax; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly poly_pow(const Poly& base, unsigned exponent, std::size_t max_degree) {
  Poly result{BigCount(1)};
  Poly sq = base;
  while (exponent > 0) {
    if (exponent & 1u) result = poly_mul(result, sq, max_degree);
    exponent >>= 1;
    if (exponent > 0) sq = poly_mul(sq, sq, max_degree);
  }
  return result;
}

BigCount coefficient(const Poly& p, long e) {
  if (e < 0 || static_cast<std::size_t>(e) >= p.size()) return 0;
  return p[static_cast<std::size_t>(e)];
}

BigCount binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigCount r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

BigCount floor_div(const BigCount& num, const BigCount& den) {
  if (den == 0) throw std::domain_error("floor_div: zero denominator");
  BigCount q = num / den;  // truncates toward zero
  BigCount r = num - q * den;
  if (r != 0 && ((r < 0) != (den < 0))) q -= 1;
  return q;
}

std::string to_string(const BigCount& v) { return v.str(); }

std::uint64_t to_u64(const BigCount& v) {
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max())
    throw std::overflow_error("count does not fit in 64 bits");
  return v.convert_to<std::uint64_t>();
}

}  // namespace cpairs
