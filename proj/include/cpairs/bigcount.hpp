#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cpairs {

/// Exact integer used for layer sizes, shadow counts and binomials.
using BigCount = boost::multiprecision::cpp_int;

/// Comparable-pair counts of materialized families. A family with N members
/// has fewer than N^2/2 pairs, so 64 bits cover every family we can store.
using Count = std::uint64_t;

/// Dense polynomial with exact coefficients, index = exponent.
using Poly = std::vector<BigCount>;

inline constexpr std::size_t kNoTruncation = std::numeric_limits<std::size_t>::max();

/// 1 + x + ... + x^len
Poly chain_poly(int len);

Poly poly_mul(const Poly& a, const Poly& b, std::size_t max_degree = kNoTruncation);
Poly poly_pow(const Poly& base, unsigned exponent, std::size_t max_degree = kNoTruncation);

/// Coefficient of x^e, zero past the end.
BigCount coefficient(const Poly& p, long e);

/// C(n, k), zero outside 0 <= k <= n.
BigCount binomial(long n, long k);

/// Floor division for signed exact integers.
BigCount floor_div(const BigCount& num, const BigCount& den);

std::string to_string(const BigCount& v);
std::uint64_t to_u64(const BigCount& v);

}  // namespace cpairs
