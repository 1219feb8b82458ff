#include "cpairs/kernels.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

#include <omp.h>

#include "cpairs/errors.hpp"

namespace cpairs::kernels {

std::size_t Grid::size() const {
  std::size_t s = 1;
  for (int i = 0; i < n; ++i) s *= static_cast<std::size_t>(k) + 1;
  return s;
}

namespace {

std::size_t stride_of(Grid g, int coord) {
  std::size_t s = 1;
  for (int i = coord + 1; i < g.n; ++i) s *= static_cast<std::size_t>(g.k) + 1;
  return s;
}

void check_size(std::span<const std::uint32_t> values, Grid g) {
  if (values.size() != g.size()) throw std::domain_error("grid buffer has wrong size");
}

// One coordinate pass: running sums along every line of that coordinate.
// A line is (block, offset); lines are independent.
template <bool Up>
void zeta_line(std::uint32_t* v, std::size_t start, std::size_t stride, int k) {
  if constexpr (Up) {
    for (int t = k - 1; t >= 0; --t) v[start + static_cast<std::size_t>(t) * stride] += v[start + static_cast<std::size_t>(t + 1) * stride];
  } else {
    for (int t = 1; t <= k; ++t) v[start + static_cast<std::size_t>(t) * stride] += v[start + static_cast<std::size_t>(t - 1) * stride];
  }
}

template <bool Up>
void zeta_serial(std::span<std::uint32_t> values, Grid g) {
  check_size(values, g);
  const std::size_t base = static_cast<std::size_t>(g.k) + 1;
  const std::size_t lines = values.size() / base;
  for (int c = 0; c < g.n; ++c) {
    const std::size_t s = stride_of(g, c);
    for (std::size_t line = 0; line < lines; ++line)
      zeta_line<Up>(values.data(), (line / s) * s * base + line % s, s, g.k);
  }
}

template <bool Up>
void zeta_parallel(std::span<std::uint32_t> values, Grid g, int workers) {
  check_size(values, g);
  const std::size_t base = static_cast<std::size_t>(g.k) + 1;
  const auto lines = static_cast<std::int64_t>(values.size() / base);
  std::uint32_t* data = values.data();
  for (int c = 0; c < g.n; ++c) {
    const std::size_t s = stride_of(g, c);
#pragma omp parallel for num_threads(workers) schedule(static)
    for (std::int64_t line = 0; line < lines; ++line) {
      const auto l = static_cast<std::size_t>(line);
      zeta_line<Up>(data, (l / s) * s * base + l % s, s, g.k);
    }
  }
}

std::vector<std::uint32_t> widen(std::span<const std::uint8_t> indicator) {
  return std::vector<std::uint32_t>(indicator.begin(), indicator.end());
}

}  // namespace

void down_zeta_serial(std::span<std::uint32_t> values, Grid grid) { zeta_serial<false>(values, grid); }
void down_zeta_parallel(std::span<std::uint32_t> values, Grid grid, int workers) {
  zeta_parallel<false>(values, grid, workers);
}
void up_zeta_serial(std::span<std::uint32_t> values, Grid grid) { zeta_serial<true>(values, grid); }
void up_zeta_parallel(std::span<std::uint32_t> values, Grid grid, int workers) {
  zeta_parallel<true>(values, grid, workers);
}

Count comp_transform_serial(std::span<const std::uint8_t> indicator, Grid grid) {
  auto below = widen(indicator);
  down_zeta_serial(below, grid);
  Count total = 0;
  for (std::size_t x = 0; x < below.size(); ++x)
    if (indicator[x]) total += below[x] - 1;
  return total;
}

Count comp_transform_parallel(std::span<const std::uint8_t> indicator, Grid grid, int workers) {
  auto below = widen(indicator);
  down_zeta_parallel(below, grid, workers);
  Count total = 0;
  const auto size = static_cast<std::int64_t>(below.size());
#pragma omp parallel for num_threads(workers) reduction(+ : total) schedule(static)
  for (std::int64_t x = 0; x < size; ++x)
    if (indicator[static_cast<std::size_t>(x)]) total += below[static_cast<std::size_t>(x)] - 1;
  return total;
}

std::vector<std::uint32_t> degrees_serial(std::span<const std::uint8_t> indicator, Grid grid) {
  auto below = widen(indicator);
  auto above = below;
  down_zeta_serial(below, grid);
  up_zeta_serial(above, grid);
  for (std::size_t x = 0; x < below.size(); ++x) below[x] = below[x] + above[x] - 2u * indicator[x];
  return below;
}

std::vector<std::uint32_t> degrees_parallel(std::span<const std::uint8_t> indicator, Grid grid, int workers) {
  auto below = widen(indicator);
  auto above = below;
  down_zeta_parallel(below, grid, workers);
  up_zeta_parallel(above, grid, workers);
  const auto size = static_cast<std::int64_t>(below.size());
#pragma omp parallel for num_threads(workers) schedule(static)
  for (std::int64_t x = 0; x < size; ++x) {
    const auto i = static_cast<std::size_t>(x);
    below[i] = below[i] + above[i] - 2u * indicator[i];
  }
  return below;
}

namespace {

void check_problem(const SubsetProblem& p) {
  if (p.items() > kMaxScanItems) throw CapacityError("subset scan limited to 32 items");
  if (!p.weight.empty() && p.weight.size() != p.adjacency.size())
    throw std::domain_error("subset problem weight size mismatch");
}

std::int64_t weight_of(const SubsetProblem& p, int i) {
  return p.weight.empty() ? 0 : p.weight[static_cast<std::size_t>(i)];
}

SubsetScanResult empty_result(int m) {
  return {std::vector<std::int64_t>(static_cast<std::size_t>(m) + 1, std::numeric_limits<std::int64_t>::max()),
          std::vector<std::uint64_t>(static_cast<std::size_t>(m) + 1, 0)};
}

inline void offer(SubsetScanResult& r, int card, std::int64_t value, std::uint64_t mask) {
  auto& b = r.best[static_cast<std::size_t>(card)];
  auto& w = r.witness[static_cast<std::size_t>(card)];
  if (value < b || (value == b && lex_less(mask, w))) {
    b = value;
    w = mask;
  }
}

void merge_into(SubsetScanResult& into, const SubsetScanResult& from) {
  for (std::size_t c = 0; c < from.best.size(); ++c)
    if (from.best[c] != std::numeric_limits<std::int64_t>::max()) offer(into, static_cast<int>(c), from.best[c], from.witness[c]);
}

// Gray walk over the low `low_bits` bits with the high bits fixed to `prefix`.
SubsetScanResult scan_shard(const SubsetProblem& p, std::uint64_t prefix, int low_bits) {
  const int m = p.items();
  SubsetScanResult r = empty_result(m);
  std::uint64_t mask = prefix;
  std::int64_t value = subset_objective(p, mask);
  int card = std::popcount(mask);
  offer(r, card, value, mask);
  const std::uint64_t steps = std::uint64_t{1} << low_bits;
  const std::uint64_t* adj = p.adjacency.data();
  const bool weighted = !p.weight.empty();
  for (std::uint64_t t = 1; t < steps; ++t) {
    const int i = std::countr_zero(t);
    const std::uint64_t bit = std::uint64_t{1} << i;
    const std::int64_t delta =
        std::popcount(adj[i] & mask) + (weighted ? p.weight[static_cast<std::size_t>(i)] : 0);
    if (mask & bit) {
      mask ^= bit;
      value -= delta;
      --card;
    } else {
      mask ^= bit;
      value += delta;
      ++card;
    }
    auto& b = r.best[static_cast<std::size_t>(card)];
    if (value < b || (value == b && lex_less(mask, r.witness[static_cast<std::size_t>(card)]))) {
      b = value;
      r.witness[static_cast<std::size_t>(card)] = mask;
    }
  }
  return r;
}

}  // namespace

std::int64_t subset_objective(const SubsetProblem& p, std::uint64_t mask) {
  std::int64_t v = 0;
  for (int i = 0; i < p.items(); ++i) {
    if (!((mask >> i) & 1u)) continue;
    v += weight_of(p, i);
    const std::uint64_t higher = (i + 1 >= 64) ? 0 : (mask >> (i + 1)) << (i + 1);
    v += std::popcount(p.adjacency[static_cast<std::size_t>(i)] & higher);
  }
  return v;
}

SubsetScanResult subset_scan_reference(const SubsetProblem& p) {
  check_problem(p);
  const int m = p.items();
  SubsetScanResult r = empty_result(m);
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < total; ++mask) offer(r, std::popcount(mask), subset_objective(p, mask), mask);
  return r;
}

SubsetScanResult subset_scan_serial(const SubsetProblem& p) {
  check_problem(p);
  return scan_shard(p, 0, p.items());
}

SubsetScanResult subset_scan_parallel(const SubsetProblem& p, int workers, int prefix_bits) {
  check_problem(p);
  const int m = p.items();
  prefix_bits = std::clamp(prefix_bits, 0, m);
  const int low = m - prefix_bits;
  const auto shards = static_cast<std::int64_t>(std::uint64_t{1} << prefix_bits);
  std::vector<SubsetScanResult> parts(static_cast<std::size_t>(shards));
#pragma omp parallel for num_threads(workers) schedule(dynamic, 1)
  for (std::int64_t s = 0; s < shards; ++s)
    parts[static_cast<std::size_t>(s)] = scan_shard(p, static_cast<std::uint64_t>(s) << low, low);
  SubsetScanResult out = empty_result(m);
  for (const auto& part : parts) merge_into(out, part);
  return out;
}

std::vector<std::pair<std::uint64_t, std::int64_t>> gray_checkpoints(const SubsetProblem& p, std::uint64_t stride) {
  check_problem(p);
  if (stride == 0) throw std::domain_error("gray_checkpoints: zero stride");
  std::vector<std::pair<std::uint64_t, std::int64_t>> out;
  const int m = p.items();
  std::uint64_t mask = 0;
  std::int64_t value = 0;
  const std::uint64_t steps = std::uint64_t{1} << m;
  for (std::uint64_t t = 1; t < steps; ++t) {
    const int i = std::countr_zero(t);
    const std::uint64_t bit = std::uint64_t{1} << i;
    const std::int64_t delta = std::popcount(p.adjacency[static_cast<std::size_t>(i)] & mask) + weight_of(p, i);
    mask ^= bit;
    value += (mask & bit) ? delta : -delta;
    if (t % stride == 0) out.emplace_back(mask, value);
  }
  out.emplace_back(mask, value);
  return out;
}

}  // namespace cpairs::kernels
