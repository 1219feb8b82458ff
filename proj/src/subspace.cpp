#include "cpairs/subspace.hpp"

#include <cstdlib>
#include <stdexcept>

#include "cpairs/chain_product.hpp"
#include "cpairs/errors.hpp"

namespace cpairs {

namespace {

constexpr long kEnumerationGuard = 1'000'000;

int mod(long v, int q) {
  long r = v % q;
  return static_cast<int>(r < 0 ? r + q : r);
}

int inverse_mod(int a, int q) {
  // q is prime, so a^(q-2) is the inverse.
  long result = 1;
  long base = a;
  int e = q - 2;
  while (e > 0) {
    if (e & 1) result = result * base % q;
    base = base * base % q;
    e >>= 1;
  }
  return static_cast<int>(result);
}

void require_prime(const SubspaceLattice& l) {
  if (!is_prime(l.q())) throw UnsupportedError("subspace enumeration needs prime q");
}

// In-place RREF over F_q; returns the rank and compacts rows to the top.
int rref_in_place(std::vector<std::vector<int>>& rows, int n, int q) {
  int rank = 0;
  for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(pivot)]);
    auto& prow = rows[static_cast<std::size_t>(rank)];
    const int inv = inverse_mod(prow[static_cast<std::size_t>(col)], q);
    for (int& v : prow) v = mod(static_cast<long>(v) * inv, q);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank) continue;
      auto& row = rows[static_cast<std::size_t>(r)];
      const int f = row[static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (int c = 0; c < n; ++c)
        row[static_cast<std::size_t>(c)] =
            mod(row[static_cast<std::size_t>(c)] - static_cast<long>(f) * prow[static_cast<std::size_t>(c)], q);
    }
    ++rank;
  }
  rows.resize(static_cast<std::size_t>(rank));
  return rank;
}

}  // namespace

SubspaceLattice::SubspaceLattice(int q, int n) : q_(q), n_(n) {
  if (q < 2) throw std::domain_error("SubspaceLattice needs q >= 2");
  if (n < 1) throw std::domain_error("SubspaceLattice needs n >= 1");
}

BigCount SubspaceLattice::element_count() const {
  BigCount total = 0;
  for (int i = 0; i <= n_; ++i) total += gaussian(n_, i, q_);
  return total;
}

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

BigCount gaussian(int n, int i, int q) {
  if (q < 2) throw std::domain_error("gaussian: q must be >= 2");
  if (n < 0 || i < 0 || i > n) throw std::domain_error("gaussian: index out of range");
  auto qfact = [q](int m) {
    BigCount f = 1;
    BigCount qp = 1;
    for (int j = 1; j <= m; ++j) {
      qp *= q;
      f *= (qp - 1);
    }
    return f;
  };
  const BigCount num = qfact(n);
  const BigCount den = qfact(i) * qfact(n - i);
  if (num % den != 0) throw std::logic_error("gaussian: inexact division");
  return num / den;
}

std::vector<Subspace> enumerate_subspaces(const SubspaceLattice& lattice) {
  require_prime(lattice);
  if (lattice.element_count() > kEnumerationGuard)
    throw CapacityError("subspace lattice exceeds the 10^6 enumeration guard");
  const int n = lattice.n();
  const int q = lattice.q();
  std::vector<Subspace> out;
  for (int dim = 0; dim <= n; ++dim) {
    // Pivot columns as an increasing combination, free entries filled in
    // every way: right of each pivot, outside pivot columns.
    std::vector<int> pivots(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) pivots[static_cast<std::size_t>(i)] = i;
    while (true) {
      std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
      for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
      std::vector<std::size_t> free_cells;
      for (int r = 0; r < dim; ++r)
        for (int c = pivots[static_cast<std::size_t>(r)] + 1; c < n; ++c)
          if (!is_pivot[static_cast<std::size_t>(c)]) free_cells.push_back(static_cast<std::size_t>(r * n + c));
      Subspace s{n, dim, std::vector<int>(static_cast<std::size_t>(dim * n), 0)};
      for (int r = 0; r < dim; ++r) s.rref[static_cast<std::size_t>(r * n + pivots[static_cast<std::size_t>(r)])] = 1;
      std::vector<int> digits(free_cells.size(), 0);
      while (true) {
        for (std::size_t f = 0; f < free_cells.size(); ++f) s.rref[free_cells[f]] = digits[f];
        out.push_back(s);
        std::size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == q) digits[pos++] = 0;
        if (pos == digits.size()) break;
      }
      // next combination
      int i = dim - 1;
      while (i >= 0 && pivots[static_cast<std::size_t>(i)] == n - dim + i) --i;
      if (i < 0) break;
      ++pivots[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < dim; ++j) pivots[static_cast<std::size_t>(j)] = pivots[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

Subspace span_of(const SubspaceLattice& lattice, const std::vector<std::vector<int>>& rows) {
  require_prime(lattice);
  auto work = rows;
  for (auto& r : work) {
    if (static_cast<int>(r.size()) != lattice.n()) throw std::domain_error("span_of: row length mismatch");
    for (int& v : r) v = mod(v, lattice.q());
  }
  const int dim = rref_in_place(work, lattice.n(), lattice.q());
  Subspace s{lattice.n(), dim, {}};
  for (const auto& r : work) s.rref.insert(s.rref.end(), r.begin(), r.end());
  return s;
}

bool contains(const SubspaceLattice& lattice, const Subspace& s, const Subspace& t) {
  if (s.n != lattice.n() || t.n != lattice.n()) throw std::domain_error("contains: ambient dimension mismatch");
  if (t.dim > s.dim) return false;
  const int n = lattice.n();
  const int q = lattice.q();
  std::vector<int> pivot_col(static_cast<std::size_t>(s.dim));
  for (int r = 0; r < s.dim; ++r) {
    int c = 0;
    while (s.at(r, c) == 0) ++c;
    pivot_col[static_cast<std::size_t>(r)] = c;
  }
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int tr = 0; tr < t.dim; ++tr) {
    for (int c = 0; c < n; ++c) v[static_cast<std::size_t>(c)] = t.at(tr, c);
    for (int r = 0; r < s.dim; ++r) {
      const int f = v[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])];
      if (f == 0) continue;
      for (int c = 0; c < n; ++c)
        v[static_cast<std::size_t>(c)] = mod(v[static_cast<std::size_t>(c)] - static_cast<long>(f) * s.at(r, c), q);
    }
    for (int x : v)
      if (x != 0) return false;
  }
  return true;
}

std::string encode(const Subspace& s) {
  std::string out;
  for (int r = 0; r < s.dim; ++r) {
    if (r > 0) out.push_back('/');
    for (int c = 0; c < s.n; ++c) out.push_back(digit_char(s.at(r, c)));
  }
  return out;
}

Subspace decode(const SubspaceLattice& lattice, std::string_view text) {
  std::vector<std::vector<int>> rows;
  if (!text.empty()) {
    std::size_t start = 0;
    while (true) {
      const std::size_t slash = text.find('/', start);
      const std::string_view part = text.substr(start, slash == std::string_view::npos ? text.npos : slash - start);
      if (static_cast<int>(part.size()) != lattice.n()) throw std::domain_error("subspace row has wrong length");
      std::vector<int> row;
      for (char ch : part) {
        const int d = digit_value(ch);
        if (d >= lattice.q()) throw std::domain_error("subspace entry out of range");
        row.push_back(d);
      }
      rows.push_back(std::move(row));
      if (slash == std::string_view::npos) break;
      start = slash + 1;
    }
  }
  Subspace s = span_of(lattice, rows);
  if (s.dim != static_cast<int>(rows.size()) || encode(s) != text)
    throw std::domain_error("subspace encoding is not a canonical RREF basis");
  return s;
}

PropertyQReport check_property_q(const SubspaceLattice& lattice) {
  const int n = lattice.n();
  const int q = lattice.q();
  PropertyQReport rep;
  rep.q = q;
  rep.n = n;
  auto below = [&](int m, int i) { return i <= m ? gaussian(m, i, q) : BigCount(0); };
  auto above = [&](int m, int i) { return i <= n - m ? gaussian(n - m, i, q) : BigCount(0); };
  // Doubled distances keep the n/2 comparisons integral.
  auto dist2 = [n](int r) { return std::abs(2 * r - n); };
  auto record = [&](const char* cond, int b, int a, int i, BigCount lhs, BigCount rhs) {
    PropertyQCheck c{cond, b, a, i, std::move(lhs), std::move(rhs), true};
    c.holds = c.lhs <= c.rhs;
    if (!c.holds) rep.violations.push_back(c);
    rep.checks.push_back(std::move(c));
  };
  for (int b = 0; b <= n; ++b) {
    for (int a = 0; a <= n; ++a) {
      if (a == b) continue;
      if (b < a && dist2(b) < dist2(a))
        for (int i = 1; i <= a - b; ++i) record("Q1", b, a, i, above(b, i), below(a, i));
      if (b > a && dist2(b) < dist2(a))
        for (int i = 1; i <= b - a; ++i) record("Q2", b, a, i, below(b, i), above(a, i));
      if (n <= 2 * b && b < a)
        for (int i = 1; i <= a; ++i) record("Q3", b, a, i, below(b, i), below(a, i));
      if (n >= 2 * b && b > a)
        for (int i = 1; i <= n - a; ++i) record("Q4", b, a, i, above(b, i), above(a, i));
    }
  }
  return rep;
}

bool is_unimodal(const std::vector<BigCount>& values) {
  std::size_t i = 1;
  while (i < values.size() && values[i - 1] <= values[i]) ++i;
  while (i < values.size() && values[i - 1] >= values[i]) ++i;
  return i >= values.size();
}

RankProfileReport check_rank_profile(const SubspaceLattice& lattice) {
  RankProfileReport rep;
  const int n = lattice.n();
  for (int i = 0; i <= n; ++i) rep.profile.push_back(gaussian(n, i, lattice.q()));
  for (int i = 0; i <= n; ++i)
    if (rep.profile[static_cast<std::size_t>(i)] != rep.profile[static_cast<std::size_t>(n - i)]) rep.symmetric = false;
  rep.unimodal = is_unimodal(rep.profile);
  return rep;
}

}  // namespace cpairs
