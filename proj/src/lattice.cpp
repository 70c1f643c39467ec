#include "branecharge/lattice.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "branecharge/error.hpp"

namespace branecharge {

std::int64_t dot(const IntVector& a, const IntVector& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const std::vector<Rational>& a, const IntVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rational(static_cast<long>(b[i]));
  return s;
}

std::int64_t content(const IntVector& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, std::abs(x));
  return g;
}

IntVector primitive(IntVector v) {
  const auto g = content(v);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
  return v;
}

std::int64_t determinant(const IntMatrix& rows) {
  const std::size_t n = rows.size();
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw Error(Errc::DimensionMismatch, "determinant of a non-square matrix");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = rows[i][j];
  }
  int sign = 1;
  __int128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return static_cast<std::int64_t>(sign * a[n - 1][n - 1]);
}

namespace {

// Gauss-Jordan over Q on an augmented matrix; returns the rank and leaves the
// matrix in reduced row echelon form.
int reduce(RationalMatrix& m, std::size_t cols) {
  int r = 0;
  for (std::size_t c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Rational pivot = m[r][c];
    for (auto& x : m[r]) x /= pivot;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == static_cast<std::size_t>(r) || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

RationalMatrix to_rational(const IntMatrix& rows) {
  RationalMatrix m;
  m.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<Rational> r;
    r.reserve(row.size());
    for (auto x : row) r.emplace_back(static_cast<long>(x));
    m.push_back(std::move(r));
  }
  return m;
}

}  // namespace

int rank(const IntMatrix& rows) {
  if (rows.empty()) return 0;
  auto m = to_rational(rows);
  return reduce(m, rows.front().size());
}

IntVector orthogonal_complement(const IntMatrix& rows, int n) {
  IntVector out(n, 0);
  for (int col = 0; col < n; ++col) {
    IntMatrix minor;
    minor.reserve(rows.size());
    for (const auto& row : rows) {
      IntVector r;
      r.reserve(n - 1);
      for (int j = 0; j < n; ++j) {
        if (j != col) r.push_back(row[j]);
      }
      minor.push_back(std::move(r));
    }
    const auto d = determinant(minor);
    out[col] = (col % 2 == 0) ? d : -d;
  }
  return out;
}

std::optional<RationalMatrix> inverse(const IntMatrix& rows) {
  const std::size_t n = rows.size();
  auto m = to_rational(rows);
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw Error(Errc::DimensionMismatch, "inverse of a non-square matrix");
    for (std::size_t j = 0; j < n; ++j) m[i].emplace_back(i == j ? 1 : 0);
  }
  if (reduce(m, n) < static_cast<int>(n)) return std::nullopt;
  RationalMatrix inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i].assign(m[i].begin() + n, m[i].end());
  return inv;
}

std::optional<std::vector<Rational>> solve(const IntMatrix& rows,
                                           std::span<const Rational> rhs) {
  const std::size_t n = rows.size();
  auto m = to_rational(rows);
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw Error(Errc::DimensionMismatch, "solve with a non-square matrix");
    m[i].push_back(rhs[i]);
  }
  if (reduce(m, n) < static_cast<int>(n)) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n];
  return x;
}

int affine_dimension(std::span<const IntVector> points) {
  if (points.empty()) return -1;
  IntMatrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    IntVector d(points[i].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(d));
  }
  return rank(diffs);
}

}  // namespace branecharge
