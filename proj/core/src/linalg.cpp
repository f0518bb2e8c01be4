#include "superschur/linalg.hpp"

#include <cassert>
#include <utility>

namespace superschur {

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

void axpy(Vec& y, const Scalar& a, const Vec& x) {
  assert(y.size() == x.size());
  if (a == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0) y[i] += a * x[i];
  }
}

Vec scaled(const Vec& x, const Scalar& a) {
  Vec y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = a * x[i];
  return y;
}

std::string to_string(const Vec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + "]";
}

Matrix rref(Matrix rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
    std::size_t pivot = next;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[next], rows[pivot]);
    const Scalar inv = 1 / rows[next][c];
    for (auto& x : rows[next]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || rows[r][c] == 0) continue;
      const Scalar f = -rows[r][c];
      axpy(rows[r], f, rows[next]);
    }
    ++next;
  }
  rows.resize(next);
  return rows;
}

std::vector<std::size_t> pivot_columns(const Matrix& echelon) {
  std::vector<std::size_t> pivots;
  pivots.reserve(echelon.size());
  for (const auto& row : echelon) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    pivots.push_back(c);
  }
  return pivots;
}

Vec reduce(Vec v, const Matrix& echelon) {
  const auto pivots = pivot_columns(echelon);
  for (std::size_t r = 0; r < echelon.size(); ++r) {
    if (v[pivots[r]] != 0) {
      const Scalar f = -v[pivots[r]];
      axpy(v, f, echelon[r]);
    }
  }
  return v;
}

bool in_span(const Vec& v, const Matrix& echelon) { return is_zero(reduce(v, echelon)); }

std::size_t rank(Matrix rows) { return rref(std::move(rows)).size(); }

Matrix kernel(const Matrix& equations, std::size_t columns) {
  const Matrix echelon = rref(equations);
  const auto pivots = pivot_columns(echelon);
  std::vector<bool> is_pivot(columns, false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix basis;
  for (std::size_t f = 0; f < columns; ++f) {
    if (is_pivot[f]) continue;
    Vec x(columns);
    x[f] = 1;
    for (std::size_t r = 0; r < echelon.size(); ++r) x[pivots[r]] = -echelon[r][f];
    basis.push_back(std::move(x));
  }
  return rref(std::move(basis));
}

std::optional<Vec> coordinates(const Vec& v, const Matrix& echelon) {
  const auto pivots = pivot_columns(echelon);
  Vec c(echelon.size());
  Vec rest = v;
  for (std::size_t r = 0; r < echelon.size(); ++r) {
    c[r] = rest[pivots[r]];
    if (c[r] != 0) axpy(rest, -c[r], echelon[r]);
  }
  if (!is_zero(rest)) return std::nullopt;
  return c;
}

std::optional<Matrix> inverse(const Matrix& a) {
  const std::size_t n = a.size();
  Matrix aug(n, Vec(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    assert(a[i].size() == n);
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  aug = rref(std::move(aug));
  if (aug.size() < n) return std::nullopt;
  Matrix inv(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (aug[i][i] != 1) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  }
  return inv;
}

Vec mat_vec(const Matrix& a, const Vec& x) {
  Vec y(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (a[i][j] != 0 && x[j] != 0) y[i] += a[i][j] * x[j];
    }
  }
  return y;
}

}  // namespace superschur
