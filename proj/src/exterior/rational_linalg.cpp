#include "cayley/exterior/rational_linalg.hpp"

#include <stdexcept>

namespace cayley::exterior {

RowEchelon rref(RationalMatrix m, const std::vector<int>& column_order) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (const auto& row : m)
    if (row.size() != cols) throw std::invalid_argument("rref: ragged matrix");
  std::vector<int> order = column_order;
  if (order.empty())
    for (std::size_t c = 0; c < cols; ++c) order.push_back(static_cast<int>(c));

  RowEchelon out;
  std::size_t r = 0;
  for (int c : order) {
    if (r == rows) break;
    std::size_t piv = r;
    while (piv < rows && sgn(m[piv][c]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  m.resize(r);
  out.reduced = std::move(m);
  return out;
}

int rank(const RationalMatrix& m) { return static_cast<int>(rref(m).pivot_columns.size()); }

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m, const std::vector<int>& column_order) {
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  RowEchelon e = rref(m, column_order);
  std::vector<bool> is_pivot(cols, false);
  for (int c : e.pivot_columns) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t k = 0; k < e.pivot_columns.size(); ++k) v[e.pivot_columns[k]] = -e.reduced[k][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& m, const std::vector<Rational>& b) {
  if (m.size() != b.size()) throw std::invalid_argument("solve: size mismatch");
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  RationalMatrix aug = m;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  std::vector<int> order;
  for (std::size_t c = 0; c < cols; ++c) order.push_back(static_cast<int>(c));
  RowEchelon e = rref(aug, order);
  // Remaining rows with a nonzero right-hand side witness inconsistency.
  RowEchelon full = rref(aug);
  for (int c : full.pivot_columns)
    if (c == static_cast<int>(cols)) return std::nullopt;
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t k = 0; k < e.pivot_columns.size(); ++k) x[e.pivot_columns[k]] = e.reduced[k][cols];
  return x;
}

}  // namespace cayley::exterior
