#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cayley/exterior/scalar.hpp"

namespace cayley::exterior {

// Increasing index tuple over {1..8}, stored as a bitmask (bit i-1 <-> index i).
using IndexMask = std::uint8_t;

inline std::vector<int> mask_indices(IndexMask m) {
  std::vector<int> out;
  for (int i = 0; i < 8; ++i)
    if (m & (1u << i)) out.push_back(i + 1);
  return out;
}

inline IndexMask indices_mask(std::span<const int> idx) {
  IndexMask m = 0;
  for (int i : idx) m |= static_cast<IndexMask>(1u << (i - 1));
  return m;
}

// Sign of the permutation sorting `idx`; 0 when an index repeats.
inline int sort_sign(std::vector<int>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  return sign;
}

// Parity of the shuffle putting the indices of `a` before those of `b`.
inline int shuffle_sign(IndexMask a, IndexMask b) {
  int inversions = 0;
  for (int i = 0; i < 8; ++i)
    if (a & (1u << i)) inversions += std::popcount(static_cast<unsigned>(b & ((1u << i) - 1)));
  return (inversions & 1) ? -1 : 1;
}

template <class S>
using Vec = std::array<S, 8>;

template <FormScalar S>
class AlternatingForm {
 public:
  using Scalar = S;

  AlternatingForm() = default;
  AlternatingForm(int dim, int degree) : dim_(dim), degree_(degree) {
    if (dim < 0 || dim > 8) throw std::invalid_argument("AlternatingForm: ambient dimension must be in 0..8");
    if (degree < 0 || degree > dim)
      throw std::invalid_argument("AlternatingForm: degree " + std::to_string(degree) +
                                  " exceeds ambient dimension " + std::to_string(dim));
  }

  // dx^{i1}^...^dx^{ik} times c; indices 1-based in any order.
  static AlternatingForm monomial(std::initializer_list<int> indices, const S& c, int dim = 8) {
    return monomial(std::span<const int>(indices.begin(), indices.size()), c, dim);
  }
  static AlternatingForm monomial(std::span<const int> indices, const S& c, int dim = 8) {
    AlternatingForm f(dim, static_cast<int>(indices.size()));
    f.add_signed(indices, c);
    return f;
  }

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  const std::map<IndexMask, S>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  S coefficient(std::span<const int> indices) const {
    std::vector<int> idx(indices.begin(), indices.end());
    int sign = sort_sign(idx);
    if (sign == 0 || static_cast<int>(idx.size()) != degree_) return S(0);
    auto it = terms_.find(indices_mask(idx));
    if (it == terms_.end()) return S(0);
    return sign > 0 ? it->second : S(-it->second);
  }
  S coefficient(std::initializer_list<int> indices) const {
    return coefficient(std::span<const int>(indices.begin(), indices.size()));
  }

  void add_term(IndexMask m, const S& c) {
    if (std::popcount(static_cast<unsigned>(m)) != degree_)
      throw std::invalid_argument("AlternatingForm: term degree mismatch");
    if (dim_ < 8 && (m >> dim_) != 0) throw std::invalid_argument("AlternatingForm: index exceeds ambient dimension");
    if (ScalarTraits<S>::is_zero(c)) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
      it->second = it->second + c;
      if (ScalarTraits<S>::is_zero(it->second)) terms_.erase(it);
    }
  }

  void add_signed(std::span<const int> indices, const S& c) {
    std::vector<int> idx(indices.begin(), indices.end());
    for (int i : idx)
      if (i < 1 || i > dim_) throw std::invalid_argument("AlternatingForm: index " + std::to_string(i) + " out of range");
    int sign = sort_sign(idx);
    if (sign == 0) return;
    add_term(indices_mask(idx), sign > 0 ? c : S(-c));
  }

  AlternatingForm& operator+=(const AlternatingForm& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  AlternatingForm& operator-=(const AlternatingForm& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, S(-c));
    return *this;
  }
  AlternatingForm& operator*=(const S& s) {
    if (ScalarTraits<S>::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c = c * s;
    return *this;
  }
  friend AlternatingForm operator+(AlternatingForm a, const AlternatingForm& b) { return a += b; }
  friend AlternatingForm operator-(AlternatingForm a, const AlternatingForm& b) { return a -= b; }
  friend AlternatingForm operator*(AlternatingForm a, const S& s) { return a *= s; }
  friend AlternatingForm operator*(const S& s, AlternatingForm a) { return a *= s; }
  AlternatingForm operator-() const { return *this * S(-1); }
  friend bool operator==(const AlternatingForm& a, const AlternatingForm& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  // Max |coefficient|; 0 for the zero form.
  double max_abs() const {
    double m = 0;
    for (const auto& [k, c] : terms_) m = std::max(m, ScalarTraits<S>::magnitude(c));
    return m;
  }

  template <class T, class F>
  AlternatingForm<T> convert(F&& f) const {
    AlternatingForm<T> out(dim_, degree_);
    for (const auto& [m, c] : terms_) out.add_term(m, f(c));
    return out;
  }

  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << c << "*dx";
      for (int i : mask_indices(m)) os << i;
    }
    if (first) os << "0";
    return os.str();
  }

 private:
  void check_compatible(const AlternatingForm& o) const {
    if (o.dim_ != dim_ || o.degree_ != degree_)
      throw std::invalid_argument("AlternatingForm: adding forms of different degree or dimension");
  }

  int dim_ = 8;
  int degree_ = 0;
  std::map<IndexMask, S> terms_;
};

template <FormScalar S>
AlternatingForm<S> wedge(const AlternatingForm<S>& a, const AlternatingForm<S>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("wedge: ambient dimensions differ");
  if (a.degree() + b.degree() > a.dim())
    throw std::invalid_argument("wedge: degree " + std::to_string(a.degree() + b.degree()) +
                                " exceeds ambient dimension");
  AlternatingForm<S> out(a.dim(), a.degree() + b.degree());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;
      S c = ca * cb;
      out.add_term(static_cast<IndexMask>(ma | mb), shuffle_sign(ma, mb) > 0 ? c : S(-c));
    }
  return out;
}

// Determinant of the leading k x k block, by elimination with largest-magnitude pivot.
template <class S>
S leading_determinant(std::array<std::array<S, 8>, 8> m, int k) {
  S det = ScalarTraits<S>::from_int(1);
  for (int col = 0; col < k; ++col) {
    int piv = -1;
    double best = 0;
    for (int r = col; r < k; ++r) {
      double mag = ScalarTraits<S>::magnitude(m[r][col]);
      if (!ScalarTraits<S>::is_zero(m[r][col]) && (piv < 0 || mag > best)) {
        piv = r;
        best = mag;
      }
    }
    if (piv < 0) return ScalarTraits<S>::from_int(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det = det * m[col][col];
    for (int r = col + 1; r < k; ++r) {
      if (ScalarTraits<S>::is_zero(m[r][col])) continue;
      S f = m[r][col] / m[col][col];
      for (int c = col; c < k; ++c) m[r][c] = m[r][c] - f * m[col][c];
    }
  }
  return det;
}

template <FormScalar S>
S evaluate(const AlternatingForm<S>& f, std::span<const Vec<S>> vs) {
  const int k = f.degree();
  if (static_cast<int>(vs.size()) != k)
    throw std::invalid_argument("evaluate: expected " + std::to_string(k) + " vectors, got " +
                                std::to_string(vs.size()));
  S total = ScalarTraits<S>::from_int(0);
  std::array<std::array<S, 8>, 8> block{};
  for (const auto& [m, c] : f.terms()) {
    int r = 0;
    for (int i = 0; i < 8; ++i) {
      if (!(m & (1u << i))) continue;
      for (int j = 0; j < k; ++j) block[r][j] = vs[j][i];
      ++r;
    }
    total = total + c * leading_determinant(block, k);
  }
  return total;
}

template <FormScalar S>
S evaluate(const AlternatingForm<S>& f, std::initializer_list<Vec<S>> vs) {
  return evaluate(f, std::span<const Vec<S>>(vs.begin(), vs.size()));
}

// M^* f for M : R^m -> R^dim given by its m columns.
template <FormScalar S>
AlternatingForm<S> pullback(std::span<const Vec<S>> columns, const AlternatingForm<S>& f) {
  const int m = static_cast<int>(columns.size());
  if (m > 8) throw std::invalid_argument("pullback: source dimension exceeds 8");
  if (f.degree() > m) throw std::invalid_argument("pullback: degree exceeds source dimension");
  AlternatingForm<S> out(m, f.degree());
  std::vector<Vec<S>> sel(f.degree());
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (std::popcount(mask) != f.degree()) continue;
    int r = 0;
    for (int j = 0; j < m; ++j)
      if (mask & (1u << j)) sel[r++] = columns[j];
    out.add_term(static_cast<IndexMask>(mask), evaluate(f, std::span<const Vec<S>>(sel)));
  }
  return out;
}

// d/dt|_0 exp(tA)^* f, i.e. (v_1..v_k) -> sum_i f(.., A v_i, ..).
// A is indexed A[row][col] with A e_col = sum_row A[row][col] e_row.
template <FormScalar S>
AlternatingForm<S> lie_action(const std::array<std::array<S, 8>, 8>& A, const AlternatingForm<S>& f) {
  AlternatingForm<S> out(f.dim(), f.degree());
  for (const auto& [m, c] : f.terms()) {
    std::vector<int> idx = mask_indices(m);
    for (std::size_t p = 0; p < idx.size(); ++p) {
      const int row = idx[p] - 1;
      for (int j = 0; j < f.dim(); ++j) {
        if (ScalarTraits<S>::is_zero(A[row][j])) continue;
        std::vector<int> repl = idx;
        repl[p] = j + 1;
        out.add_signed(repl, c * A[row][j]);
      }
    }
  }
  return out;
}

// iota_v f.
template <FormScalar S>
AlternatingForm<S> interior(const Vec<S>& v, const AlternatingForm<S>& f) {
  if (f.degree() == 0) throw std::invalid_argument("interior: degree-0 form");
  AlternatingForm<S> out(f.dim(), f.degree() - 1);
  for (const auto& [m, c] : f.terms()) {
    std::vector<int> idx = mask_indices(m);
    for (std::size_t p = 0; p < idx.size(); ++p) {
      const S& vp = v[idx[p] - 1];
      if (ScalarTraits<S>::is_zero(vp)) continue;
      IndexMask rest = static_cast<IndexMask>(m & ~(1u << (idx[p] - 1)));
      S term = c * vp;
      out.add_term(rest, (p % 2 == 0) ? term : S(-term));
    }
  }
  return out;
}

inline AlternatingForm<double> to_float(const AlternatingForm<Rational>& f) {
  return f.convert<double>([](const Rational& q) { return q.get_d(); });
}

}  // namespace cayley::exterior
