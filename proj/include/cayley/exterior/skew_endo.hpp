#pragma once

#include <Eigen/Dense>

#include <array>
#include <stdexcept>
#include <string>

#include "cayley/exterior/scalar.hpp"

namespace cayley::exterior {

template <class S>
using Square8 = std::array<std::array<S, 8>, 8>;

// Element of so(8). Entry (r, c) is 0-based; omega(i, j) is the 1-based
// Maurer-Cartan name, omega_ij = <e_i, A e_j>.
template <FormScalar S>
class SkewEndo {
 public:
  SkewEndo() {
    for (auto& row : m_) row.fill(ScalarTraits<S>::from_int(0));
  }

  static SkewEndo from_matrix(const Square8<S>& m) {
    SkewEndo A;
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c) {
        if constexpr (ScalarTraits<S>::exact) {
          if (!(m[r][c] == S(-m[c][r])))
            throw std::invalid_argument("SkewEndo: entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                                        ") breaks skew-symmetry");
        } else {
          if (ScalarTraits<S>::magnitude(m[r][c] + m[c][r]) > 1e-12)
            throw std::invalid_argument("SkewEndo: matrix is not skew-symmetric");
        }
        A.m_[r][c] = m[r][c];
      }
    return A;
  }

  // e_j^* (x) e_i - e_i^* (x) e_j scaled: sets omega_ij = v, omega_ji = -v.
  void set_omega(int i, int j, const S& v) {
    if (i == j) throw std::invalid_argument("SkewEndo: diagonal entry");
    m_[i - 1][j - 1] = v;
    m_[j - 1][i - 1] = S(-v);
  }
  const S& omega(int i, int j) const { return m_[i - 1][j - 1]; }
  const S& operator()(int r, int c) const { return m_[r][c]; }
  const Square8<S>& matrix() const { return m_; }

  friend SkewEndo bracket(const SkewEndo& a, const SkewEndo& b) {
    SkewEndo out;
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c) {
        S acc = ScalarTraits<S>::from_int(0);
        for (int k = 0; k < 8; ++k) acc = acc + a.m_[r][k] * b.m_[k][c] - b.m_[r][k] * a.m_[k][c];
        out.m_[r][c] = acc;
      }
    return out;
  }

  SkewEndo& operator+=(const SkewEndo& o) {
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c) m_[r][c] = m_[r][c] + o.m_[r][c];
    return *this;
  }
  SkewEndo& operator*=(const S& s) {
    for (auto& row : m_)
      for (auto& x : row) x = x * s;
    return *this;
  }
  friend SkewEndo operator+(SkewEndo a, const SkewEndo& b) { return a += b; }
  friend SkewEndo operator*(const S& s, SkewEndo a) { return a *= s; }
  friend bool operator==(const SkewEndo& a, const SkewEndo& b) { return a.m_ == b.m_; }

  // sum_{i<j} A_ij B_ij, i.e. -tr(AB)/2.
  friend S pairing(const SkewEndo& a, const SkewEndo& b) {
    S acc = ScalarTraits<S>::from_int(0);
    for (int r = 0; r < 8; ++r)
      for (int c = r + 1; c < 8; ++c) acc = acc + a.m_[r][c] * b.m_[r][c];
    return acc;
  }

  bool is_zero() const {
    for (const auto& row : m_)
      for (const auto& x : row)
        if (!ScalarTraits<S>::is_zero(x)) return false;
    return true;
  }

  Eigen::Matrix<double, 8, 8> to_eigen() const {
    Eigen::Matrix<double, 8, 8> out;
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c) {
        if constexpr (std::is_same_v<S, Rational>)
          out(r, c) = m_[r][c].get_d();
        else
          out(r, c) = static_cast<double>(m_[r][c]);
      }
    return out;
  }

 private:
  Square8<S> m_;
};

}  // namespace cayley::exterior
