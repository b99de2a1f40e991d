#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "cayley/exterior/scalar.hpp"

namespace cayley::symbolic {

using exterior::ComplexRational;
using exterior::Rational;

constexpr int kGenerators = 21;

// Generator k <-> omega_ij with 1 <= i < j <= 7, lexicographic.
int generator_index(int i, int j);
std::pair<int, int> generator_pair(int k);

// Complex polynomial differential form in the 21 left-invariant
// Maurer-Cartan forms of Spin(7). Monomials are bitmasks over generators,
// read in increasing generator order.
class Expr {
 public:
  using Mask = std::uint32_t;

  Expr() = default;
  static Expr constant(const ComplexRational& c);
  static Expr generator(int k);

  const std::map<Mask, ComplexRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  // Common degree of all terms; -1 if mixed, 0 for the zero form.
  int degree() const;

  void add_term(Mask m, const ComplexRational& c);

  Expr conj() const;
  Expr re() const;
  Expr im() const;

  Expr& operator+=(const Expr& o);
  Expr& operator-=(const Expr& o);
  Expr& operator*=(const ComplexRational& c);
  friend Expr operator+(Expr a, const Expr& b) { return a += b; }
  friend Expr operator-(Expr a, const Expr& b) { return a -= b; }
  friend Expr operator*(const ComplexRational& c, Expr a) { return a *= c; }
  friend Expr operator*(Expr a, const ComplexRational& c) { return a *= c; }
  Expr operator-() const { return *this * ComplexRational(-1); }
  friend bool operator==(const Expr& a, const Expr& b) { return a.terms_ == b.terms_; }

  // Terms written as coeff*w12^w34, in monomial order.
  std::string str() const;

 private:
  std::map<Mask, ComplexRational> terms_;
};

Expr wedge(const Expr& a, const Expr& b);
inline Expr operator^(const Expr& a, const Expr& b) { return wedge(a, b); }

// omega_ij for any 1 <= i, j <= 8; omega_8k is rewritten through the
// spin(7) relations, omega_ji = -omega_ij.
Expr omega(int i, int j);

// Exterior derivative, driven by d omega_ij = -sum_k omega_ik ^ omega_kj.
Expr d(const Expr& e);

}  // namespace cayley::symbolic
