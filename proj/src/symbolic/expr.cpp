#include "cayley/symbolic/expr.hpp"

#include <array>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "cayley/spin7/algebra.hpp"

namespace cayley::symbolic {

namespace {

int shuffle_parity(Expr::Mask a, Expr::Mask b) {
  int inv = 0;
  for (int i = 0; i < kGenerators; ++i)
    if (a & (1u << i)) inv += std::popcount(b & ((1u << i) - 1));
  return inv & 1;
}

const std::array<Expr, kGenerators>& generator_differentials() {
  static const auto dg = [] {
    std::array<Expr, kGenerators> out;
    for (int k = 0; k < kGenerators; ++k) {
      auto [i, j] = generator_pair(k);
      Expr r;
      for (int m = 1; m <= 8; ++m) r -= wedge(omega(i, m), omega(m, j));
      out[k] = r;
    }
    return out;
  }();
  return dg;
}

}  // namespace

int generator_index(int i, int j) {
  if (!(1 <= i && i < j && j <= 7)) throw std::out_of_range("generator_index: need 1 <= i < j <= 7");
  int k = 0;
  for (int a = 1; a < i; ++a) k += 7 - a;
  return k + (j - i - 1);
}

std::pair<int, int> generator_pair(int k) {
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j)
      if (k-- == 0) return {i, j};
  throw std::out_of_range("generator_pair");
}

Expr Expr::constant(const ComplexRational& c) {
  Expr e;
  e.add_term(0, c);
  return e;
}

Expr Expr::generator(int k) {
  if (k < 0 || k >= kGenerators) throw std::out_of_range("Expr::generator");
  Expr e;
  e.add_term(1u << k, ComplexRational(1));
  return e;
}

int Expr::degree() const {
  if (terms_.empty()) return 0;
  const int deg = std::popcount(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (std::popcount(m) != deg) return -1;
  return deg;
}

void Expr::add_term(Mask m, const ComplexRational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Expr Expr::conj() const {
  Expr out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c.conj());
  return out;
}

Expr Expr::re() const { return (*this + conj()) * ComplexRational(Rational(1, 2)); }
Expr Expr::im() const { return (*this - conj()) * ComplexRational(Rational(0), Rational(-1, 2)); }

Expr& Expr::operator+=(const Expr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Expr& Expr::operator-=(const Expr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Expr& Expr::operator*=(const ComplexRational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

std::string Expr::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    bool lead = true;
    for (int k = 0; k < kGenerators; ++k) {
      if (!(m & (1u << k))) continue;
      auto [i, j] = generator_pair(k);
      os << (lead ? "*" : "^") << "w" << i << j;
      lead = false;
    }
  }
  return os.str();
}

Expr wedge(const Expr& a, const Expr& b) {
  Expr out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;
      ComplexRational c = ca * cb;
      out.add_term(ma | mb, shuffle_parity(ma, mb) ? -c : c);
    }
  return out;
}

Expr omega(int i, int j) {
  if (i < 1 || j < 1 || i > 8 || j > 8) throw std::out_of_range("omega: indices must be in 1..8");
  if (i == j) return Expr();
  if (i > j) return -omega(j, i);
  if (j < 8) return Expr::generator(generator_index(i, j));
  // omega_i8 = -omega_8i
  Expr out;
  const auto& row = spin7::omega8_substitution()[i - 1];
  for (int k = 0; k < kGenerators; ++k)
    if (sgn(row[k]) != 0) out.add_term(1u << k, ComplexRational(Rational(-row[k])));
  return out;
}

Expr d(const Expr& e) {
  const auto& dg = generator_differentials();
  Expr out;
  for (const auto& [m, c] : e.terms()) {
    int p = 0;
    for (int k = 0; k < kGenerators; ++k) {
      if (!(m & (1u << k))) continue;
      const Expr::Mask before = m & ((1u << k) - 1);
      const Expr::Mask after = m & ~((1u << (k + 1)) - 1);
      Expr pre;
      pre.add_term(before, ComplexRational(1));
      Expr post;
      post.add_term(after, ComplexRational(1));
      Expr term = wedge(wedge(pre, dg[k]), post);
      out += term * ((p % 2 == 0) ? c : -c);
      ++p;
    }
  }
  return out;
}

}  // namespace cayley::symbolic
