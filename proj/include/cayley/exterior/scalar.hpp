#pragma once

#include <gmpxx.h>

#include <complex>
#include <concepts>
#include <ostream>
#include <string>

namespace cayley::exterior {

using Rational = mpq_class;

// Gaussian rationals. Enough arithmetic for the symbolic engine and for
// complexified forms; no transcendental functions.
struct ComplexRational {
  Rational re{0};
  Rational im{0};

  ComplexRational() = default;
  ComplexRational(const Rational& r) : re(r) {}  // NOLINT(implicit)
  ComplexRational(const Rational& r, const Rational& i) : re(r), im(i) {}
  ComplexRational(int r) : re(r) {}  // NOLINT(implicit)

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  ComplexRational conj() const { return {re, Rational(-im)}; }

  ComplexRational& operator+=(const ComplexRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ComplexRational& operator-=(const ComplexRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  ComplexRational& operator*=(const ComplexRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  ComplexRational& operator/=(const ComplexRational& o) {
    Rational n = o.re * o.re + o.im * o.im;
    Rational r = (re * o.re + im * o.im) / n;
    Rational i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
  friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
  friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
  friend ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }
  ComplexRational operator-() const { return {Rational(-re), Rational(-im)}; }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
  std::string str() const;
};

inline const ComplexRational kImag{Rational(0), Rational(1)};

inline std::string ComplexRational::str() const {
  if (sgn(im) == 0) return re.get_str();
  if (sgn(re) == 0) return im == 1 ? "i" : (im == -1 ? "-i" : im.get_str() + "i");
  std::string s = "(" + re.get_str();
  s += sgn(im) > 0 ? "+" : "-";
  Rational a = abs(im);
  s += (a == 1 ? std::string() : a.get_str()) + "i)";
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const ComplexRational& z) { return os << z.str(); }

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static double magnitude(const Rational& x) { return std::abs(x.get_d()); }
  static Rational from_int(long v) { return Rational(v); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static bool is_zero(double x) { return x == 0.0; }
  static double magnitude(double x) { return std::abs(x); }
  static double from_int(long v) { return static_cast<double>(v); }
};

template <>
struct ScalarTraits<std::complex<double>> {
  static constexpr bool exact = false;
  static bool is_zero(const std::complex<double>& x) { return x == 0.0; }
  static double magnitude(const std::complex<double>& x) { return std::abs(x); }
  static std::complex<double> from_int(long v) { return static_cast<double>(v); }
};

template <>
struct ScalarTraits<ComplexRational> {
  static constexpr bool exact = true;
  static bool is_zero(const ComplexRational& x) { return x.is_zero(); }
  static double magnitude(const ComplexRational& x) { return std::abs(x.to_complex()); }
  static ComplexRational from_int(long v) { return Rational(v); }
};

template <class S>
concept FormScalar = requires(const S& a, const S& b) {
  { ScalarTraits<S>::exact } -> std::convertible_to<bool>;
  { ScalarTraits<S>::is_zero(a) } -> std::convertible_to<bool>;
  { a + b };
  { a * b };
};

}  // namespace cayley::exterior
