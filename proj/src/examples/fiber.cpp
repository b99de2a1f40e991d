#include "cayley/examples/fiber.hpp"

#include <stdexcept>

namespace cayley::examples {

int FiberPolynomial::degree() const {
  int d = -1;
  for (const auto& c : coeffs)
    for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k)
      if (c[k] != cd(0)) {
        d = std::max(d, k);
        break;
      }
  return d;
}

std::array<cd, 4> FiberPolynomial::eval(cd w) const {
  std::array<cd, 4> z{};
  for (int a = 0; a < 4; ++a)
    for (auto it = coeffs[a].rbegin(); it != coeffs[a].rend(); ++it) z[a] = z[a] * w + *it;
  return z;
}

FiberPolynomial FiberPolynomial::reversed() const {
  const int d = degree();
  FiberPolynomial r;
  r.frame = frame;
  for (int a = 0; a < 4; ++a) {
    r.coeffs[a].assign(d + 1, cd(0));
    for (int k = 0; k < static_cast<int>(coeffs[a].size()) && k <= d; ++k) r.coeffs[a][d - k] = coeffs[a][k];
  }
  return r;
}

Vec8 fiber_point(const std::array<cd, 4>& Z, const Mat8& frame) {
  const auto f = geometry::f_vectors(frame);
  geometry::Vec8c x = geometry::Vec8c::Zero();
  for (int a = 0; a < 4; ++a) x += Z[a] * f[a];
  return x.real();
}

OrientedPlane fiber_plane(const std::array<cd, 4>& Z, const Mat8& frame) {
  const Vec8 u = fiber_point(Z, frame);
  const double n = u.norm();
  if (n < 1e-300) throw std::domain_error("fiber_plane: all homogeneous coordinates vanish");
  const Vec8 e1 = u / n;
  return {e1, geometry::complex_structure(frame) * e1};
}

void validate(const FiberPolynomial& p) {
  if (p.degree() < 0) throw std::invalid_argument("fiber polynomial: Z is identically zero");
  // Rank of the map: Z ^ Z' must be nonzero somewhere.
  double worst = 0;
  for (cd w : {cd(0.3, 0.1), cd(-0.7, 0.4), cd(0.2, -0.9), cd(1.3, 0.5)}) {
    const auto z = p.eval(w);
    std::array<cd, 4> dz{};
    for (int a = 0; a < 4; ++a)
      for (int k = static_cast<int>(p.coeffs[a].size()) - 1; k >= 1; --k) dz[a] = dz[a] * w + double(k) * p.coeffs[a][k];
    double zz = 0, wedge = 0, dd = 0;
    for (int a = 0; a < 4; ++a) {
      zz += std::norm(z[a]);
      dd += std::norm(dz[a]);
      for (int b = a + 1; b < 4; ++b) wedge += std::norm(z[a] * dz[b] - z[b] * dz[a]);
    }
    if (zz > 0) worst = std::max(worst, std::sqrt(wedge / (zz * std::max(zz, dd))));
  }
  if (worst < 1e-12) throw std::invalid_argument("fiber polynomial: the curve is constant (rank 0)");
}

CurveChart fiber_chart(const FiberPolynomial& p, const std::string& label) {
  validate(p);
  curves::Domain d{-1, 1, -1, 1};
  return CurveChart([p](double u, double v) { return fiber_plane(p.eval(cd(u, v)), p.frame); }, d, label);
}

SphereAtlas fiber_atlas(const FiberPolynomial& p) {
  return {fiber_chart(p, "fiber (w)"), fiber_chart(p.reversed(), "fiber (1/w)")};
}

FiberPolynomial rational_curve(int d) {
  if (d < 1 || d > 3) throw std::invalid_argument("rational_curve: degree must be 1, 2 or 3");
  FiberPolynomial p;
  for (int a = 0; a < 4; ++a) {
    p.coeffs[a].assign(a + 1, cd(0));
    if (a <= d) p.coeffs[a][a] = 1;
    else p.coeffs[a].assign(1, cd(0));
  }
  return p;
}

}  // namespace cayley::examples
