#pragma once

#include <array>
#include <complex>
#include <vector>

#include "cayley/curves/chart.hpp"

namespace cayley::examples {

using cd = std::complex<double>;
using curves::CurveChart;
using curves::SphereAtlas;
using geometry::Mat8;
using geometry::OrientedPlane;
using geometry::Vec8;

// [Z_0(w) : ... : Z_3(w)] with Z_a(w) = sum_k coeffs[a][k] w^k, read in C^4
// through the frame: Z -> Re(sum_a Z_a f_a).
struct FiberPolynomial {
  std::array<std::vector<cd>, 4> coeffs;
  Mat8 frame = Mat8::Identity();

  int degree() const;
  std::array<cd, 4> eval(cd w) const;
  // Homogenized coefficients in t = 1/w.
  FiberPolynomial reversed() const;
};

// span(u, J u), u = Re(sum_a Z_a f_a) normalized, J = frame J0 frame^T.
OrientedPlane fiber_plane(const std::array<cd, 4>& Z, const Mat8& frame = Mat8::Identity());
Vec8 fiber_point(const std::array<cd, 4>& Z, const Mat8& frame = Mat8::Identity());

// Throws std::invalid_argument for Z = 0 or a constant (rank 0) curve.
void validate(const FiberPolynomial& p);

// Chart in w = u + i v on [-1,1]^2.
CurveChart fiber_chart(const FiberPolynomial& p, const std::string& label = "fiber");
// Charts w and 1/w, each used on its unit disk.
SphereAtlas fiber_atlas(const FiberPolynomial& p);

// w -> [1 : w : ... : w^d], the rational normal curve through the first
// coordinates (d <= 3); d = 1 is the standard line.
FiberPolynomial rational_curve(int d);

}  // namespace cayley::examples
