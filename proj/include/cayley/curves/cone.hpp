#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "cayley/curves/pseudoholo.hpp"

namespace cayley::curves {

using SectionField = std::function<Vec8(double, double)>;

// x(r1, r2, u, v) = r1 e1(u,v) + r2 e2(u,v) + lambda s(u,v).
class Cone {
 public:
  Cone(CurveChart chart, std::optional<SectionField> section = std::nullopt, double lambda = 1.0);

  const CurveChart& chart() const { return chart_; }
  bool deformed() const { return section_.has_value(); }

  Vec8 point(double r1, double r2, double u, double v) const;
  // Columns d_r1, d_r2 (exact), d_u, d_v (fourth-order central differences).
  Eigen::Matrix<double, 8, 4> jacobian(double r1, double r2, double u, double v, double h) const;

 private:
  CurveChart chart_;
  std::optional<SectionField> section_;
  double lambda_;
};

// Checks s(u,v) is orthogonal to the plane at a grid of samples.
Cone build_cone(const CurveChart& c, std::optional<SectionField> section = std::nullopt, double lambda = 1.0,
                int checks = 8);

struct ConeOptions {
  int nu = 6;
  int nv = 6;
  double h = 1e-4;
  // (r1, r2) sample points; default: 8 directions on the unit circle, plus
  // the origin and two interior radii for deformed cones.
  std::vector<std::pair<double, double>> radii;
};

// sqrt(sum_m psi_m(Q)^2) for Q the orthonormalized Jacobian, which is 0 on
// Cayley 4-planes and at most 1.
double cayley_measure(const Eigen::Matrix<double, 8, 4>& J, bool& degenerate);

CheckStats cayley_residual(const Cone& cone, const ConeOptions& opt = {}, double tol = 1e-7);

struct ReductionReport {
  CheckStats direct;    // x^*psi_m(d_r1, d_r2, d_u, d_v) from the cone Jacobian
  CheckStats reduced;   // sum r_a r_b psi_m(e1, e2, e_i, e_k) omega_ia ^ omega_kb (d_u, d_v)
  double discrepancy = 0;  // sup |direct - reduced / 2|
  double fitted_constant = 0;  // least-squares K in direct ~ K reduced; NaN when both vanish
  bool consistent = false;     // both vanish or both do not
};

// The undeformed cone's Cayley condition against its Maurer-Cartan reduction.
ReductionReport reduction_check(const CurveChart& c, const ConeOptions& opt = {}, const FrameGauge& gauge = {},
                                double tol = 1e-7);

}  // namespace cayley::curves
