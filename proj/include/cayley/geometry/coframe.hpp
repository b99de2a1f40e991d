#pragma once

#include <functional>

#include "cayley/geometry/frame.hpp"

namespace cayley::geometry {

using Vec6c = Eigen::Matrix<std::complex<double>, 6, 1>;
using Vec3c = Eigen::Matrix<std::complex<double>, 3, 1>;

// Values of the Maurer-Cartan forms and their complex combinations on one
// tangent vector, given omega(X) = g^T dg(X) (omega_ij = entry (i-1, j-1)).
struct CoframeValues {
  Mat8 omega = Mat8::Zero();
  Vec6c zeta = Vec6c::Zero();   // zeta_3 .. zeta_8
  Vec6c theta = Vec6c::Zero();  // theta_1 .. theta_6
  Eigen::Matrix3cd kappa = Eigen::Matrix3cd::Zero();

  Vec3c theta_od() const { return {theta[0], theta[2], theta[4]}; }
  Vec3c theta_ev() const { return {theta[1], theta[3], theta[5]}; }
};

CoframeValues coframe_values(const Mat8& omega);

using FrameField = std::function<Mat8(double, double)>;

struct CoframeSample {
  Mat8 frame;
  CoframeValues du;
  CoframeValues dv;
};

// Pull back the Maurer-Cartan form along a frame field by central differences.
CoframeSample mc_pullback(const FrameField& F, double u, double v, double h);

// sup |d omega + omega ^ omega|(d_u, d_v), by nested central differences.
double mc_defect(const FrameField& F, double u, double v, double h);

// Relative residuals of xi4 = -i xi3, xi7 = i xi6, xi8 = i xi5 (V1) and the
// conjugate relations (V2) on both tangent vectors.
struct DistributionResidual {
  double v1 = 0;
  double v2 = 0;
};
DistributionResidual distribution_relations(const CoframeSample& s);

}  // namespace cayley::geometry
