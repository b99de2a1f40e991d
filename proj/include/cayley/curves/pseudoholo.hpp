#pragma once

#include <vector>

#include "cayley/curves/chart.hpp"
#include "cayley/curves/structure.hpp"

namespace cayley::curves {

struct SampleOptions {
  int nu = 8;
  int nv = 8;
  double h = 1e-4;
  FrameGauge gauge;
};

// |zeta(d_u) ^_C zeta(d_v)| divided by the real area |zeta(d_u) ^_R zeta(d_v)|.
// Zero exactly when the tangent plane is a complex line; `degenerate` is set
// when the real area vanishes (rank < 2) and the value is meaningless.
double pseudoholo_measure(const geometry::Vec6c& zu, const geometry::Vec6c& zv, bool& degenerate);

CheckStats pseudoholo_residual(const CurveChart& c, const SampleOptions& opt = {}, double tol = 1e-7);

struct FundFormSample {
  double u = 0, v = 0;
  // |theta_od| and |theta_ev| as fractions of |theta| on the same tangent
  // vector; I1^2 + I2^2 = 1.
  double I1 = 0, I2 = 0;
  bool in_R1 = false, in_R2 = false;
};

struct FundamentalForms {
  std::vector<FundFormSample> samples;
  double sup_I1 = 0, sup_I2 = 0;
  bool immersed = true;
  bool R1_everywhere = false, R2_everywhere = false;
  int R1_and_R2 = 0;  // samples in both sets (never, for an immersion)
};

// Refuses (throws Refused) unless the chart is pseudoholomorphic at tol.
FundamentalForms fund_forms(const CurveChart& c, const SampleOptions& opt = {}, double tol = 1e-7,
                            double r_threshold = 1e-6);

// Max distance between twistor images of the sample planes.
CheckStats twistor_diameter(const CurveChart& c, const SampleOptions& opt = {}, double tol = 1e-8);

}  // namespace cayley::curves
