#pragma once

#include <utility>
#include <vector>

#include "cayley/curves/chart.hpp"

namespace cayley::curves {

struct MinimalityOptions {
  int nu = 6, nv = 6;
  double h = 1e-3;
  double branch_threshold = 1e-6;  // |d phi| relative to the chart median
  double constant_threshold = 1e-8;
  FrameGauge gauge;
};

struct MinimalityReport {
  bool constant_map = false;
  CheckStats mean_curvature;  // sup |H| away from branch points
  std::vector<std::pair<double, double>> branch_points;
};

// Mean curvature in S^6 of the twistor image, by second-order differences.
MinimalityReport minimality_residual(const CurveChart& c, const MinimalityOptions& opt = {});

}  // namespace cayley::curves
