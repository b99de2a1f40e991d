#pragma once

#include "cayley/curves/chart.hpp"

namespace cayley::curves {

struct DegreeOptions {
  int n_r = 1024;   // midpoint rule in the radius of each unit disk
  int n_phi = 64;   // trapezoid rule in the angle
  double h = 1e-4;  // frame differentiation step
  FrameGauge gauge;
};

struct DegreeResult {
  double value = 0;
  long nearest = 0;
  double defect = 0;  // |value - nearest|
  int samples = 0;
};

// (1/4 pi) integral of omega1 - omega2 over the sphere, from the two charts
// in polar coordinates.
DegreeResult degree(const SphereAtlas& atlas, const DegreeOptions& opt = {});

// Same over a doubly periodic chart (midpoint rule on the rectangle, n_r x n_phi).
// Throws for charts that are not closed.
DegreeResult degree(const CurveChart& closed_chart, const DegreeOptions& opt = {});

// (omega1 - omega2)(d_u, d_v) at one point.
double degree_density(const CurveChart& c, double u, double v, const FrameGauge& gauge, double h);

}  // namespace cayley::curves
