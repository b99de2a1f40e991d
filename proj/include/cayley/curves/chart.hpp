#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cayley/geometry/coframe.hpp"
#include "cayley/util/report.hpp"

namespace cayley::curves {

using geometry::AdaptedFrame;
using geometry::CoframeSample;
using geometry::FrameField;
using geometry::FrameGauge;
using geometry::Mat8;
using geometry::OrientedPlane;
using geometry::Vec8;
using geometry::Vec8c;

struct Domain {
  double u0 = 0, u1 = 1, v0 = 0, v1 = 1;
  bool periodic_u = false;
  bool periodic_v = false;

  bool closed() const { return periodic_u && periodic_v; }
};

using PlaneField = std::function<OrientedPlane(double, double)>;

// A parametrized surface in G(2,8) with its coordinate domain. The plane
// field must be defined (and smooth) slightly beyond the domain so that
// central-difference stencils at the edge make sense.
class CurveChart {
 public:
  CurveChart(PlaneField field, Domain domain, std::string label = {});

  OrientedPlane plane(double u, double v) const { return field_(u, v); }
  const Domain& domain() const { return domain_; }
  const std::string& label() const { return label_; }

  // g . gamma.
  CurveChart transformed(const Mat8& g) const;

  // Cell-centred grid of nu x nv points.
  std::vector<std::pair<double, double>> sample_points(int nu, int nv) const;

  // Frame field near (u, v) with the gauge choice frozen at (u, v).
  FrameField frame_field(const FrameGauge& gauge, double u, double v) const;
  CoframeSample coframe(double u, double v, const FrameGauge& gauge, double h) const;

 private:
  PlaneField field_;
  Domain domain_;
  std::string label_;
};

// The two standard charts w and 1/w of a curve parametrized by CP^1, each
// used on its closed unit disk.
struct SphereAtlas {
  CurveChart inner;
  CurveChart outer;
};

// Vector field interpolating node values (bicubic Catmull-Rom). Nodes are
// u0 + i (u1-u0)/(nu-1), or u0 + i (u1-u0)/nu when periodic.
std::function<Vec8(double, double)> grid_field(const std::vector<std::vector<Vec8>>& values, const Domain& domain);

// Chart interpolating planes sampled on a (nu x nv) node grid (bicubic
// Catmull-Rom on the spanning vectors, then re-orthonormalized), same nodes.
CurveChart grid_chart(const std::vector<std::vector<std::pair<Vec8, Vec8>>>& planes, const Domain& domain,
                      std::string label = "grid");

}  // namespace cayley::curves
