#include "cayley/curves/degree.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cayley/util/parallel.hpp"

namespace cayley::curves {

namespace {

DegreeResult finish(double integral, int samples) {
  DegreeResult r;
  r.value = integral / (4 * std::numbers::pi);
  r.nearest = std::lround(r.value);
  r.defect = std::abs(r.value - static_cast<double>(r.nearest));
  r.samples = samples;
  return r;
}

double disk_integral(const CurveChart& c, const DegreeOptions& opt) {
  const double dr = 1.0 / opt.n_r;
  const double dphi = 2 * std::numbers::pi / opt.n_phi;
  // One task per radius; angular sums stay in a fixed order.
  auto rings = util::parallel_map(static_cast<std::size_t>(opt.n_r), [&](std::size_t i) {
    const double r = (static_cast<double>(i) + 0.5) * dr;
    double acc = 0;
    for (int j = 0; j < opt.n_phi; ++j) {
      const double phi = j * dphi;
      acc += degree_density(c, r * std::cos(phi), r * std::sin(phi), opt.gauge, opt.h);
    }
    return acc * r;
  });
  double total = 0;
  for (double x : rings) total += x;
  return total * dr * dphi;
}

}  // namespace

double degree_density(const CurveChart& c, double u, double v, const FrameGauge& gauge, double h) {
  const auto s = c.coframe(u, v, gauge, h);
  double odd = 0, even = 0;
  for (int a = 0; a < 6; ++a) {
    const double term = -std::imag(s.du.theta[a] * std::conj(s.dv.theta[a]));
    (a % 2 == 0 ? odd : even) += term;
  }
  return odd - even;
}

DegreeResult degree(const SphereAtlas& atlas, const DegreeOptions& opt) {
  if (opt.n_r < 1 || opt.n_phi < 1) throw std::invalid_argument("degree: bad quadrature sizes");
  const double total = disk_integral(atlas.inner, opt) + disk_integral(atlas.outer, opt);
  return finish(total, 2 * opt.n_r * opt.n_phi);
}

DegreeResult degree(const CurveChart& c, const DegreeOptions& opt) {
  if (!c.domain().closed())
    throw std::invalid_argument("degree: chart '" + c.label() +
                                "' is not closed; pass a sphere atlas or a doubly periodic chart");
  const auto pts = c.sample_points(opt.n_r, opt.n_phi);
  auto vals = util::parallel_map(pts.size(), [&](std::size_t k) {
    return degree_density(c, pts[k].first, pts[k].second, opt.gauge, opt.h);
  });
  double total = 0;
  for (double x : vals) total += x;
  const auto& d = c.domain();
  total *= (d.u1 - d.u0) * (d.v1 - d.v0) / (static_cast<double>(opt.n_r) * opt.n_phi);
  return finish(total, static_cast<int>(pts.size()));
}

}  // namespace cayley::curves
