#include "cayley/curves/minimal.hpp"

#include <algorithm>

#include "cayley/geometry/twistor.hpp"
#include "cayley/util/parallel.hpp"

namespace cayley::curves {

using geometry::Vec7;

MinimalityReport minimality_residual(const CurveChart& c, const MinimalityOptions& opt) {
  const auto pts = c.sample_points(opt.nu, opt.nv);
  auto phi = [&](double u, double v) { return geometry::twistor_project(c.plane(u, v), opt.gauge); };
  struct S {
    double speed = 0;
    double H = 0;
    bool degenerate = false;
  };
  auto samples = util::parallel_map(pts.size(), [&](std::size_t k) {
    const double u = pts[k].first, v = pts[k].second, h = opt.h;
    const Vec7 p = phi(u, v);
    const Vec7 pu_ = phi(u + h, v), mu_ = phi(u - h, v), pv_ = phi(u, v + h), mv_ = phi(u, v - h);
    const Vec7 xu = (pu_ - mu_) / (2 * h), xv = (pv_ - mv_) / (2 * h);
    const Vec7 xuu = (pu_ - 2 * p + mu_) / (h * h), xvv = (pv_ - 2 * p + mv_) / (h * h);
    const Vec7 xuv = (phi(u + h, v + h) - phi(u + h, v - h) - phi(u - h, v + h) + phi(u - h, v - h)) / (4 * h * h);
    S s;
    s.speed = std::sqrt(xu.squaredNorm() + xv.squaredNorm());
    Eigen::Matrix2d G;
    G << xu.dot(xu), xu.dot(xv), xu.dot(xv), xv.dot(xv);
    if (G.determinant() <= 1e-14 * G.trace() * G.trace()) {
      s.degenerate = true;
      return s;
    }
    const Eigen::Matrix2d Gi = G.inverse();
    Vec7 lap = Gi(0, 0) * xuu + 2 * Gi(0, 1) * xuv + Gi(1, 1) * xvv;
    // Normal part inside the sphere: drop the radial and tangent components.
    Eigen::Matrix<double, 7, 3> B;
    B << p, xu, xv;
    const Eigen::HouseholderQR<Eigen::Matrix<double, 7, 3>> qr(B);
    const Eigen::Matrix<double, 7, 3> Q = qr.householderQ() * Eigen::Matrix<double, 7, 3>::Identity();
    lap -= Q * (Q.transpose() * lap);
    s.H = lap.norm();
    return s;
  });

  MinimalityReport rep;
  rep.mean_curvature.name = "twistor_image_minimal";
  rep.mean_curvature.anchor = "mean curvature of the twistor image in S^6";
  std::vector<double> speeds;
  for (const auto& s : samples) speeds.push_back(s.speed);
  const double top = *std::max_element(speeds.begin(), speeds.end());
  if (top < opt.constant_threshold) {
    rep.constant_map = true;
    rep.mean_curvature.note = "constant map";
    rep.mean_curvature.excluded = static_cast<int>(samples.size());
    return rep;
  }
  std::nth_element(speeds.begin(), speeds.begin() + speeds.size() / 2, speeds.end());
  const double median = speeds[speeds.size() / 2];
  std::vector<double> vals;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    if (samples[k].degenerate || samples[k].speed < opt.branch_threshold * median) {
      rep.branch_points.push_back(pts[k]);
      ++rep.mean_curvature.excluded;
    } else {
      vals.push_back(samples[k].H);
    }
  }
  rep.mean_curvature.accumulate(vals, 1e-3);
  if (!rep.branch_points.empty()) rep.mean_curvature.note = "branch points excluded";
  return rep;
}

}  // namespace cayley::curves
