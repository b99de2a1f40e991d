#include "cayley/curves/pseudoholo.hpp"

#include "cayley/geometry/twistor.hpp"
#include "cayley/util/parallel.hpp"

namespace cayley::curves {

double pseudoholo_measure(const geometry::Vec6c& zu, const geometry::Vec6c& zv, bool& degenerate) {
  const double nu = zu.norm(), nv = zv.norm();
  const double re = std::real(zu.dot(zv));
  const double area2 = zu.squaredNorm() * zv.squaredNorm() - re * re;
  degenerate = !(area2 > 1e-16 * nu * nu * nv * nv);
  if (degenerate) return 0;
  double wedge2 = 0;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) wedge2 += std::norm(zu[i] * zv[j] - zu[j] * zv[i]);
  return std::sqrt(wedge2 / area2);
}

CheckStats pseudoholo_residual(const CurveChart& c, const SampleOptions& opt, double tol) {
  const auto pts = c.sample_points(opt.nu, opt.nv);
  struct R {
    double value = 0;
    int degenerate = 0;
  };
  auto res = util::parallel_map(pts.size(), [&](std::size_t k) {
    const auto s = c.coframe(pts[k].first, pts[k].second, opt.gauge, opt.h);
    bool deg = false;
    const double m = pseudoholo_measure(s.du.zeta, s.dv.zeta, deg);
    return R{m, deg ? 1 : 0};
  });
  std::vector<double> vals;
  CheckStats st;
  st.name = "pseudoholomorphic";
  st.anchor = "zeta_i ^ zeta_j pulls back to zero";
  for (const auto& r : res) {
    if (r.degenerate)
      ++st.excluded;
    else
      vals.push_back(r.value);
  }
  st.accumulate(vals, tol);
  if (st.excluded) st.note = "rank-deficient samples excluded";
  return st;
}

FundamentalForms fund_forms(const CurveChart& c, const SampleOptions& opt, double tol, double r_threshold) {
  const CheckStats ph = pseudoholo_residual(c, opt, tol);
  if (!ph.pass)
    throw Refused("fundamental forms need a pseudoholomorphic chart; residual " + std::to_string(ph.sup) +
                  " exceeds " + std::to_string(tol));
  const auto pts = c.sample_points(opt.nu, opt.nv);
  FundamentalForms out;
  out.samples = util::parallel_map(pts.size(), [&](std::size_t k) {
    const auto s = c.coframe(pts[k].first, pts[k].second, opt.gauge, opt.h);
    FundFormSample f;
    f.u = pts[k].first;
    f.v = pts[k].second;
    const double total = s.du.theta.norm();
    if (total > 0) {
      f.I1 = s.du.theta_od().norm() / total;
      f.I2 = s.du.theta_ev().norm() / total;
    }
    f.in_R1 = f.I1 < r_threshold;
    f.in_R2 = f.I2 < r_threshold;
    return f;
  });
  out.R1_everywhere = out.R2_everywhere = true;
  for (const auto& f : out.samples) {
    out.sup_I1 = std::max(out.sup_I1, f.I1);
    out.sup_I2 = std::max(out.sup_I2, f.I2);
    out.R1_everywhere = out.R1_everywhere && f.in_R1;
    out.R2_everywhere = out.R2_everywhere && f.in_R2;
    if (f.in_R1 && f.in_R2) {
      ++out.R1_and_R2;
      out.immersed = false;
    }
  }
  return out;
}

CheckStats twistor_diameter(const CurveChart& c, const SampleOptions& opt, double tol) {
  const auto pts = c.sample_points(opt.nu, opt.nv);
  auto images = util::parallel_map(pts.size(), [&](std::size_t k) {
    return geometry::twistor_project(c.plane(pts[k].first, pts[k].second), opt.gauge);
  });
  std::vector<double> dist;
  for (std::size_t k = 0; k < images.size(); ++k) {
    double far = 0;
    for (std::size_t l = 0; l < images.size(); ++l) far = std::max(far, (images[k] - images[l]).norm());
    dist.push_back(far);
  }
  CheckStats st;
  st.name = "twistor_image_diameter";
  st.anchor = "largest distance between twistor images of sample planes";
  st.accumulate(dist, tol);
  return st;
}

}  // namespace cayley::curves
