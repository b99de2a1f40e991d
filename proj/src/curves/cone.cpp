#include "cayley/curves/cone.hpp"

#include <numbers>
#include <stdexcept>

#include "cayley/util/parallel.hpp"

namespace cayley::curves {

namespace {

template <class F>
Vec8 d4(const F& f, double h) {
  return (-f(2 * h) + 8 * f(h) - 8 * f(-h) + f(-2 * h)) / (12 * h);
}

std::vector<std::pair<double, double>> default_radii(bool deformed) {
  std::vector<std::pair<double, double>> r;
  for (int k = 0; k < 8; ++k) {
    const double t = 2 * std::numbers::pi * (k + 0.25) / 8;
    r.emplace_back(std::cos(t), std::sin(t));
  }
  if (deformed) {
    r.emplace_back(0.0, 0.0);
    r.emplace_back(0.3, -0.2);
    r.emplace_back(-1.5, 0.7);
  }
  return r;
}

double psi_norm(const Vec8& a, const Vec8& b, const Vec8& c, const Vec8& d, Eigen::Matrix<double, 7, 1>* out) {
  const auto& ft = spin7::float_tables();
  Eigen::Matrix<double, 7, 1> v;
  for (int m = 0; m < 7; ++m) v[m] = spin7::evaluate4(ft.psi[m], a, b, c, d);
  if (out) *out = v;
  return v.norm();
}

}  // namespace

Cone::Cone(CurveChart chart, std::optional<SectionField> section, double lambda)
    : chart_(std::move(chart)), section_(std::move(section)), lambda_(lambda) {}

Vec8 Cone::point(double r1, double r2, double u, double v) const {
  const OrientedPlane p = chart_.plane(u, v);
  Vec8 x = r1 * p.e1 + r2 * p.e2;
  if (section_) x += lambda_ * (*section_)(u, v);
  return x;
}

Eigen::Matrix<double, 8, 4> Cone::jacobian(double r1, double r2, double u, double v, double h) const {
  Eigen::Matrix<double, 8, 4> J;
  const OrientedPlane p = chart_.plane(u, v);
  J.col(0) = p.e1;
  J.col(1) = p.e2;
  J.col(2) = d4([&](double t) { return point(r1, r2, u + t, v); }, h);
  J.col(3) = d4([&](double t) { return point(r1, r2, u, v + t); }, h);
  return J;
}

Cone build_cone(const CurveChart& c, std::optional<SectionField> section, double lambda, int checks) {
  if (section) {
    for (const auto& [u, v] : c.sample_points(checks, checks)) {
      const OrientedPlane p = c.plane(u, v);
      const Vec8 s = (*section)(u, v);
      const double off = std::max(std::abs(s.dot(p.e1)), std::abs(s.dot(p.e2)));
      if (off > 1e-10 * (1 + s.norm()))
        throw std::invalid_argument("build_cone: section is not orthogonal to the plane at (" + std::to_string(u) +
                                    ", " + std::to_string(v) + ")");
    }
  }
  return Cone(c, std::move(section), lambda);
}

double cayley_measure(const Eigen::Matrix<double, 8, 4>& J, bool& degenerate) {
  Eigen::HouseholderQR<Eigen::Matrix<double, 8, 4>> qr(J);
  const Eigen::Matrix4d R = qr.matrixQR().topRows<4>().triangularView<Eigen::Upper>();
  double rmax = 0, rmin = 1e300;
  for (int i = 0; i < 4; ++i) {
    rmax = std::max(rmax, std::abs(R(i, i)));
    rmin = std::min(rmin, std::abs(R(i, i)));
  }
  degenerate = !(rmin > 1e-8 * rmax);
  if (degenerate) return 0;
  const Eigen::Matrix<double, 8, 4> Q = qr.householderQ() * Eigen::Matrix<double, 8, 4>::Identity();
  return psi_norm(Q.col(0), Q.col(1), Q.col(2), Q.col(3), nullptr);
}

CheckStats cayley_residual(const Cone& cone, const ConeOptions& opt, double tol) {
  const auto pts = cone.chart().sample_points(opt.nu, opt.nv);
  const auto radii = opt.radii.empty() ? default_radii(cone.deformed()) : opt.radii;
  struct R {
    std::vector<double> vals;
    int degenerate = 0;
  };
  auto res = util::parallel_map(pts.size(), [&](std::size_t k) {
    R r;
    for (const auto& [r1, r2] : radii) {
      bool deg = false;
      const double m = cayley_measure(cone.jacobian(r1, r2, pts[k].first, pts[k].second, opt.h), deg);
      if (deg)
        ++r.degenerate;
      else
        r.vals.push_back(m);
    }
    return r;
  });
  CheckStats st;
  st.name = cone.deformed() ? "deformed_cone_cayley" : "cone_cayley";
  st.anchor = "psi_m vanish on the orthonormalized tangent 4-plane";
  std::vector<double> all;
  for (const auto& r : res) {
    all.insert(all.end(), r.vals.begin(), r.vals.end());
    st.excluded += r.degenerate;
  }
  st.accumulate(all, tol);
  if (st.excluded) st.note = "rank-deficient tangent 4-planes excluded";
  return st;
}

ReductionReport reduction_check(const CurveChart& c, const ConeOptions& opt, const FrameGauge& gauge, double tol) {
  const auto pts = c.sample_points(opt.nu, opt.nv);
  const auto radii = opt.radii.empty() ? default_radii(false) : opt.radii;
  struct R {
    std::vector<double> direct, reduced, gap;
    double num = 0, den = 0;
  };
  auto res = util::parallel_map(pts.size(), [&](std::size_t k) {
    const double u = pts[k].first, v = pts[k].second;
    const CoframeSample s = c.coframe(u, v, gauge, opt.h);
    const Mat8& g = s.frame;
    const Mat8 Uu = g * s.du.omega;  // column a: d_u e_a through omega
    const Mat8 Uv = g * s.dv.omega;
    const Vec8 e1 = g.col(0), e2 = g.col(1);
    auto de = [&](int which, bool along_u) {
      return d4(
          [&](double t) {
            const OrientedPlane p = along_u ? c.plane(u + t, v) : c.plane(u, v + t);
            return which == 0 ? p.e1 : p.e2;
          },
          opt.h);
    };
    const Vec8 e1u = de(0, true), e2u = de(1, true), e1v = de(0, false), e2v = de(1, false);
    R r;
    for (const auto& [r1, r2] : radii) {
      Eigen::Matrix<double, 7, 1> direct, reduced = Eigen::Matrix<double, 7, 1>::Zero();
      psi_norm(e1, e2, r1 * e1u + r2 * e2u, r1 * e1v + r2 * e2v, &direct);
      const double rr[2] = {r1, r2};
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          Eigen::Matrix<double, 7, 1> p1, p2;
          psi_norm(e1, e2, Uu.col(a), Uv.col(b), &p1);
          psi_norm(e1, e2, Uv.col(a), Uu.col(b), &p2);
          reduced += rr[a] * rr[b] * (p1 - p2);
        }
      r.direct.push_back(direct.norm());
      r.reduced.push_back(reduced.norm());
      r.gap.push_back((direct - 0.5 * reduced).cwiseAbs().maxCoeff());
      r.num += direct.dot(reduced);
      r.den += reduced.squaredNorm();
    }
    return r;
  });
  ReductionReport rep;
  std::vector<double> direct, reduced;
  double num = 0, den = 0;
  for (const auto& r : res) {
    direct.insert(direct.end(), r.direct.begin(), r.direct.end());
    reduced.insert(reduced.end(), r.reduced.begin(), r.reduced.end());
    for (double x : r.gap) rep.discrepancy = std::max(rep.discrepancy, x);
    num += r.num;
    den += r.den;
  }
  rep.direct.name = "cone_psi_direct";
  rep.direct.anchor = "x^* psi_m(d_r1, d_r2, d_u, d_v) from the cone Jacobian";
  rep.direct.accumulate(direct, tol);
  rep.reduced.name = "cone_psi_reduced";
  rep.reduced.anchor = "quadratic form in r built from omega_i1, omega_i2";
  rep.reduced.accumulate(reduced, 2 * tol);
  rep.fitted_constant = den > 0 ? num / den : std::nan("");
  rep.consistent = rep.direct.pass == rep.reduced.pass;
  return rep;
}

}  // namespace cayley::curves
