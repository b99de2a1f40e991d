#include "cayley/geometry/coframe.hpp"

namespace cayley::geometry {

CoframeValues coframe_values(const Mat8& w) {
  using C = std::complex<double>;
  const C i(0, 1);
  auto W = [&](int a, int b) { return w(a - 1, b - 1); };
  CoframeValues out;
  out.omega = w;
  const C z3 = W(3, 1) + i * W(4, 1);
  const C z4 = W(3, 2) + i * W(4, 2);
  const C z6 = W(6, 1) - i * W(7, 1);
  const C z7 = W(6, 2) - i * W(7, 2);
  const C z5 = W(5, 1) - i * W(8, 1);
  const C z8 = W(5, 2) - i * W(8, 2);
  out.zeta << z3, z4, z5, z6, z7, z8;
  out.theta << z3 + i * z4, z3 - i * z4, z6 + i * z7, z6 - i * z7, z5 + i * z8, z5 - i * z8;
  const auto& th = out.theta;
  auto tb = [&](int a) { return std::conj(th[a - 1]); };
  auto t = [&](int a) { return th[a - 1]; };
  const C hi(0, 0.5);
  auto& k = out.kappa;
  k(0, 0) = i * W(4, 3);
  k(0, 1) = -(W(6, 3) + i * W(6, 4)) - hi * tb(5);
  k(0, 2) = -(W(5, 3) + i * W(5, 4)) + hi * tb(3);
  k(1, 0) = (W(6, 3) - i * W(6, 4)) - hi * t(5);
  k(1, 1) = -i * W(7, 6);
  k(1, 2) = (W(6, 5) - i * W(7, 5)) - hi * tb(1);
  k(2, 0) = (W(5, 3) - i * W(5, 4)) + hi * t(3);
  k(2, 1) = -(W(6, 5) + i * W(7, 5)) - hi * t(1);
  k(2, 2) = i * (W(7, 6) - W(4, 3) - W(2, 1));
  return out;
}

CoframeSample mc_pullback(const FrameField& F, double u, double v, double h) {
  CoframeSample s;
  s.frame = F(u, v);
  const Mat8 gu = (F(u + h, v) - F(u - h, v)) / (2 * h);
  const Mat8 gv = (F(u, v + h) - F(u, v - h)) / (2 * h);
  s.du = coframe_values(s.frame.transpose() * gu);
  s.dv = coframe_values(s.frame.transpose() * gv);
  return s;
}

double mc_defect(const FrameField& F, double u, double v, double h) {
  const CoframeSample c = mc_pullback(F, u, v, h);
  const Mat8 wv_p = mc_pullback(F, u + h, v, h).dv.omega;
  const Mat8 wv_m = mc_pullback(F, u - h, v, h).dv.omega;
  const Mat8 wu_p = mc_pullback(F, u, v + h, h).du.omega;
  const Mat8 wu_m = mc_pullback(F, u, v - h, h).du.omega;
  const Mat8 dw = (wv_p - wv_m) / (2 * h) - (wu_p - wu_m) / (2 * h);
  const Mat8 ww = c.du.omega * c.dv.omega - c.dv.omega * c.du.omega;
  return (dw + ww).cwiseAbs().maxCoeff();
}

DistributionResidual distribution_relations(const CoframeSample& s) {
  using C = std::complex<double>;
  const C i(0, 1);
  DistributionResidual r;
  for (const CoframeValues* cv : {&s.du, &s.dv}) {
    auto xi = [&](int j) { return cv->omega(j - 1, 0) + i * cv->omega(j - 1, 1); };
    double scale = 0;
    for (int j = 3; j <= 8; ++j) scale += std::norm(xi(j));
    scale = std::sqrt(scale);
    if (scale < 1e-300) continue;
    const double v1 = std::sqrt(std::norm(xi(4) + i * xi(3)) + std::norm(xi(7) - i * xi(6)) + std::norm(xi(8) - i * xi(5)));
    const double v2 = std::sqrt(std::norm(xi(4) - i * xi(3)) + std::norm(xi(7) + i * xi(6)) + std::norm(xi(8) + i * xi(5)));
    r.v1 = std::max(r.v1, v1 / scale);
    r.v2 = std::max(r.v2, v2 / scale);
  }
  return r;
}

}  // namespace cayley::geometry
