#include "cayley/curves/deform.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "cayley/util/parallel.hpp"

namespace cayley::curves {

namespace {

const cd I(0, 1);

Eigen::Matrix3cd bracket(const Vec3c& v) {
  Eigen::Matrix3cd m;
  m << 0, v[2], -v[1], -v[2], 0, v[0], v[1], -v[0], 0;
  return m;
}

FrameFactory default_frames(const CurveChart& c, const FrameGauge& gauge) {
  return [c, gauge](double u, double v) { return c.frame_field(gauge, u, v); };
}

void require_pseudoholo(const CurveChart& c, const SampleOptions& opt, double tol, const char* who) {
  const CheckStats ph = pseudoholo_residual(c, opt, tol);
  if (!ph.pass)
    throw Refused(std::string(who) + ": the chart is not pseudoholomorphic (residual " + std::to_string(ph.sup) +
                  "), so type (1,0) is not defined");
}

AlphaReport alpha_unchecked(const CurveChart& c, const SectionField& s, const AlphaOptions& opt, double tol) {
  const auto& so = opt.sample;
  const FrameFactory frames = opt.frames ? opt.frames : default_frames(c, so.gauge);
  const auto pts = c.sample_points(so.nu, so.nv);
  AlphaReport rep;
  rep.samples = util::parallel_map(pts.size(), [&](std::size_t k) {
    const double u = pts[k].first, v = pts[k].second, h = so.h;
    const FrameField F = frames(u, v);
    const CoframeSample cs = geometry::mc_pullback(F, u, v, h);
    auto a_at = [&](double uu, double vv) { return section_components(F(uu, vv), s(uu, vv)); };
    AlphaSample out;
    out.u = u;
    out.v = v;
    out.a = section_components(cs.frame, s(u, v));
    const Vec3c da_u = (a_at(u + h, v) - a_at(u - h, v)) / (2 * h);
    const Vec3c da_v = (a_at(u, v + h) - a_at(u, v - h)) / (2 * h);
    const Vec3c abar = out.a.conjugate();
    out.alpha_u = da_u + cs.du.kappa * out.a + 0.5 * I * bracket(cs.du.theta_od().conjugate()) * abar;
    out.alpha_v = da_v + cs.dv.kappa * out.a + 0.5 * I * bracket(cs.dv.theta_od().conjugate()) * abar;
    const InducedStructure st = InducedStructure::from(cs.du, cs.dv);
    for (int i = 0; i < 3; ++i) out.zero_one[i] = st.zero_one_norm(out.alpha_u[i], out.alpha_v[i]);
    return out;
  });
  for (const auto& x : rep.samples) rep.a_scale = std::max(rep.a_scale, x.a.norm());
  const double scale = rep.a_scale > 0 ? rep.a_scale : 1.0;
  std::vector<double> vals;
  for (const auto& x : rep.samples) vals.push_back(x.zero_one.norm() / scale);
  rep.residual.name = "alpha_type_10";
  rep.residual.anchor = "alpha_i = da_i + kappa_ij a_j + (i/2)[conj theta_od]_ij conj a_j has no (0,1) part";
  rep.residual.accumulate(vals, tol);
  return rep;
}

}  // namespace

Vec3c section_components(const Mat8& g, const Vec8& s) {
  const Vec8 c = g.transpose() * s;
  return {cd(c[2], c[3]), cd(c[5], -c[6]), cd(c[4], -c[7])};
}

Vec8 section_from_components(const Mat8& g, const Vec3c& a) {
  const auto f = geometry::f_vectors(g);
  Vec8c s = Vec8c::Zero();
  for (int k = 0; k < 3; ++k) s += a[k] * f[k + 1];
  return s.real();
}

SectionField project_to_h(const CurveChart& c, SectionField raw) {
  return [c, raw = std::move(raw)](double u, double v) {
    const OrientedPlane p = c.plane(u, v);
    Vec8 s = raw(u, v);
    s -= p.e1.dot(s) * p.e1;
    s -= p.e2.dot(s) * p.e2;
    return s;
  };
}

AlphaReport alpha_forms(const CurveChart& c, const SectionField& s, const AlphaOptions& opt, double tol) {
  require_pseudoholo(c, opt.sample, opt.pseudoholo_tol, "alpha_forms");
  return alpha_unchecked(c, s, opt, tol);
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::HolomorphicAndCayley: return "type (1,0) and Cayley";
    case Verdict::NeitherHolomorphicNorCayley: return "neither";
    case Verdict::Inconsistent: return "inconsistent";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

Lemma91Report lemma91_check(const CurveChart& c, const std::vector<SectionField>& sections, const AlphaOptions& opt,
                            const ConeOptions& cone, double small, double large) {
  require_pseudoholo(c, opt.sample, opt.pseudoholo_tol, "lemma91_check");
  Lemma91Report rep;
  double hol_alpha = 0, hol_cayley = 0;
  double non_alpha = std::numeric_limits<double>::infinity(), non_cayley = non_alpha;
  for (const auto& s : sections) {
    Lemma91Row row;
    row.alpha = alpha_unchecked(c, s, opt, small).residual.sup;
    row.cayley = cayley_residual(build_cone(c, s), cone, small).sup;
    const bool a_small = row.alpha < small, c_small = row.cayley < small;
    const bool a_large = row.alpha > large, c_large = row.cayley > large;
    if (a_small && c_small) {
      row.verdict = Verdict::HolomorphicAndCayley;
      hol_alpha = std::max(hol_alpha, row.alpha);
      hol_cayley = std::max(hol_cayley, row.cayley);
    } else if (a_large && c_large) {
      row.verdict = Verdict::NeitherHolomorphicNorCayley;
      non_alpha = std::min(non_alpha, row.alpha);
      non_cayley = std::min(non_cayley, row.cayley);
    } else if ((a_small && c_large) || (a_large && c_small)) {
      row.verdict = Verdict::Inconsistent;
    }
    switch (row.verdict) {
      case Verdict::Inconsistent: ++rep.inconsistent; break;
      case Verdict::Inconclusive: ++rep.inconclusive; break;
      default: ++rep.consistent;
    }
    rep.rows.push_back(row);
  }
  auto ratio = [](double big, double tiny) {
    if (!std::isfinite(big)) return 0.0;
    return tiny > 0 ? big / tiny : std::numeric_limits<double>::infinity();
  };
  rep.alpha_separation = ratio(non_alpha, hol_alpha);
  rep.cayley_separation = ratio(non_cayley, hol_cayley);
  return rep;
}

I1LineResult i1_line_and_sections(const CurveChart& c, const I1LineOptions& opt) {
  SampleOptions so;
  so.h = opt.h;
  so.gauge = opt.gauge;
  require_pseudoholo(c, so, 1e-7, "i1_line_and_sections");

  const auto& d = c.domain();
  const double uc = 0.5 * (d.u0 + d.u1), vc = 0.5 * (d.v0 + d.v1);
  const double hu = 0.5 * (d.u1 - d.u0), hv = 0.5 * (d.v1 - d.v0);
  const FrameField base = c.frame_field(opt.gauge, uc, vc);

  // Unit Re(I1(d_u)) in H; with e4 = T(e1,e2,e3) this makes f1 span the I1 line.
  auto i1_direction = [base, ih = opt.inner_h](double u, double v, double* rel) {
    const CoframeSample s = geometry::mc_pullback(base, u, v, ih);
    const Vec3c w = s.du.theta_od();
    if (rel) *rel = w.norm() / s.du.theta.norm();
    const auto f = geometry::f_vectors(s.frame);
    Vec8c phi = Vec8c::Zero();
    for (int a = 0; a < 3; ++a) phi += w[a] * f[a + 1];
    return Vec8(phi.real());
  };

  const int n = opt.collocation;
  std::vector<std::pair<double, double>> nodes;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      nodes.emplace_back(d.u0 + (d.u1 - d.u0) * i / (n - 1), d.v0 + (d.v1 - d.v0) * j / (n - 1));
  for (const auto& [u, v] : nodes) {
    double rel = 0;
    i1_direction(u, v, &rel);
    if (rel < 1e-6)
      throw Refused("i1_line_and_sections: I1 vanishes at (" + std::to_string(u) + ", " + std::to_string(v) +
                    ") so the line L is undefined there (curves tangent to the fibers have I1 = 0 everywhere)");
  }

  auto adapted_at = [c, gauge = opt.gauge, i1_direction](double u, double v, const std::optional<geometry::FrameChoice>& ch) {
    const Vec8 e3 = i1_direction(u, v, nullptr).normalized();
    return geometry::complete_frame_with_e3(c.plane(u, v), e3, gauge, ch, geometry::Validation::Orthonormality);
  };
  const geometry::FrameChoice choice = adapted_at(uc, vc, std::nullopt).choice;
  const FrameField adapted = [adapted_at, choice](double u, double v) { return adapted_at(u, v, choice).g; };

  I1LineResult out;
  out.frames = [adapted](double, double) { return adapted; };

  std::vector<std::pair<int, int>> mons;
  for (int p = 0; p <= opt.degree; ++p)
    for (int q = 0; q + p <= opt.degree; ++q) mons.emplace_back(p, q);
  const int m = static_cast<int>(mons.size());

  struct Row {
    Eigen::VectorXcd coeffs;
    double theta35 = 0;
  };
  auto rows = util::parallel_map(nodes.size(), [&](std::size_t k) {
    const double u = nodes[k].first, v = nodes[k].second;
    const double x = (u - uc) / hu, y = (v - vc) / hv;
    const CoframeSample s = geometry::mc_pullback(adapted, u, v, opt.h);
    const cd tau = InducedStructure::from(s.du, s.dv).tau;
    const cd k11 = s.dv.kappa(0, 0) - tau * s.du.kappa(0, 0);
    Row r;
    r.coeffs.resize(m);
    for (int t = 0; t < m; ++t) {
      const auto [p, q] = mons[t];
      const double mono = std::pow(x, p) * std::pow(y, q);
      const double mx = p ? p * std::pow(x, p - 1) * std::pow(y, q) / hu : 0.0;
      const double my = q ? q * std::pow(x, p) * std::pow(y, q - 1) / hv : 0.0;
      r.coeffs[t] = (my - tau * mx) + k11 * mono;
    }
    r.theta35 = std::max(std::abs(s.du.theta[2]), std::abs(s.du.theta[4])) / s.du.theta.norm();
    return r;
  });
  Eigen::MatrixXcd M(static_cast<int>(nodes.size()) + 1, m);
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(M.rows());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    M.row(static_cast<int>(k)) = rows[k].coeffs.transpose();
    out.theta35 = std::max(out.theta35, rows[k].theta35);
  }
  M.row(M.rows() - 1).setZero();
  for (int t = 0; t < m; ++t)
    if (mons[t] == std::make_pair(0, 0)) M(M.rows() - 1, t) = 1;
  rhs[M.rows() - 1] = 1;
  const Eigen::VectorXcd coef = M.completeOrthogonalDecomposition().solve(rhs);
  out.solve_residual = (M * coef - rhs).cwiseAbs().maxCoeff();

  out.a1 = [coef, mons, uc, vc, hu, hv](double u, double v) {
    const double x = (u - uc) / hu, y = (v - vc) / hv;
    cd acc = 0;
    for (std::size_t t = 0; t < mons.size(); ++t) acc += coef[t] * std::pow(x, mons[t].first) * std::pow(y, mons[t].second);
    return acc;
  };
  out.section = [adapted, a1 = out.a1](double u, double v) {
    return section_from_components(adapted(u, v), Vec3c(a1(u, v), 0, 0));
  };

  AlphaOptions ao;
  ao.sample = SampleOptions{6, 6, opt.h, opt.gauge};
  out.alpha = alpha_unchecked(c, out.section, ao, opt.tol).residual;
  out.alpha.name = "i1_section_alpha";
  out.cayley = cayley_residual(build_cone(c, out.section), ConeOptions{}, opt.tol);
  out.cayley.name = "i1_section_deformed_cone";
  if (out.solve_residual > 1e-6) {
    out.alpha.note = "collocation least squares did not converge (residual " + std::to_string(out.solve_residual) + ")";
  }
  return out;
}

IILReport second_fund_IIL(const CurveChart& c, const LineField& line, const SampleOptions& opt, double tol) {
  const auto pts = c.sample_points(opt.nu, opt.nv);
  IILReport rep;
  rep.samples = util::parallel_map(pts.size(), [&](std::size_t k) {
    const double u = pts[k].first, v = pts[k].second, h = opt.h;
    const CoframeSample cs = c.coframe(u, v, opt.gauge, h);
    const auto f = geometry::f_vectors(cs.frame);
    const Vec8c l = line(u, v);
    const double ln = l.norm();
    if (ln < 1e-300) throw std::runtime_error("second_fund_IIL: zero line vector");
    const Vec8c lhat = l / ln;
    auto second = [&](const Vec8c& dl, Eigen::Vector4cd& coeff) {
      Vec8c w = Vec8c::Zero();
      for (const auto& fk : f) w += fk * (fk.dot(dl) / 2.0);
      w -= lhat * lhat.dot(w);
      for (int j = 0; j < 4; ++j) coeff[j] = f[j].dot(w) / 2.0;
      return Vec8c(w / ln);
    };
    IILSample s;
    s.u = u;
    s.v = v;
    const Vec8c IIu = second((line(u + h, v) - line(u - h, v)) / (2 * h), s.coeff_u);
    const Vec8c IIv = second((line(u, v + h) - line(u, v - h)) / (2 * h), s.coeff_v);
    const InducedStructure st = InducedStructure::from(cs.du, cs.dv);
    double acc = 0;
    for (int j = 0; j < 8; ++j) acc += std::pow(st.zero_one_norm(IIu[j], IIv[j]), 2);
    s.zero_one = std::sqrt(acc);
    return s;
  });
  std::vector<double> vals;
  for (const auto& s : rep.samples) vals.push_back(s.zero_one);
  rep.residual.name = "second_fundamental_form_type_10";
  rep.residual.anchor = "L is holomorphic iff II_L has no (0,1) part";
  rep.residual.accumulate(vals, tol);
  return rep;
}

}  // namespace cayley::curves
