// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include "cayley/curves/cone.hpp"
#include "cayley/curves/degree.hpp"
#include "cayley/curves/deform.hpp"
#include "cayley/curves/pseudoholo.hpp"
#include "cayley/geometry/twistor.hpp"
#include "cayley/spin7/algebra.hpp"
#include "cayley/spin7/comass.hpp"
#include "cayley/symbolic/suite.hpp"
#include "unit/common.hpp"

using namespace cayley;
using geometry::Mat8;
using geometry::Vec8;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void verdict(int n, bool ok, const std::string& what) {
  std::printf("%s  criterion %2d: %s\n", ok ? "PASS" : "FAIL", n, what.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

bool in_band(double ratio) { return ratio >= 3.5 && ratio <= 4.5; }

// Fixed smooth non-holomorphic chart for the convergence study.
curves::CurveChart wavy_chart() {
  return curves::CurveChart(
      [](double u, double v) {
        Vec8 a, b;
        for (int k = 0; k < 8; ++k) {
          a[k] = std::cos((0.3 + 0.1 * k) * u + (0.7 - 0.05 * k) * v + k) + 0.3 * (k == 0);
          b[k] = std::sin((0.5 - 0.08 * k) * u - (0.2 + 0.1 * k) * v + 0.5 * k) + 0.1 * (k - 3) * u * v;
        }
        return geometry::OrientedPlane::from_span(a, b);
      },
      {-0.5, 0.5, -0.5, 0.5}, "wavy");
}

}  // namespace

int main() {
  const auto start = Clock::now();
  const auto tables = spin7::build_tables();
  const auto& basis = spin7::spin7_basis();

  {
    const auto t0 = Clock::now();
    bool all_zero = true;
    for (const auto& A : spin7::spin7_basis().spin7) all_zero = all_zero && lie_action(A.matrix(), tables.phi).is_zero();
    const double secs = since(t0);
    verdict(1, all_zero && secs < 5, fmt("lie_action(A, Phi) = 0 exactly for all 21 generators (%.2f s < 5 s)", secs));
  }

  {
    const auto c = spin7::bracket_closure(basis);
    verdict(2, c.closed && c.spin7_dim == 21 && c.complement_dim == 7 && basis.spin7.size() == 21,
            fmt("dim spin(7) = %.0f, dim m = %.0f, brackets close exactly", c.spin7_dim, c.complement_dim));
  }

  {
    const auto rep = spin7::invariance_report(tables, basis);
    verdict(3, rep.psi_equivariant && rep.reps_skew && rep.psi_reps.size() == 21,
            "lie_action(A, psi_m) in span{psi} for all 21 x 7 pairs, 7x7 matrices skew");
  }

  {
    const auto t0 = Clock::now();
    const auto suite = symbolic::canned_suite();
    const double secs = since(t0);
    bool ok = true;
    for (const auto& r : suite) {
      ok = ok && r.ok();
      if (!r.holds) std::printf("      %s residual (%zu terms): %s\n", r.name.c_str(), r.residual.size(), r.residual.str().c_str());
    }
    // Mutation: flipping tau_3 must break the theta_3 row and nothing else.
    symbolic::Mutation m;
    m.flip_tau = 3;
    int broken = 0;
    bool right_row = false;
    for (const auto& r : symbolic::canned_suite(m))
      if (!r.ok()) {
        ++broken;
        right_row = r.name == "structure_theta3";
      }
    verdict(4, ok && secs < 30 && broken == 1 && right_row,
            fmt("%.0f symbolic identities exact (%.2f s < 30 s); tau_3 mutation caught at theta_3 row only",
                static_cast<double>(suite.size()), secs));
  }

  {
    spin7::ComassOptions opt;
    opt.starts = 512;
    const auto r = spin7::comass_estimate(spin7::float_tables().phi, opt);
    const double at_e1234 = spin7::evaluate_frame(spin7::float_tables().phi, Eigen::MatrixXd::Identity(8, 4));
    verdict(5, r.value >= 1 - 1e-6 && r.value <= 1 + 1e-9 && at_e1234 == 1,
            fmt("comass(Phi) = %.15f over 512 starts, Phi(e1,e2,e3,e4) = %.0f", r.value, at_e1234));
  }

  {
    std::mt19937_64 rng(2024);
    std::normal_distribution<double> N;
    double worst = 0, seed_gap = 0;
    for (int k = 0; k < 1000; ++k) {
      Vec8 a, b;
      for (int i = 0; i < 8; ++i) a[i] = N(rng), b[i] = N(rng);
      const auto p = geometry::OrientedPlane::from_span(a, b);
      worst = std::max(worst, spin7::spin7_defect(geometry::complete_frame(p, geometry::FrameGauge::random(k)).g));
      const auto t1 = geometry::twistor_project(p, geometry::FrameGauge::random(2 * k + 1));
      const auto t2 = geometry::twistor_project(p, geometry::FrameGauge::random(2 * k + 2));
      seed_gap = std::max(seed_gap, (t1 - t2).norm());
    }
    verdict(6, worst < 1e-10 && seed_gap < 1e-10,
            fmt("1000 random planes: sup |g*Phi - Phi| = %.2e, twistor seed gap = %.2e", worst, seed_gap));
  }

  {
    const auto line = testing::line_chart();
    const double ph = curves::pseudoholo_residual(line, {}, 1e-8).sup;
    const double cone = curves::cayley_residual(curves::build_cone(line)).sup;
    const double i1 = curves::fund_forms(line, {}, 1e-8).sup_I1;
    const double diam = curves::twistor_diameter(line).sup;
    const auto d1 = curves::degree(examples::fiber_atlas(examples::rational_curve(1)));
    const auto d2 = curves::degree(examples::fiber_atlas(examples::rational_curve(2)));
    const auto d3 = curves::degree(examples::fiber_atlas(examples::rational_curve(3)));
    const bool scale = std::abs(d2.value / d1.value - 2) < 2e-6 && std::abs(d3.value / d1.value - 3) < 3e-6;
    verdict(7,
            ph < 1e-8 && cone < 1e-7 && i1 < 1e-9 && diam < 1e-8 && d1.defect < 1e-6 && std::abs(d1.nearest) == 1 &&
                scale,
            fmt("fibre line: pseudoholo %.1e, cone %.1e, I1 %.1e, diameter %.1e", ph, cone, i1, diam) +
                fmt("; degree %.0f (defect %.1e), d=2,3 -> %.6f, %.6f", d1.nearest, d1.defect, d2.value / d1.value,
                    d3.value / d1.value));
  }

  {
    const auto line = testing::line_chart();
    std::mt19937_64 rng(91);
    std::vector<curves::SectionField> sections;
    for (int k = 0; k < 100; ++k) sections.push_back(testing::random_section(line, rng, k % 2 == 1));
    curves::AlphaOptions ao;
    ao.sample.nu = ao.sample.nv = 5;
    curves::ConeOptions co;
    co.nu = co.nv = 4;
    const auto rep = curves::lemma91_check(line, sections, ao, co);
    const double sep = std::min(rep.alpha_separation, rep.cayley_separation);
    verdict(8, rep.consistent == 100 && sep >= 1e3,
            fmt("%.0f/100 consistent verdicts, separation alpha %.1e, Cayley %.1e", rep.consistent,
                rep.alpha_separation, rep.cayley_separation));
  }

  {
    examples::OrbitSearchConfig cfg;
    cfg.seed = 1;
    const auto found = examples::search_orbit(cfg);
    double cayley = 1, alpha = 1;
    if (found.success) {
      const auto r = curves::i1_line_and_sections(examples::orbit_chart(found.spec));
      cayley = r.cayley.sup;
      alpha = r.alpha.sup;
    }
    bool refused = false;
    try {
      curves::i1_line_and_sections(testing::line_chart());
    } catch (const Refused&) {
      refused = true;
    }
    verdict(9, found.success && cayley < 1e-5 && refused,
            fmt("orbit from search: I1-line section alpha %.1e, deformed cone Cayley %.1e; fibre line refused", alpha,
                cayley));
  }

  {
    const auto wavy = wavy_chart();
    double mc[2] = {0, 0}, red[2] = {0, 0};
    int i = 0;
    for (double h : {0.02, 0.01}) {
      for (const auto& [u, v] : wavy.sample_points(3, 3))
        mc[i] = std::max(mc[i], geometry::mc_defect(wavy.frame_field({}, u, v), u, v, h));
      curves::ConeOptions co;
      co.nu = co.nv = 3;
      co.h = h;
      red[i] = curves::reduction_check(wavy, co).discrepancy;
      ++i;
    }
    const auto atlas = examples::fiber_atlas(examples::rational_curve(1));
    double deg[2];
    i = 0;
    for (int n : {64, 128}) {
      curves::DegreeOptions d;
      d.n_r = n;
      deg[i++] = curves::degree(atlas, d).defect;
    }
    const double r1 = mc[0] / mc[1], r2 = red[0] / red[1], r3 = deg[0] / deg[1];
    verdict(10, in_band(r1) && in_band(r2) && in_band(r3),
            fmt("halving ratios: Maurer-Cartan %.3f, reduction %.3f, degree quadrature %.3f (band [3.5, 4.5])", r1, r2,
                r3));
  }

  const double total = since(start);
  verdict(11, total < 300, fmt("full acceptance run %.1f s < 300 s", total));
  std::printf("%d criteria failed\n", failures);
  return failures ? 1 : 0;
}
