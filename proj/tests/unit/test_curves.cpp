#include <doctest.h>

#include <algorithm>
#include <numbers>
#include <random>

#include "cayley/curves/cone.hpp"
#include "cayley/curves/degree.hpp"
#include "cayley/curves/minimal.hpp"
#include "cayley/curves/pseudoholo.hpp"
#include "cayley/geometry/twistor.hpp"
#include "cayley/spin7/algebra.hpp"
#include "common.hpp"

using namespace cayley;
using curves::CurveChart;
using geometry::Mat8;
using geometry::Vec8;
using testing::generic_chart;
using testing::line_chart;
using testing::torus_chart;

namespace {

Mat8 spin7_element(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> N;
  Eigen::Matrix<double, 21, 1> x;
  for (auto& c : x) c = N(rng);
  return spin7::exp_group(spin7::spin7_matrix(x));
}

double plane_distance(const geometry::OrientedPlane& a, const geometry::OrientedPlane& b) {
  const Mat8 Pa = a.e1 * a.e1.transpose() + a.e2 * a.e2.transpose();
  const Mat8 Pb = b.e1 * b.e1.transpose() + b.e2 * b.e2.transpose();
  return (Pa - Pb).norm();
}

}  // namespace

TEST_SUITE("curves") {
  TEST_CASE("chart sampling") {
    const CurveChart c = line_chart();
    const auto pts = c.sample_points(4, 2);
    REQUIRE(pts.size() == 8);
    CHECK(pts[0].first == doctest::Approx(-0.75));
    CHECK(pts[0].second == doctest::Approx(-0.5));
    for (const auto& [u, v] : pts) {
      const auto p = c.plane(u, v);
      CHECK(std::abs(p.e1.norm() - 1) < 1e-12);
      CHECK(std::abs(p.e1.dot(p.e2)) < 1e-12);
    }
  }

  TEST_CASE("grid chart interpolates a smooth chart") {
    const CurveChart c = line_chart();
    const int n = 21;
    std::vector<std::vector<std::pair<Vec8, Vec8>>> nodes(n, std::vector<std::pair<Vec8, Vec8>>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const auto p = c.plane(-1 + 0.1 * i, -1 + 0.1 * j);
        nodes[i][j] = {p.e1, p.e2};
      }
    const CurveChart g = curves::grid_chart(nodes, c.domain());
    CHECK(plane_distance(g.plane(-1, -1), c.plane(-1, -1)) < 1e-12);
    CHECK(plane_distance(g.plane(0.2, 0.3), c.plane(0.2, 0.3)) < 1e-12);
    CHECK(plane_distance(g.plane(0.23, -0.41), c.plane(0.23, -0.41)) < 1e-3);
  }

  TEST_CASE("pseudoholomorphic residual") {
    CHECK(curves::pseudoholo_residual(line_chart(), {}, 1e-8).sup < 1e-8);
    const auto generic = curves::pseudoholo_residual(generic_chart());
    CHECK_FALSE(generic.pass);
    CHECK(generic.sup > 0.1);
    CHECK(curves::pseudoholo_residual(torus_chart(), {}, 1e-7).pass);
    const CurveChart conic = examples::fiber_chart(examples::rational_curve(2));
    CHECK(curves::pseudoholo_residual(conic, {}, 1e-8).pass);
  }

  TEST_CASE("residuals are Spin(7) invariant") {
    const Mat8 g = spin7_element(21);
    for (const CurveChart& c : {line_chart(), torus_chart(), generic_chart()}) {
      const double a = curves::pseudoholo_residual(c).sup;
      const double b = curves::pseudoholo_residual(c.transformed(g)).sup;
      CHECK(std::abs(a - b) < 1e-8);
      curves::ConeOptions co;
      co.nu = co.nv = 3;
      const double ca = curves::cayley_residual(curves::build_cone(c), co).sup;
      const double cb = curves::cayley_residual(curves::build_cone(c.transformed(g)), co).sup;
      CHECK(std::abs(ca - cb) < 1e-8);
    }
  }

  TEST_CASE("first fundamental forms") {
    const auto line = curves::fund_forms(line_chart());
    CHECK(line.sup_I1 < 1e-9);
    CHECK(line.R1_everywhere);
    CHECK(line.R1_and_R2 == 0);
    for (const auto& s : line.samples) CHECK(s.I2 > 0.5);

    const auto torus = curves::fund_forms(torus_chart());
    CHECK(torus.immersed);
    for (const auto& s : torus.samples) {
      CHECK(s.I1 * s.I1 + s.I2 * s.I2 == doctest::Approx(1).epsilon(1e-9));
      CHECK_FALSE(s.in_R1);
    }
    CHECK_THROWS_AS(curves::fund_forms(generic_chart()), Refused);
  }

  TEST_CASE("I1 vanishes exactly when the V2 relations hold") {
    for (const CurveChart& c : {line_chart(), torus_chart()}) {
      const auto ff = curves::fund_forms(c);
      for (const auto& s : ff.samples) {
        const double v2 = geometry::distribution_relations(c.coframe(s.u, s.v, {}, 1e-4)).v2;
        CHECK((s.I1 < 1e-6) == (v2 < 1e-6));
      }
    }
  }

  TEST_CASE("twistor image of a fibre curve is a point") {
    CHECK(curves::twistor_diameter(line_chart()).sup < 1e-8);
    CHECK(curves::twistor_diameter(torus_chart()).sup > 1e-2);
  }

  TEST_CASE("degree of rational fibre curves") {
    curves::DegreeOptions opt;
    opt.n_r = 256;
    const double d1 = curves::degree(examples::fiber_atlas(examples::rational_curve(1)), opt).value;
    CHECK(std::abs(std::abs(d1) - 1) < 1e-4);
    CHECK(d1 == doctest::Approx(-1).epsilon(1e-4));  // sign convention of this implementation
    for (int d : {2, 3}) {
      const double v = curves::degree(examples::fiber_atlas(examples::rational_curve(d)), opt).value;
      CHECK(v / d1 == doctest::Approx(d).epsilon(1e-4));
    }
    // Fubini-Study oracle: on the line w -> [1:w] the density is the
    // Fubini-Study area form 4 / (1 + |w|^2)^2, whose total is 4 pi.
    const CurveChart c = examples::fiber_atlas(examples::rational_curve(1)).inner;
    for (const auto& [u, v] : c.sample_points(3, 3)) {
      const double fs = 4 / std::pow(1 + u * u + v * v, 2);
      CHECK(curves::degree_density(c, u, v, {}, 1e-4) == doctest::Approx(-fs).epsilon(1e-7));
    }
  }

  TEST_CASE("degree of a null-homologous torus vanishes") {
    curves::Domain dom{0, 2 * std::numbers::pi, 0, 2 * std::numbers::pi, true, true};
    const CurveChart torus(
        [](double u, double v) {
          const std::array<examples::cd, 4> Z = {1.0, examples::cd(0.3 * std::cos(u), 0.2 * std::sin(v)),
                                                  0.1 * std::sin(u + v), 0.0};
          return examples::fiber_plane(Z);
        },
        dom, "torus");
    curves::DegreeOptions opt;
    opt.n_r = opt.n_phi = 32;
    CHECK(std::abs(curves::degree(torus, opt).value) < 1e-6);
    CHECK_THROWS_AS(curves::degree(line_chart(), opt), std::invalid_argument);
  }

  TEST_CASE("cone geometry") {
    const CurveChart c = line_chart();
    const curves::Cone cone = curves::build_cone(c);
    CHECK_FALSE(cone.deformed());
    CHECK((cone.point(2.0, 3.0, 0.1, 0.2) - 2 * cone.point(1.0, 1.5, 0.1, 0.2)).norm() < 1e-14);

    // The cone over a fibre curve is the complex cone over Z(w) in C^4.
    const Mat8& J = geometry::J0();
    for (const auto& [u, v] : c.sample_points(3, 3)) {
      const Vec8 x = cone.point(0.4, -1.1, u, v);
      const Vec8 base = examples::fiber_point({1.0, examples::cd(u, v), 0.0, 0.0});
      Eigen::Matrix<double, 8, 3> M;
      M << base, J * base, x;
      CHECK(Eigen::JacobiSVD<Eigen::Matrix<double, 8, 3>>(M).singularValues()[2] < 1e-12);
    }

    // lambda-family: x_lambda = lambda s + r1 e1 + r2 e2.
    const curves::SectionField s = curves::project_to_h(c, [](double u, double v) {
      Vec8 x = Vec8::Zero();
      x[4] = 1 + u;
      x[6] = v;
      return x;
    });
    const curves::Cone c1 = curves::build_cone(c, s, 1.0), c2 = curves::build_cone(c, s, 2.5);
    CHECK((c2.point(0.3, 0.4, 0.1, 0.1) - c1.point(0.3, 0.4, 0.1, 0.1) - 1.5 * s(0.1, 0.1)).norm() < 1e-14);
    CHECK_THROWS_AS(curves::build_cone(c, [](double, double) { return Vec8(Mat8::Identity().col(0)); }),
                    std::invalid_argument);
  }

  TEST_CASE("Cayley residual") {
    Eigen::Matrix<double, 8, 4> J = Eigen::Matrix<double, 8, 4>::Identity();
    bool degenerate = true;
    CHECK(curves::cayley_measure(J, degenerate) == 0);
    CHECK_FALSE(degenerate);
    J.col(3) = J.col(2);
    curves::cayley_measure(J, degenerate);
    CHECK(degenerate);
    // e1 e3 e5 e6 is far from Cayley.
    Eigen::Matrix<double, 8, 4> K = Eigen::Matrix<double, 8, 4>::Zero();
    K(0, 0) = K(2, 1) = K(4, 2) = K(5, 3) = 1;
    CHECK(curves::cayley_measure(K, degenerate) > 0.5);

    CHECK(curves::cayley_residual(curves::build_cone(line_chart())).sup < 1e-7);
    CHECK(curves::cayley_residual(curves::build_cone(torus_chart()), {}, 1e-6).pass);
    CHECK(curves::cayley_residual(curves::build_cone(generic_chart())).sup > 0.1);
  }

  TEST_CASE("reduction of the cone condition") {
    curves::ConeOptions co;
    co.nu = co.nv = 3;
    const auto line = curves::reduction_check(line_chart(), co);
    CHECK(line.direct.pass);
    CHECK(line.reduced.pass);
    CHECK(line.consistent);
    const auto generic = curves::reduction_check(generic_chart(), co);
    CHECK_FALSE(generic.direct.pass);
    CHECK_FALSE(generic.reduced.pass);
    CHECK(generic.consistent);
    CHECK(generic.fitted_constant == doctest::Approx(0.5).epsilon(1e-4));
    CHECK(generic.discrepancy < 1e-6);
    // The reduction is a pointwise identity: it does not need pseudoholomorphy.
    co.h = 0.02;
    const double coarse = curves::reduction_check(generic_chart(), co).discrepancy;
    co.h = 0.01;
    const double fine = curves::reduction_check(generic_chart(), co).discrepancy;
    CHECK(coarse / fine > 3.5);
    CHECK(coarse / fine < 4.5);
  }

  TEST_CASE("minimality of the twistor image") {
    const auto line = curves::minimality_residual(line_chart());
    CHECK(line.constant_map);
    const auto torus = curves::minimality_residual(torus_chart());
    CHECK_FALSE(torus.constant_map);
    CHECK(torus.mean_curvature.sup < 1e-3);
    // Branch points sit on R1; this orbit has I1 bounded away from zero.
    CHECK(torus.branch_points.empty());
    CHECK(curves::minimality_residual(generic_chart()).mean_curvature.sup > 1e-2);
  }

  TEST_CASE("branch points are flagged where I1 vanishes") {
    // Reparametrize the torus orbit by (u, v) -> |w|^2 (u, v): the
    // differential, and with it I1, vanishes at the centre only.
    const CurveChart torus = torus_chart();
    const CurveChart stalled(
        [torus](double u, double v) {
          const double r2 = u * u + v * v;
          return torus.plane(r2 * u, r2 * v);
        },
        {-0.3, 0.3, -0.3, 0.3}, "stalled");
    curves::MinimalityOptions mo;
    mo.nu = mo.nv = 5;
    mo.branch_threshold = 1e-2;
    const auto r = curves::minimality_residual(stalled, mo);
    std::vector<double> i1;
    for (const auto& [u, v] : stalled.sample_points(5, 5)) {
      const auto s = stalled.coframe(u, v, {}, 1e-4);
      i1.push_back(s.du.theta_od().norm() + s.dv.theta_od().norm());
    }
    std::vector<double> sorted = i1;
    std::sort(sorted.begin(), sorted.end());
    const double median = sorted[sorted.size() / 2];
    const auto pts = stalled.sample_points(5, 5);
    std::vector<std::pair<double, double>> zeros;
    for (std::size_t k = 0; k < pts.size(); ++k)
      if (i1[k] < 1e-6 * median) zeros.push_back(pts[k]);
    REQUIRE(zeros.size() == 1);
    CHECK(r.branch_points == zeros);
  }
}
