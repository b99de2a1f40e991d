#include <doctest.h>

#include <random>

#include "cayley/curves/chart.hpp"
#include "cayley/examples/fiber.hpp"
#include "cayley/geometry/coframe.hpp"
#include "cayley/geometry/frame.hpp"
#include "cayley/geometry/twistor.hpp"
#include "cayley/spin7/algebra.hpp"

using namespace cayley;
using geometry::Mat8;
using geometry::OrientedPlane;
using geometry::Vec8;
using cd = std::complex<double>;

namespace {

Vec8 e(int i) { return Mat8::Identity().col(i - 1); }

OrientedPlane random_plane(std::mt19937_64& rng) {
  std::normal_distribution<double> N;
  Vec8 a, b;
  for (int k = 0; k < 8; ++k) a[k] = N(rng), b[k] = N(rng);
  return OrientedPlane::from_span(a, b);
}

Mat8 random_spin7(std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> N;
  Eigen::Matrix<double, 21, 1> x;
  for (auto& c : x) c = scale * N(rng);
  return spin7::exp_group(spin7::spin7_matrix(x));
}

curves::CurveChart wavy_chart() {
  return curves::CurveChart(
      [](double u, double v) {
        Vec8 a, b;
        for (int k = 0; k < 8; ++k) {
          a[k] = std::cos((0.3 + 0.1 * k) * u + (0.7 - 0.05 * k) * v + k) + 0.3 * (k == 0);
          b[k] = std::sin((0.5 - 0.08 * k) * u - (0.2 + 0.1 * k) * v + 0.5 * k) + 0.1 * (k - 3) * u * v;
        }
        return OrientedPlane::from_span(a, b);
      },
      {-0.5, 0.5, -0.5, 0.5}, "wavy");
}

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("oriented planes") {
    std::mt19937_64 rng(1);
    const OrientedPlane p = random_plane(rng);
    CHECK(p.e1.norm() == doctest::Approx(1).epsilon(1e-12));
    CHECK(p.e2.norm() == doctest::Approx(1).epsilon(1e-12));
    CHECK(std::abs(p.e1.dot(p.e2)) < 1e-12);
    CHECK_THROWS(OrientedPlane::from_span(e(1), 2 * e(1)));
  }

  TEST_CASE("completion of the coordinate plane is the identity") {
    const auto f = geometry::complete_frame({e(1), e(2)});
    CHECK((f.g - Mat8::Identity()).cwiseAbs().maxCoeff() < 1e-15);
  }

  TEST_CASE("random planes give Spin(7) frames") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 200; ++trial) {
      const OrientedPlane p = random_plane(rng);
      const auto f = geometry::complete_frame(p, geometry::FrameGauge::random(trial));
      CHECK(spin7::spin7_defect(f.g) < 1e-10);
      CHECK(geometry::frame_defect(f.g) < 1e-10);
      CHECK((f.g.col(0) - p.e1).norm() < 1e-14);
      CHECK((f.g.col(1) - p.e2).norm() < 1e-14);
    }
  }

  TEST_CASE("prescribed e3") {
    const OrientedPlane p{e(1), e(2)};
    const Vec8 e3 = (e(3) + e(6)).normalized();
    const auto f = geometry::complete_frame_with_e3(p, e3);
    CHECK((f.g.col(2) - e3).norm() < 1e-14);
    CHECK(spin7::spin7_defect(f.g) < 1e-10);
    CHECK_THROWS(geometry::complete_frame_with_e3(p, (e(1) + e(3)).normalized()));
  }

  TEST_CASE("complex structure and f-vectors of the identity frame") {
    const Mat8& J = geometry::J0();
    CHECK((J * J + Mat8::Identity()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((J * e(1) - e(2)).norm() == 0);
    CHECK((J * e(3) - e(4)).norm() == 0);
    CHECK((J * e(6) + e(7)).norm() == 0);
    CHECK((J * e(5) + e(8)).norm() == 0);
    const auto f = geometry::f_vectors(Mat8::Identity());
    const cd i(0, 1);
    CHECK(f[0][0] == cd(1));
    CHECK(f[0][1] == -i);
    CHECK(f[1][2] == cd(1));
    CHECK(f[1][3] == -i);
    CHECK(f[2][5] == cd(1));
    CHECK(f[2][6] == i);
    CHECK(f[3][4] == cd(1));
    CHECK(f[3][7] == i);
    std::mt19937_64 rng(3);
    const Mat8 g = random_spin7(rng);
    const Mat8 Jg = geometry::complex_structure(g);
    CHECK((Jg - g * J * g.transpose()).cwiseAbs().maxCoeff() < 1e-12);
    // f_a are (1,0) or (0,1) for J consistently: J f = i f.
    for (const auto& fa : geometry::f_vectors(g)) CHECK((Jg.cast<cd>() * fa - i * fa).norm() < 1e-12);
  }

  TEST_CASE("Phi splits as Kahler square plus a real (4,0) part") {
    using FC = exterior::AlternatingForm<cd>;
    const Mat8& J = geometry::J0();
    FC w(8, 2);
    for (int a = 1; a <= 8; ++a)
      for (int b = a + 1; b <= 8; ++b) w.add_signed(std::array<int, 2>{a, b}, cd(J(b - 1, a - 1)));
    const FC half_w2 = wedge(w, w) * cd(0.5);
    const auto f = geometry::f_vectors(Mat8::Identity());
    std::array<FC, 4> z;
    for (int a = 0; a < 4; ++a) {
      z[a] = FC(8, 1);
      for (int k = 0; k < 8; ++k) z[a].add_signed(std::array<int, 1>{k + 1}, f[a][k]);
    }
    const FC ups = wedge(wedge(z[0], z[1]), wedge(z[2], z[3]));
    // Least squares for Phi = x w^2/2 + y Re(ups) + t Im(ups) over the 70 coefficients.
    const auto phi = spin7::float_tables().phi;
    Eigen::MatrixXd A(70, 3);
    Eigen::VectorXd rhs(70);
    int row = 0;
    for (unsigned m = 0; m < 256; ++m) {
      if (std::popcount(m) != 4) continue;
      const auto idx = exterior::mask_indices(static_cast<exterior::IndexMask>(m));
      const std::span<const int> s(idx);
      A(row, 0) = half_w2.coefficient(s).real();
      A(row, 1) = ups.coefficient(s).real();
      A(row, 2) = ups.coefficient(s).imag();
      rhs[row] = phi.coefficient(s);
      ++row;
    }
    const Eigen::Vector3d x = A.colPivHouseholderQr().solve(rhs);
    CHECK((A * x - rhs).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(x[0] == doctest::Approx(1).epsilon(1e-12));
    CHECK(std::hypot(x[1], x[2]) == doctest::Approx(1).epsilon(1e-12));
  }

  TEST_CASE("twistor point is well defined") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 50; ++trial) {
      const OrientedPlane p = random_plane(rng);
      const auto t0 = geometry::twistor_project(p, geometry::FrameGauge::random(1));
      CHECK(t0.norm() == doctest::Approx(1).epsilon(1e-12));
      CHECK((geometry::twistor_project(p, geometry::FrameGauge::random(99)) - t0).norm() < 1e-10);
      const double t = 0.37 * trial;
      const OrientedPlane r{std::cos(t) * p.e1 + std::sin(t) * p.e2, -std::sin(t) * p.e1 + std::cos(t) * p.e2};
      CHECK((geometry::twistor_project(r) - t0).norm() < 1e-10);
    }
  }

  TEST_CASE("CP^3 fibre through e1 e2 maps to one point") {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> N;
    const auto f = geometry::f_vectors(Mat8::Identity());
    const auto base = geometry::twistor_project({e(1), e(2)});
    for (int trial = 0; trial < 20; ++trial) {
      geometry::Vec8c zf = geometry::Vec8c::Zero();
      for (int a = 0; a < 4; ++a) zf += cd(N(rng), N(rng)) * f[a];
      const OrientedPlane p = OrientedPlane::from_span(zf.real(), -zf.imag());
      CHECK((geometry::twistor_project(p) - base).norm() < 1e-10);
    }
  }

  TEST_CASE("orientation reversal is the antipodal map") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 20; ++trial) {
      const OrientedPlane p = random_plane(rng);
      CHECK((geometry::twistor_project({p.e1, -p.e2}) + geometry::twistor_project(p)).norm() < 1e-10);
    }
  }

  TEST_CASE("twistor map is Spin(7) equivariant") {
    std::mt19937_64 rng(7);
    const Mat8 g = random_spin7(rng);
    const OrientedPlane p = random_plane(rng);
    const auto t = geometry::twistor_project(p);
    const auto tg = geometry::twistor_project({g * p.e1, g * p.e2});
    CHECK((tg - geometry::m_representation(g) * t).norm() < 1e-10);
  }

  TEST_CASE("Maurer-Cartan pullback") {
    std::mt19937_64 rng(8);
    const Mat8 g0 = random_spin7(rng);
    const auto c = geometry::mc_pullback([&](double, double) { return g0; }, 0.1, 0.2, 1e-4);
    CHECK(c.du.omega.cwiseAbs().maxCoeff() == 0);
    CHECK(c.dv.omega.cwiseAbs().maxCoeff() == 0);

    Eigen::Matrix<double, 21, 1> x, y;
    std::normal_distribution<double> N;
    for (auto& a : x) a = N(rng);
    for (auto& a : y) a = N(rng);
    const Mat8 A = spin7::spin7_matrix(x), B = spin7::spin7_matrix(y);
    const geometry::FrameField F = [&](double u, double v) {
      return Mat8(spin7::exp_group(A, u) * spin7::exp_group(B, v) * g0);
    };
    const double u = 0.3, v = -0.2;
    const auto s = geometry::mc_pullback(F, u, v, 1e-4);
    // omega(d_u) = F^{-1} A F and omega(d_v) = g0^T B g0 in closed form.
    const Mat8 Fu = F(u, v);
    CHECK((s.du.omega - Fu.transpose() * A * Fu).cwiseAbs().maxCoeff() < 1e-6);
    CHECK((s.dv.omega - g0.transpose() * B * g0).cwiseAbs().maxCoeff() < 1e-6);
    CHECK((s.du.omega + s.du.omega.transpose()).cwiseAbs().maxCoeff() < 1e-10);
  }

  TEST_CASE("complex coframe values") {
    std::mt19937_64 rng(9);
    std::normal_distribution<double> N;
    Eigen::Matrix<double, 21, 1> x;
    for (auto& a : x) a = N(rng);
    const auto c = geometry::coframe_values(spin7::spin7_matrix(x));
    const auto& w = c.omega;
    const cd i(0, 1);
    // zeta_3 = omega_31 + i omega_41, theta_1 = zeta_3 + i zeta_4.
    CHECK(std::abs(c.zeta[0] - (w(2, 0) + i * w(3, 0))) < 1e-14);
    CHECK(std::abs(c.theta[0] - (c.zeta[0] + i * c.zeta[1])) < 1e-14);
    CHECK((c.kappa + c.kappa.adjoint()).norm() < 1e-12);
  }

  TEST_CASE("Maurer-Cartan defect is second order") {
    const auto chart = wavy_chart();
    double prev = 0;
    for (double h : {0.02, 0.01}) {
      double worst = 0;
      for (const auto& [u, v] : chart.sample_points(2, 2))
        worst = std::max(worst, geometry::mc_defect(chart.frame_field({}, u, v), u, v, h));
      if (prev > 0) {
        CHECK(prev / worst > 3.5);
        CHECK(prev / worst < 4.5);
      }
      prev = worst;
    }
  }

  TEST_CASE("distribution relations") {
    const auto line = examples::fiber_chart(examples::rational_curve(1));
    for (const auto& [u, v] : line.sample_points(3, 3)) {
      const auto r = geometry::distribution_relations(line.coframe(u, v, {}, 1e-4));
      CHECK(r.v2 < 1e-8);
      CHECK(r.v1 > 0.1);
    }
    const auto wavy = wavy_chart();
    const auto r = geometry::distribution_relations(wavy.coframe(0.1, 0.1, {}, 1e-4));
    CHECK(r.v1 > 1e-2);
    CHECK(r.v2 > 1e-2);
  }
}
