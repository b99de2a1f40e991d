#include <doctest.h>

#include <random>

#include "cayley/spin7/algebra.hpp"
#include "cayley/spin7/comass.hpp"
#include "cayley/spin7/tables.hpp"

using namespace cayley;
using spin7::Mat8;
using spin7::Vec8;
using exterior::Rational;

namespace {

Vec8 e(int i) { return Mat8::Identity().col(i - 1); }

}  // namespace

TEST_SUITE("spin7") {
  TEST_CASE("table entries") {
    const auto t = spin7::build_tables();
    CHECK(t.phi.size() == 14);
    CHECK(t.phi.coefficient({5, 6, 7, 8}) == 1);
    CHECK(t.phi.coefficient({3, 4, 6, 7}) == -1);
    CHECK(t.phi.coefficient({1, 2, 5, 8}) == -1);
    CHECK(spin7::psi_listing(7).size() == 8);
    for (int m = 1; m <= 7; ++m) CHECK(t.psi[m - 1].size() == 8);
    // The only difference from the verbatim listing is the first psi_1 entry.
    const auto raw = spin7::transcribed_tables();
    CHECK(raw.phi == t.phi);
    for (int m = 2; m <= 7; ++m) CHECK(raw.psi[m - 1] == t.psi[m - 1]);
    CHECK(raw.psi[0].coefficient({1, 3, 5, 7}) != 0);
    CHECK(t.psi[0].coefficient({1, 3, 4, 5}) != 0);
  }

  TEST_CASE("quad_cross on coordinate quadruples") {
    const auto t = spin7::build_tables();
    const Vec8 q = spin7::quad_cross(e(1), e(2), e(3), e(4));
    CHECK(q[7] == 1);
    CHECK(q.head<7>().cwiseAbs().maxCoeff() == 0);
    CHECK(spin7::quad_cross(e(1), e(1), e(3), e(4)).cwiseAbs().maxCoeff() == 0);
    const Vec8 r = spin7::quad_cross(e(5), e(6), e(7), e(8));
    for (int m = 1; m <= 7; ++m) CHECK(r[m - 1] == t.psi[m - 1].coefficient({5, 6, 7, 8}).get_d());
    CHECK(r[7] == 1);
  }

  TEST_CASE("Phi^2 + |psi|^2 = 1 on unit simple 4-vectors") {
    std::mt19937_64 rng(2);
    std::normal_distribution<double> N;
    for (int trial = 0; trial < 50; ++trial) {
      Eigen::Matrix<double, 8, 4> M;
      for (auto& x : M.reshaped()) x = N(rng);
      const Eigen::Matrix<double, 8, 4> Q = Eigen::HouseholderQR<Eigen::Matrix<double, 8, 4>>(M).householderQ() *
                                            Eigen::Matrix<double, 8, 4>::Identity();
      CHECK(spin7::quad_cross(Q.col(0), Q.col(1), Q.col(2), Q.col(3)).squaredNorm() == doctest::Approx(1).epsilon(1e-12));
    }
  }

  TEST_CASE("triple cross product") {
    CHECK((spin7::triple_cross(e(1), e(2), e(3)) - e(4)).norm() < 1e-15);
    const auto phi = spin7::float_tables().phi;
    const double sign = spin7::evaluate4(phi, e(1), e(2), e(5), e(8));
    CHECK(std::abs(sign) == 1);
    CHECK((spin7::triple_cross(e(1), e(2), e(5)) - sign * e(8)).norm() < 1e-15);
    CHECK(spin7::triple_cross(e(3), e(3), e(6)).norm() == 0);
    std::mt19937_64 rng(4);
    std::normal_distribution<double> N;
    Vec8 x, y, z;
    for (int k = 0; k < 8; ++k) x[k] = N(rng), y[k] = N(rng), z[k] = N(rng);
    const Vec8 T = spin7::triple_cross(x, y, z);
    CHECK(std::abs(T.dot(x)) < 1e-12);
    CHECK(std::abs(T.dot(z)) < 1e-12);
  }

  TEST_CASE("spin(7) from the relations") {
    const auto& b = spin7::spin7_basis();
    CHECK(exterior::rank(spin7::relation_matrix()) == 7);
    CHECK(b.spin7.size() == 21);
    CHECK(b.complement.size() == 7);
    const auto closure = spin7::bracket_closure(b);
    CHECK(closure.closed);
    CHECK(closure.spin7_dim == 21);
    CHECK(closure.complement_dim == 7);
    for (const auto& A : b.spin7)
      for (const auto& M : b.complement) CHECK(pairing(A, M) == 0);
  }

  TEST_CASE("invariance of Phi and equivariance of psi") {
    const auto rep = spin7::invariance_report(spin7::build_tables(), spin7::spin7_basis());
    CHECK(rep.phi_invariant);
    CHECK(rep.psi_equivariant);
    CHECK(rep.reps_skew);
    CHECK(rep.complement_moves_phi);
    CHECK(rep.complement_image_rank == 7);
    REQUIRE(rep.psi_reps.size() == 21);
    for (const auto& R : rep.psi_reps)
      for (int n = 0; n < 7; ++n)
        for (int m = 0; m < 7; ++m) CHECK(R[n][m] == -R[m][n]);
  }

  TEST_CASE("verbatim psi_1 listing breaks equivariance") {
    const auto rep = spin7::invariance_report(spin7::transcribed_tables(), spin7::spin7_basis());
    CHECK(rep.phi_invariant);
    CHECK_FALSE(rep.psi_equivariant);
    CHECK(rep.first_equivariance_failure.find("psi_1") != std::string::npos);
  }

  TEST_CASE("group elements") {
    CHECK((spin7::exp_group(Mat8::Zero()) - Mat8::Identity()).norm() == 0);
    std::mt19937_64 rng(8);
    std::normal_distribution<double> N;
    Eigen::Matrix<double, 21, 1> x;
    for (auto& c : x) c = N(rng);
    const Mat8 A = spin7::spin7_matrix(x);
    CHECK((spin7::project_spin7(A) - x).norm() < 1e-12);
    CHECK(spin7::project_complement(A).norm() < 1e-12);
    const Mat8 g = spin7::exp_group(A, 0.7);
    CHECK(spin7::spin7_defect(g) < 1e-10);
    CHECK((g.transpose() * g - Mat8::Identity()).cwiseAbs().maxCoeff() < 1e-12);
    // A complement direction moves Phi.
    CHECK(spin7::spin7_defect(spin7::exp_group(spin7::complement_orthonormal()[0], 0.3)) > 1e-2);
  }

  TEST_CASE("comass") {
    spin7::ComassOptions opt;
    opt.starts = 64;
    const auto r = spin7::comass_estimate(spin7::float_tables().phi, opt);
    CHECK(r.value >= 1 - 1e-6);
    CHECK(r.value <= 1 + 1e-9);
    CHECK(r.start_values.size() == 64);
    const Eigen::MatrixXd E4 = Eigen::MatrixXd::Identity(8, 4);
    CHECK(spin7::evaluate_frame(spin7::float_tables().phi, E4) == 1);

    using F = exterior::AlternatingForm<double>;
    const F vol = F::monomial({1, 2, 3, 4}, 1.0);
    CHECK(spin7::evaluate_frame(vol, E4) == 1);
    CHECK(spin7::comass_estimate(vol, opt).value == doctest::Approx(1).epsilon(1e-9));

    // dx^1234 + dx^5678: brute force over 4-planes rotating e1..e4 into e5..e8
    // pairwise by angles s, t gives cos^2 s cos^2 t + sin^2 s sin^2 t <= 1.
    const F two = vol + F::monomial({5, 6, 7, 8}, 1.0);
    double best = 0;
    for (int i = 0; i <= 40; ++i)
      for (int j = 0; j <= 40; ++j) {
        const double s = i * 0.0785398, t = j * 0.0785398;
        Eigen::MatrixXd V = Eigen::MatrixXd::Zero(8, 4);
        V(0, 0) = V(1, 1) = std::cos(s);
        V(4, 0) = V(5, 1) = std::sin(s);
        V(2, 2) = V(3, 3) = std::cos(t);
        V(6, 2) = V(7, 3) = std::sin(t);
        const double val = spin7::evaluate_frame(two, V);
        const double closed = std::pow(std::cos(s) * std::cos(t), 2) + std::pow(std::sin(s) * std::sin(t), 2);
        CHECK(val == doctest::Approx(closed).epsilon(1e-12));
        best = std::max(best, val);
      }
    CHECK(best == doctest::Approx(1).epsilon(1e-12));
    CHECK(spin7::comass_estimate(two, opt).value == doctest::Approx(1).epsilon(1e-6));
  }
}
