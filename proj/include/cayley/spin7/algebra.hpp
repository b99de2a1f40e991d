#pragma once

#include <array>
#include <string>
#include <vector>

#include "cayley/exterior/rational_linalg.hpp"
#include "cayley/exterior/skew_endo.hpp"
#include "cayley/spin7/tables.hpp"

namespace cayley::spin7 {

using Endo = exterior::SkewEndo<Rational>;
using Rep7 = std::array<std::array<Rational, 7>, 7>;

struct GeneratorLabel {
  int i;
  int j;
};

// so(8) coordinates are omega_ij for i<j, lexicographic: (1,2),(1,3),...,(7,8).
int so8_coordinate(int i, int j);

struct Spin7Basis {
  // Element k has omega(labels[k]) = 1, the other free omega_ij (i<j<=7)
  // zero, and omega_8k fixed by the seven relations.
  std::vector<Endo> spin7;
  std::vector<GeneratorLabel> labels;
  // Pairing-orthogonal complement m, exact but not normalized.
  std::vector<Endo> complement;
};

// 7 x 28 matrix of the linear relations cutting spin(7) out of so(8).
const exterior::RationalMatrix& relation_matrix();
const Spin7Basis& spin7_basis();

// omega_8k (k = 1..7) as a combination of the 21 free generators.
const std::array<std::array<Rational, 21>, 7>& omega8_substitution();

struct ClosureReport {
  bool closed = true;
  int spin7_dim = 0;
  int complement_dim = 0;
  std::string first_failure;
};
ClosureReport bracket_closure(const Spin7Basis& b);

struct InvarianceReport {
  bool phi_invariant = true;
  std::string first_violation;
  bool psi_equivariant = true;
  bool reps_skew = true;
  std::string first_equivariance_failure;
  std::vector<Rep7> psi_reps;  // psi_reps[k][n][m]: lie_action(A_k, psi_m) = sum_n R[n][m] psi_n
  bool complement_moves_phi = true;
  int complement_image_rank = 0;
};
InvarianceReport invariance_report(const CalibrationTables& t, const Spin7Basis& b);

// Float views.
const std::array<Mat8, 21>& spin7_float_basis();
// Orthonormal basis of m for the pairing sum_{i<j} A_ij B_ij.
const std::array<Mat8, 7>& complement_orthonormal();
Mat8 spin7_matrix(const Eigen::Matrix<double, 21, 1>& x);
Eigen::Matrix<double, 7, 1> project_complement(const Mat8& X);
Eigen::Matrix<double, 21, 1> project_spin7(const Mat8& X);

Mat8 exp_group(const Mat8& A, double t = 1.0);

// Sup-norm of the coefficients of g^* Phi - Phi over all 70 index sets.
double spin7_defect(const Mat8& g);

}  // namespace cayley::spin7
