#include "cayley/spin7/algebra.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <stdexcept>

namespace cayley::spin7 {

namespace {

struct RelTerm {
  int coeff, a, b;  // coeff * omega_ab
};

// Each relation reads sum coeff * omega_ab = 0.
const std::array<std::array<RelTerm, 4>, 7> kRelations = {{
    {{{1, 8, 7}, {1, 6, 5}, {-1, 4, 1}, {-1, 3, 2}}},
    {{{1, 8, 6}, {-1, 7, 5}, {-1, 3, 1}, {1, 4, 2}}},
    {{{1, 8, 5}, {1, 7, 6}, {-1, 4, 3}, {-1, 2, 1}}},
    {{{1, 8, 1}, {-1, 7, 4}, {-1, 6, 3}, {-1, 5, 2}}},
    {{{1, 8, 2}, {-1, 7, 3}, {1, 6, 4}, {1, 5, 1}}},
    {{{1, 8, 3}, {1, 7, 2}, {1, 6, 1}, {-1, 5, 4}}},
    {{{1, 8, 4}, {1, 7, 1}, {-1, 6, 2}, {1, 5, 3}}},
}};

std::vector<Rational> coordinates(const Endo& A) {
  std::vector<Rational> v;
  v.reserve(28);
  for (int i = 1; i <= 8; ++i)
    for (int j = i + 1; j <= 8; ++j) v.push_back(A.omega(i, j));
  return v;
}

Endo from_coordinates(const std::vector<Rational>& v) {
  Endo A;
  int k = 0;
  for (int i = 1; i <= 8; ++i)
    for (int j = i + 1; j <= 8; ++j) A.set_omega(i, j, v[k++]);
  return A;
}

bool satisfies_relations(const Endo& A) {
  const auto x = coordinates(A);
  for (const auto& row : relation_matrix()) {
    Rational s = 0;
    for (std::size_t c = 0; c < x.size(); ++c) s += row[c] * x[c];
    if (sgn(s) != 0) return false;
  }
  return true;
}

std::vector<Rational> form_vector(const AlternatingForm<Rational>& f) {
  std::vector<Rational> v;
  for (unsigned m = 0; m < 256; ++m)
    if (std::popcount(m) == 4) v.push_back(f.coefficient(exterior::mask_indices(static_cast<exterior::IndexMask>(m))));
  return v;
}

std::string label(const GeneratorLabel& l) { return "A_" + std::to_string(l.i) + std::to_string(l.j); }

}  // namespace

int so8_coordinate(int i, int j) {
  if (i == j || i < 1 || j < 1 || i > 8 || j > 8) throw std::out_of_range("so8_coordinate");
  if (i > j) std::swap(i, j);
  int k = 0;
  for (int a = 1; a < i; ++a) k += 8 - a;
  return k + (j - i - 1);
}

const exterior::RationalMatrix& relation_matrix() {
  static const exterior::RationalMatrix m = [] {
    exterior::RationalMatrix out(7, std::vector<Rational>(28, Rational(0)));
    for (int r = 0; r < 7; ++r)
      for (const auto& t : kRelations[r]) {
        // omega_ab = c(a,b) for a<b, -c(b,a) otherwise.
        const int sign = t.a < t.b ? 1 : -1;
        out[r][so8_coordinate(t.a, t.b)] += t.coeff * sign;
      }
    return out;
  }();
  return m;
}

const Spin7Basis& spin7_basis() {
  static const Spin7Basis b = [] {
    Spin7Basis out;
    std::vector<int> order;
    for (int k = 1; k <= 7; ++k) order.push_back(so8_coordinate(k, 8));
    for (int i = 1; i <= 7; ++i)
      for (int j = i + 1; j <= 7; ++j) order.push_back(so8_coordinate(i, j));
    auto null = exterior::nullspace(relation_matrix(), order);
    for (const auto& v : null) out.spin7.push_back(from_coordinates(v));
    for (int i = 1; i <= 7; ++i)
      for (int j = i + 1; j <= 7; ++j) out.labels.push_back({i, j});
    if (out.spin7.size() != 21) throw std::logic_error("spin(7) relations have the wrong rank");
    // Sanity: each basis element carries exactly its own free coordinate.
    for (std::size_t k = 0; k < 21; ++k)
      if (out.spin7[k].omega(out.labels[k].i, out.labels[k].j) != 1)
        throw std::logic_error("spin(7) basis is not aligned with the free generators");

    exterior::RationalMatrix gram;
    for (const auto& A : out.spin7) gram.push_back(coordinates(A));
    for (const auto& v : exterior::nullspace(gram)) out.complement.push_back(from_coordinates(v));
    return out;
  }();
  return b;
}

const std::array<std::array<Rational, 21>, 7>& omega8_substitution() {
  static const auto sub = [] {
    std::array<std::array<Rational, 21>, 7> out;
    const auto& b = spin7_basis();
    for (int k = 1; k <= 7; ++k)
      for (int l = 0; l < 21; ++l) out[k - 1][l] = b.spin7[l].omega(8, k);
    return out;
  }();
  return sub;
}

ClosureReport bracket_closure(const Spin7Basis& b) {
  ClosureReport r;
  r.spin7_dim = exterior::rank([&] {
    exterior::RationalMatrix m;
    for (const auto& A : b.spin7) m.push_back(coordinates(A));
    return m;
  }());
  exterior::RationalMatrix cm;
  for (const auto& A : b.complement) cm.push_back(coordinates(A));
  r.complement_dim = cm.empty() ? 0 : exterior::rank(cm);
  for (std::size_t x = 0; x < b.spin7.size() && r.closed; ++x)
    for (std::size_t y = x + 1; y < b.spin7.size(); ++y)
      if (!satisfies_relations(bracket(b.spin7[x], b.spin7[y]))) {
        r.closed = false;
        r.first_failure = "[" + label(b.labels[x]) + ", " + label(b.labels[y]) + "] leaves spin(7)";
        break;
      }
  for (std::size_t x = 0; x < b.spin7.size() && r.closed; ++x)
    for (std::size_t y = 0; y < b.complement.size(); ++y)
      if (sgn(pairing(b.spin7[x], b.complement[y])) != 0) {
        r.closed = false;
        r.first_failure = "complement element " + std::to_string(y + 1) + " not orthogonal to " + label(b.labels[x]);
        break;
      }
  return r;
}

InvarianceReport invariance_report(const CalibrationTables& t, const Spin7Basis& b) {
  InvarianceReport r;
  exterior::RationalMatrix psi_cols(70, std::vector<Rational>(7));
  for (int m = 0; m < 7; ++m) {
    auto v = form_vector(t.psi[m]);
    for (int i = 0; i < 70; ++i) psi_cols[i][m] = v[i];
  }

  for (std::size_t k = 0; k < b.spin7.size(); ++k) {
    const auto& A = b.spin7[k].matrix();
    auto dphi = exterior::lie_action(A, t.phi);
    if (!dphi.is_zero() && r.phi_invariant) {
      r.phi_invariant = false;
      r.first_violation = label(b.labels[k]) + " . Phi = " + dphi.str();
    }
    Rep7 rep{};
    for (int m = 0; m < 7; ++m) {
      auto dpsi = exterior::lie_action(A, t.psi[m]);
      auto x = exterior::solve(psi_cols, form_vector(dpsi));
      if (!x) {
        if (r.psi_equivariant)
          r.first_equivariance_failure =
              label(b.labels[k]) + " . psi_" + std::to_string(m + 1) + " is not in span(psi_1..psi_7)";
        r.psi_equivariant = false;
        continue;
      }
      for (int n = 0; n < 7; ++n) rep[n][m] = (*x)[n];
    }
    for (int n = 0; n < 7; ++n)
      for (int m = 0; m < 7; ++m)
        if (rep[n][m] != -rep[m][n]) r.reps_skew = false;
    r.psi_reps.push_back(rep);
  }

  exterior::RationalMatrix images;
  for (const auto& M : b.complement) {
    auto dphi = exterior::lie_action(M.matrix(), t.phi);
    if (dphi.is_zero()) r.complement_moves_phi = false;
    auto x = exterior::solve(psi_cols, form_vector(dphi));
    if (!x)
      r.complement_moves_phi = false;
    else
      images.push_back(*x);
  }
  r.complement_image_rank = images.empty() ? 0 : exterior::rank(images);
  if (r.complement_image_rank != 7) r.complement_moves_phi = false;
  return r;
}

const std::array<Mat8, 21>& spin7_float_basis() {
  static const auto out = [] {
    std::array<Mat8, 21> a;
    for (int k = 0; k < 21; ++k) a[k] = spin7_basis().spin7[k].to_eigen();
    return a;
  }();
  return out;
}

namespace {
double pairing_d(const Mat8& a, const Mat8& b) {
  double s = 0;
  for (int r = 0; r < 8; ++r)
    for (int c = r + 1; c < 8; ++c) s += a(r, c) * b(r, c);
  return s;
}
}  // namespace

const std::array<Mat8, 7>& complement_orthonormal() {
  static const auto out = [] {
    std::array<Mat8, 7> a;
    for (int k = 0; k < 7; ++k) {
      Mat8 v = spin7_basis().complement[k].to_eigen();
      for (int j = 0; j < k; ++j) v -= pairing_d(v, a[j]) * a[j];
      a[k] = v / std::sqrt(pairing_d(v, v));
    }
    return a;
  }();
  return out;
}

Mat8 spin7_matrix(const Eigen::Matrix<double, 21, 1>& x) {
  Mat8 out = Mat8::Zero();
  const auto& b = spin7_float_basis();
  for (int k = 0; k < 21; ++k) out += x[k] * b[k];
  return out;
}

Eigen::Matrix<double, 7, 1> project_complement(const Mat8& X) {
  Eigen::Matrix<double, 7, 1> c;
  const auto& m = complement_orthonormal();
  for (int k = 0; k < 7; ++k) c[k] = pairing_d(X, m[k]);
  return c;
}

Eigen::Matrix<double, 21, 1> project_spin7(const Mat8& X) {
  Mat8 Y = 0.5 * (X - X.transpose());
  const auto& m = complement_orthonormal();
  for (int k = 0; k < 7; ++k) Y -= pairing_d(Y, m[k]) * m[k];
  Eigen::Matrix<double, 21, 1> out;
  const auto& labels = spin7_basis().labels;
  for (int k = 0; k < 21; ++k) out[k] = Y(labels[k].i - 1, labels[k].j - 1);
  return out;
}

Mat8 exp_group(const Mat8& A, double t) {
  if ((A + A.transpose()).cwiseAbs().maxCoeff() > 1e-12 * (1.0 + A.cwiseAbs().maxCoeff()))
    throw std::invalid_argument("exp_group: generator is not skew-symmetric");
  Mat8 tA = t * A;
  return tA.exp();
}

double spin7_defect(const Mat8& g) {
  const auto& phi = float_tables().phi;
  double worst = 0;
  for (unsigned m = 0; m < 256; ++m) {
    if (std::popcount(m) != 4) continue;
    int idx[4];
    int k = 0;
    for (int i = 0; i < 8; ++i)
      if (m & (1u << i)) idx[k++] = i;
    const double val = evaluate4(phi, g.col(idx[0]), g.col(idx[1]), g.col(idx[2]), g.col(idx[3]));
    const auto it = phi.terms().find(static_cast<exterior::IndexMask>(m));
    const double ref = it == phi.terms().end() ? 0.0 : it->second;
    worst = std::max(worst, std::abs(val - ref));
  }
  return worst;
}

}  // namespace cayley::spin7
