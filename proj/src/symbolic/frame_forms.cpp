#include "cayley/symbolic/frame_forms.hpp"

namespace cayley::symbolic {

namespace {

const ComplexRational I = exterior::kImag;
const ComplexRational HALF{Rational(1, 2)};
const ComplexRational HALF_I{Rational(0), Rational(1, 2)};
const ComplexRational QUARTER{Rational(1, 4)};

Expr w(int i, int j) { return omega(i, j); }

Expr tt(const FrameForms& f, int a, int b) { return f.theta[a] ^ f.theta_bar[b]; }

}  // namespace

Mat3 bracket(const std::array<Expr, 3>& v) {
  Mat3 m;
  m[0][1] = v[2];
  m[0][2] = -v[1];
  m[1][0] = -v[2];
  m[1][2] = v[0];
  m[2][0] = v[1];
  m[2][1] = -v[0];
  return m;
}

FrameForms define_frames(const Mutation& mutation) {
  FrameForms f;
  f.zeta[3] = w(3, 1) + I * w(4, 1);
  f.zeta[4] = w(3, 2) + I * w(4, 2);
  f.zeta[6] = w(6, 1) - I * w(7, 1);
  f.zeta[7] = w(6, 2) - I * w(7, 2);
  f.zeta[5] = w(5, 1) - I * w(8, 1);
  f.zeta[8] = w(5, 2) - I * w(8, 2);

  f.theta[1] = f.zeta[3] + I * f.zeta[4];
  f.theta[2] = f.zeta[3] - I * f.zeta[4];
  f.theta[3] = f.zeta[6] + I * f.zeta[7];
  f.theta[4] = f.zeta[6] - I * f.zeta[7];
  f.theta[5] = f.zeta[5] + I * f.zeta[8];
  f.theta[6] = f.zeta[5] - I * f.zeta[8];
  for (int a = 1; a <= 6; ++a) f.theta_bar[a] = f.theta[a].conj();
  for (int j = 3; j <= 8; ++j) f.xi[j] = w(j, 1) + I * w(j, 2);

  const auto& tb = f.theta_bar;
  const auto& th = f.theta;
  auto& k = f.kappa;
  k[0][0] = I * w(4, 3);
  k[0][1] = -(w(6, 3) + I * w(6, 4)) - HALF_I * tb[5];
  k[0][2] = -(w(5, 3) + I * w(5, 4)) + HALF_I * tb[3];
  k[1][0] = (w(6, 3) - I * w(6, 4)) - HALF_I * th[5];
  k[1][1] = -(I * w(7, 6));
  k[1][2] = (w(6, 5) - I * w(7, 5)) - HALF_I * tb[1];
  k[2][0] = (w(5, 3) - I * w(5, 4)) + HALF_I * th[3];
  k[2][1] = -(w(6, 5) + I * w(7, 5)) - HALF_I * th[1];
  k[2][2] = I * (w(7, 6) - w(4, 3) - w(2, 1));
  f.trace = k[0][0] + k[1][1] + k[2][2];
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      f.Psi[a][b] = k[a][b];
      f.Psi_tilde[a][b] = k[a][b];
    }
  for (int a = 0; a < 3; ++a) {
    f.Psi[a][a] -= f.trace;
    f.Psi_tilde[a][a] += f.trace;
  }

  f.tau[1] = HALF_I * ((tb[4] ^ tb[5]) + (tb[3] ^ tb[6]));
  f.tau[2] = I * (tb[3] ^ tb[5]);
  f.tau[3] = HALF_I * ((tb[6] ^ tb[1]) + (tb[5] ^ tb[2]));
  f.tau[4] = I * (tb[5] ^ tb[1]);
  f.tau[5] = HALF_I * ((tb[2] ^ tb[3]) + (tb[1] ^ tb[4]));
  f.tau[6] = I * (tb[1] ^ tb[3]);
  if (mutation.flip_tau >= 1 && mutation.flip_tau <= 6) f.tau[mutation.flip_tau] = -f.tau[mutation.flip_tau];

  f.omega1 = HALF_I * (tt(f, 1, 1) + tt(f, 3, 3) + tt(f, 5, 5));
  f.omega2 = HALF_I * (tt(f, 2, 2) + tt(f, 4, 4) + tt(f, 6, 6));

  auto& Om = f.Omega;
  Om[0][0] = tt(f, 1, 1) - tt(f, 3, 3) - tt(f, 5, 5) + tt(f, 2, 2);
  Om[1][1] = -tt(f, 1, 1) + tt(f, 3, 3) - tt(f, 5, 5) + tt(f, 4, 4);
  Om[2][2] = -tt(f, 1, 1) - tt(f, 3, 3) + tt(f, 5, 5) + tt(f, 6, 6);
  Om[1][0] = ComplexRational(2) * tt(f, 3, 1) + tt(f, 4, 2);
  Om[2][0] = ComplexRational(2) * tt(f, 5, 1) + tt(f, 6, 2);
  Om[2][1] = ComplexRational(2) * tt(f, 5, 3) + tt(f, 6, 4);
  Om[0][1] = -Om[1][0].conj();
  Om[0][2] = -Om[2][0].conj();
  Om[1][2] = -Om[2][1].conj();
  return f;
}

const FrameForms& frame_forms() {
  static const FrameForms f = define_frames({});
  return f;
}

std::map<std::string, Expr> named_environment(const FrameForms& f) {
  std::map<std::string, Expr> env;
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j)
      if (i != j) env["w" + std::to_string(i) + std::to_string(j)] = omega(i, j);
  for (int j = 3; j <= 8; ++j) {
    env["zeta" + std::to_string(j)] = f.zeta[j];
    env["xi" + std::to_string(j)] = f.xi[j];
  }
  for (int a = 1; a <= 6; ++a) {
    env["theta" + std::to_string(a)] = f.theta[a];
    env["thetabar" + std::to_string(a)] = f.theta_bar[a];
    env["tau" + std::to_string(a)] = f.tau[a];
  }
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const std::string ab = std::to_string(a + 1) + std::to_string(b + 1);
      env["kappa" + ab] = f.kappa[a][b];
      env["Psi" + ab] = f.Psi[a][b];
      env["PsiTilde" + ab] = f.Psi_tilde[a][b];
      env["Omega" + ab] = f.Omega[a][b];
    }
  env["trkappa"] = f.trace;
  env["omega1"] = f.omega1;
  env["omega2"] = f.omega2;
  return env;
}

}  // namespace cayley::symbolic
