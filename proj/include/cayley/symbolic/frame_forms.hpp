#pragma once

#include <array>
#include <map>
#include <string>

#include "cayley/symbolic/expr.hpp"

namespace cayley::symbolic {

using Mat3 = std::array<std::array<Expr, 3>, 3>;

// Deliberate corruption used to show the suite localizes failures.
struct Mutation {
  int flip_tau = 0;  // 1..6: negate tau_k; 0: none
};

// Named forms on Spin(7). Arrays are indexed by the mathematical label
// (zeta[3..8], theta[1..6], tau[1..6], xi[3..8]); unused slots stay zero.
struct FrameForms {
  std::array<Expr, 9> zeta;
  std::array<Expr, 7> theta;
  std::array<Expr, 7> theta_bar;
  std::array<Expr, 9> xi;  // xi_j = omega_j1 + i omega_j2
  Mat3 kappa;
  Expr trace;      // tr kappa
  Mat3 Psi;        // kappa - tr kappa
  Mat3 Psi_tilde;  // kappa + tr kappa
  std::array<Expr, 7> tau;
  Expr omega1;  // (i/2) sum_od theta ^ theta_bar
  Expr omega2;  // (i/2) sum_ev theta ^ theta_bar
  Mat3 Omega;   // curvature of H, up to the factor 1/4
};

const FrameForms& frame_forms();
FrameForms define_frames(const Mutation& mutation);

// Flat name -> form map ("theta1", "kappa12", "omega1", "w34", ...).
std::map<std::string, Expr> named_environment(const FrameForms& f);

Mat3 bracket(const std::array<Expr, 3>& v);

}  // namespace cayley::symbolic
