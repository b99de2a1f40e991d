#pragma once

#include <complex>

#include "cayley/geometry/coframe.hpp"

namespace cayley::curves {

using cd = std::complex<double>;

// Conformal structure induced on a pseudoholomorphic chart:
// theta(d_v) = tau theta(d_u), so du + tau dv spans the (1,0) covectors.
struct InducedStructure {
  cd tau;
  Eigen::Matrix2d metric;  // Re sum_a theta_a(d_i) conj theta_a(d_j)

  static InducedStructure from(const geometry::CoframeValues& du, const geometry::CoframeValues& dv);

  // beta = lambda (du + tau dv) + mu (du + conj(tau) dv); returns mu.
  cd zero_one_coefficient(cd beta_u, cd beta_v) const;
  // Pointwise norm of a covector (beta_u, beta_v) in the induced metric.
  double norm(cd beta_u, cd beta_v) const;
  double zero_one_norm(cd beta_u, cd beta_v) const;
};

}  // namespace cayley::curves
