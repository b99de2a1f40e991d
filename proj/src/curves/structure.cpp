#include "cayley/curves/structure.hpp"

#include <stdexcept>

namespace cayley::curves {

InducedStructure InducedStructure::from(const geometry::CoframeValues& du, const geometry::CoframeValues& dv) {
  InducedStructure s;
  const double nu2 = du.theta.squaredNorm();
  if (nu2 < 1e-300) throw std::runtime_error("InducedStructure: degenerate tangent vector");
  // Least-squares tau with theta(d_v) ~ tau theta(d_u).
  s.tau = du.theta.dot(dv.theta) / nu2;
  s.metric(0, 0) = nu2;
  s.metric(1, 1) = dv.theta.squaredNorm();
  s.metric(0, 1) = s.metric(1, 0) = std::real(du.theta.dot(dv.theta));
  if (std::abs(s.tau.imag()) < 1e-12 * (1 + std::abs(s.tau)))
    throw std::runtime_error("InducedStructure: tangent plane is degenerate");
  return s;
}

cd InducedStructure::zero_one_coefficient(cd bu, cd bv) const {
  return (bv - tau * bu) / (std::conj(tau) - tau);
}

double InducedStructure::norm(cd bu, cd bv) const {
  const Eigen::Matrix2d inv = metric.inverse();
  const Eigen::Vector2cd b(bu, bv);
  return std::sqrt(std::max(0.0, std::real(b.dot(inv.cast<cd>() * b))));
}

double InducedStructure::zero_one_norm(cd bu, cd bv) const {
  const cd mu = zero_one_coefficient(bu, bv);
  return std::abs(mu) * norm(1.0, std::conj(tau));
}

}  // namespace cayley::curves
