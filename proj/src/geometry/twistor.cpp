#include "cayley/geometry/twistor.hpp"

#include <stdexcept>

#include "cayley/spin7/algebra.hpp"

namespace cayley::geometry {

Vec7 twistor_of_frame(const Mat8& g) {
  const Vec7 c = spin7::project_complement(complex_structure(g));
  const double n = c.norm();
  if (n < 1e-8) throw std::runtime_error("twistor_of_frame: complex structure has no m component");
  return c / n;
}

Vec7 twistor_project(const OrientedPlane& plane, const FrameGauge& gauge) {
  return twistor_of_frame(complete_frame(plane, gauge, std::nullopt, Validation::Orthonormality).g);
}

Mat7 m_representation(const Mat8& g) {
  const auto& m = spin7::complement_orthonormal();
  Mat7 R;
  for (int l = 0; l < 7; ++l) R.col(l) = spin7::project_complement(g * m[l] * g.transpose());
  return R;
}

}  // namespace cayley::geometry
