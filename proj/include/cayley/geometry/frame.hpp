#pragma once

#include <complex>
#include <cstdint>
#include <optional>

#include "cayley/spin7/tables.hpp"

namespace cayley::geometry {

using spin7::Mat8;
using spin7::Vec8;
using Vec8c = Eigen::Matrix<std::complex<double>, 8, 1>;

struct OrientedPlane {
  Vec8 e1;
  Vec8 e2;

  // Oriented orthonormal basis of span(a, b), orientation a ^ b.
  static OrientedPlane from_span(const Vec8& a, const Vec8& b);
  // Unit vector in the plane at angle t from e1.
  Vec8 direction(double t) const { return std::cos(t) * e1 + std::sin(t) * e2; }
};

// Reference basis the completion draws e3 and e5 from. Different gauges
// give frames of the same plane that differ by an element of U(3).
struct FrameGauge {
  Mat8 reference = Mat8::Identity();

  static FrameGauge identity() { return {}; }
  static FrameGauge random(std::uint64_t seed);
};

// Which reference columns seeded e3 and e5. Reusing the choice made at a
// stencil centre keeps frames smooth across the stencil.
struct FrameChoice {
  int e3_ref = -1;
  int e5_ref = -1;
};

enum class Validation { Full, Orthonormality, None };

struct AdaptedFrame {
  Mat8 g;  // columns e1..e8
  FrameChoice choice;
};

// Spin(7) frame whose first two columns are the given plane:
// e3 from the gauge, e4 = T(e1,e2,e3), e5 from the gauge, e8 = -T(e1,e2,e5),
// e7 = T(e1,e3,e5), e6 = T(e1,e2,e7).
AdaptedFrame complete_frame(const OrientedPlane& plane, const FrameGauge& gauge = {},
                            const std::optional<FrameChoice>& forced = std::nullopt,
                            Validation validation = Validation::Full);

// Same, with e3 prescribed (unit, orthogonal to the plane).
AdaptedFrame complete_frame_with_e3(const OrientedPlane& plane, const Vec8& e3, const FrameGauge& gauge = {},
                                    const std::optional<FrameChoice>& forced = std::nullopt,
                                    Validation validation = Validation::Full);

// J0 e1 = e2, J0 e3 = e4, J0 e6 = -e7, J0 e5 = -e8.
const Mat8& J0();
Mat8 complex_structure(const Mat8& g);

// f0 = e1 - i e2, f1 = e3 - i e4, f2 = e6 + i e7, f3 = e5 + i e8 of the frame g.
std::array<Vec8c, 4> f_vectors(const Mat8& g);

// Orthonormality plus g^* Phi = Phi, sup norm.
double frame_defect(const Mat8& g);

}  // namespace cayley::geometry
