#pragma once

#include "cayley/geometry/frame.hpp"

namespace cayley::geometry {

using Vec7 = Eigen::Matrix<double, 7, 1>;
using Mat7 = Eigen::Matrix<double, 7, 7>;

// Unit vector in m ~ R^7 (orthonormal m basis) of the complex structure g J0 g^T.
Vec7 twistor_of_frame(const Mat8& g);
Vec7 twistor_project(const OrientedPlane& plane, const FrameGauge& gauge = {});

// Action of a Spin(7) element on m coordinates: X -> g X g^T.
Mat7 m_representation(const Mat8& g);

}  // namespace cayley::geometry
