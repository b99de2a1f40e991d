#include "cayley/geometry/frame.hpp"

#include <random>
#include <stdexcept>

#include "cayley/spin7/algebra.hpp"

namespace cayley::geometry {

namespace {

constexpr double kOrthoTol = 1e-10;

// Column of the reference basis with the largest component orthogonal to
// `used` (or the forced one), normalized.
Vec8 pick(const Mat8& ref, std::initializer_list<const Vec8*> used, int& choice) {
  auto residual = [&](int k) {
    Vec8 v = ref.col(k);
    for (const Vec8* b : used) v -= b->dot(v) * (*b);
    // Second pass against cancellation.
    for (const Vec8* b : used) v -= b->dot(v) * (*b);
    return v;
  };
  if (choice < 0) {
    double best = -1;
    for (int k = 0; k < 8; ++k) {
      const double n = residual(k).norm();
      if (n > best + 1e-12) {
        best = n;
        choice = k;
      }
    }
  }
  Vec8 v = residual(choice);
  const double n = v.norm();
  if (n < 1e-6) throw std::runtime_error("complete_frame: forced reference vector is degenerate here");
  return v / n;
}

AdaptedFrame finish(const OrientedPlane& p, const Vec8& e3, const Mat8& ref, FrameChoice choice,
                    Validation validation) {
  const Vec8 e4 = spin7::triple_cross(p.e1, p.e2, e3);
  const Vec8 e5 = pick(ref, {&p.e1, &p.e2, &e3, &e4}, choice.e5_ref);
  const Vec8 e8 = -spin7::triple_cross(p.e1, p.e2, e5);
  const Vec8 e7 = spin7::triple_cross(p.e1, e3, e5);
  const Vec8 e6 = spin7::triple_cross(p.e1, p.e2, e7);
  AdaptedFrame f;
  f.g << p.e1, p.e2, e3, e4, e5, e6, e7, e8;
  f.choice = choice;
  if (validation != Validation::None) {
    const double ortho = (f.g.transpose() * f.g - Mat8::Identity()).cwiseAbs().maxCoeff();
    if (ortho > kOrthoTol) throw std::runtime_error("complete_frame: frame is not orthonormal");
    if (validation == Validation::Full && spin7::spin7_defect(f.g) > kOrthoTol)
      throw std::runtime_error("complete_frame: frame does not preserve Phi");
  }
  return f;
}

void check_plane(const OrientedPlane& p) {
  if (std::abs(p.e1.norm() - 1) > kOrthoTol || std::abs(p.e2.norm() - 1) > kOrthoTol ||
      std::abs(p.e1.dot(p.e2)) > kOrthoTol)
    throw std::invalid_argument("complete_frame: plane basis is not orthonormal");
}

}  // namespace

OrientedPlane OrientedPlane::from_span(const Vec8& a, const Vec8& b) {
  const double na = a.norm();
  if (na < 1e-300) throw std::invalid_argument("OrientedPlane: degenerate spanning vectors");
  Vec8 e1 = a / na;
  Vec8 e2 = b - e1.dot(b) * e1;
  const double nb = e2.norm();
  if (nb < 1e-12 * std::max(1.0, b.norm())) throw std::invalid_argument("OrientedPlane: spanning vectors are parallel");
  return {e1, e2 / nb};
}

FrameGauge FrameGauge::random(std::uint64_t seed) {
  if (seed == 0) return identity();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Mat8 a;
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) a(r, c) = normal(rng);
  Eigen::HouseholderQR<Mat8> qr(a);
  return {Mat8(qr.householderQ())};
}

AdaptedFrame complete_frame(const OrientedPlane& plane, const FrameGauge& gauge,
                            const std::optional<FrameChoice>& forced, Validation validation) {
  check_plane(plane);
  FrameChoice choice = forced.value_or(FrameChoice{});
  const Vec8 e3 = pick(gauge.reference, {&plane.e1, &plane.e2}, choice.e3_ref);
  return finish(plane, e3, gauge.reference, choice, validation);
}

AdaptedFrame complete_frame_with_e3(const OrientedPlane& plane, const Vec8& e3, const FrameGauge& gauge,
                                    const std::optional<FrameChoice>& forced, Validation validation) {
  check_plane(plane);
  if (std::abs(e3.norm() - 1) > 1e-8 || std::abs(e3.dot(plane.e1)) > 1e-8 || std::abs(e3.dot(plane.e2)) > 1e-8)
    throw std::invalid_argument("complete_frame_with_e3: e3 must be a unit vector orthogonal to the plane");
  FrameChoice choice = forced.value_or(FrameChoice{});
  choice.e3_ref = -1;
  return finish(plane, e3, gauge.reference, choice, validation);
}

const Mat8& J0() {
  static const Mat8 j = [] {
    Mat8 m = Mat8::Zero();
    const int pairs[4][3] = {{0, 1, 1}, {2, 3, 1}, {5, 6, -1}, {4, 7, -1}};
    for (const auto& p : pairs) {
      m(p[1], p[0]) = p[2];
      m(p[0], p[1]) = -p[2];
    }
    return m;
  }();
  return j;
}

Mat8 complex_structure(const Mat8& g) { return g * J0() * g.transpose(); }

std::array<Vec8c, 4> f_vectors(const Mat8& g) {
  const std::complex<double> i(0, 1);
  return {Vec8c(g.col(0).cast<std::complex<double>>() - i * g.col(1)),
          Vec8c(g.col(2).cast<std::complex<double>>() - i * g.col(3)),
          Vec8c(g.col(5).cast<std::complex<double>>() + i * g.col(6)),
          Vec8c(g.col(4).cast<std::complex<double>>() + i * g.col(7))};
}

double frame_defect(const Mat8& g) {
  const double ortho = (g.transpose() * g - Mat8::Identity()).cwiseAbs().maxCoeff();
  return std::max(ortho, spin7::spin7_defect(g));
}

}  // namespace cayley::geometry
