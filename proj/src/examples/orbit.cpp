#include "cayley/examples/orbit.hpp"

#include <limits>

#include "cayley/curves/pseudoholo.hpp"
#include "cayley/spin7/algebra.hpp"
#include "cayley/util/parallel.hpp"

namespace cayley::examples {

namespace {

// Orthonormal basis (in spin(7) coordinates) of the centralizer of a regular element.
const std::array<Mat8, 3>& cartan() {
  static const std::array<Mat8, 3> t = [] {
    Eigen::Matrix<double, 21, 1> x;
    for (int k = 0; k < 21; ++k) x[k] = (k + 1) / 7.0;
    const Mat8 X = spin7::spin7_matrix(x);
    const auto& b = spin7::spin7_float_basis();
    Eigen::Matrix<double, 64, 21> M;
    for (int k = 0; k < 21; ++k) {
      const Mat8 c = X * b[k] - b[k] * X;
      M.col(k) = Eigen::Map<const Eigen::Matrix<double, 64, 1>>(c.data());
    }
    Eigen::JacobiSVD<Eigen::Matrix<double, 64, 21>> svd(M, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    if (s[17] < 1e-8 * s[0] || s[18] > 1e-10 * s[0])
      throw std::logic_error("cartan: centralizer of the regular element is not 3-dimensional");
    std::array<Mat8, 3> out;
    for (int c = 0; c < 3; ++c) out[c] = spin7::spin7_matrix(svd.matrixV().col(18 + c));
    return out;
  }();
  return t;
}

Mat8 frame_of(const OrientedPlane& p) {
  return geometry::complete_frame(p, {}, std::nullopt, geometry::Validation::Orthonormality).g;
}

}  // namespace

CurveChart orbit_chart(const OrbitSpec& s, const std::string& label) {
  const Mat8 g0 = frame_of(s.base);
  auto field = [A = s.A, B = s.B, g0](double u, double v) {
    const Mat8 g = spin7::exp_group(A, u) * spin7::exp_group(B, v) * g0;
    return OrientedPlane{g.col(0), g.col(1)};
  };
  return CurveChart(field, s.domain, label);
}

std::pair<Mat8, Mat8> orbit_generators(const OrbitParams& p) {
  const auto& t = cartan();
  const Mat8 h = spin7::exp_group(spin7::spin7_matrix(p.tail<21>()));
  Mat8 A = Mat8::Zero(), B = Mat8::Zero();
  for (int c = 0; c < 3; ++c) {
    A += p[c] * t[c];
    B += p[3 + c] * t[c];
  }
  return {h.transpose() * A * h, h.transpose() * B * h};
}

double orbit_objective(const OrbitParams& p) {
  const auto [A, B] = orbit_generators(p);
  bool degenerate = false;
  const double m = curves::pseudoholo_measure(geometry::coframe_values(A).zeta, geometry::coframe_values(B).zeta,
                                              degenerate);
  return degenerate ? 1e9 : m * m;
}

OrbitSearchResult search_orbit(const OrbitSearchConfig& cfg) {
  OrbitSearchResult res;
  res.starts = util::parallel_map(static_cast<std::size_t>(cfg.n_starts), [&](std::size_t s) {
    auto rng = util::substream(cfg.seed, s);
    std::normal_distribution<double> normal;
    OrbitParams p;
    for (int k = 0; k < 27; ++k) p[k] = normal(rng);
    if (cfg.start) p = *cfg.start + cfg.perturbation * p;
    // Compass search along +-coordinate directions; halve the step after a sweep without progress.
    OrbitStart st;
    double f = orbit_objective(p);
    st.evaluations = 1;
    st.history.push_back(std::sqrt(f));
    double step = cfg.initial_step;
    const double target = cfg.tol * cfg.tol;
    while (step > 1e-12 && st.evaluations < cfg.max_iters && f >= target) {
      bool improved = false;
      for (int k = 0; k < 27; ++k)
        for (double sgn : {1.0, -1.0}) {
          OrbitParams q = p;
          q[k] += sgn * step;
          const double fq = orbit_objective(q);
          ++st.evaluations;
          if (fq < f) {
            p = q;
            f = fq;
            improved = true;
            break;
          }
        }
      if (!improved) step *= 0.5;
      st.history.push_back(std::sqrt(f));
    }
    st.params = p;
    st.residual = std::sqrt(f);
    return st;
  });
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < res.starts.size(); ++s)
    if (res.starts[s].residual < best) {
      best = res.starts[s].residual;
      res.best = static_cast<int>(s);
    }
  if (res.best >= 0) {
    res.success = best < cfg.tol;
    auto [A, B] = orbit_generators(res.starts[res.best].params);
    const double na = geometry::coframe_values(A).theta.norm();
    const double nb = geometry::coframe_values(B).theta.norm();
    if (na > 0) A /= na;
    if (nb > 0) B /= nb;
    res.spec.A = A;
    res.spec.B = B;
  }
  return res;
}

}  // namespace cayley::examples
