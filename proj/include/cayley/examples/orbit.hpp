#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cayley/curves/chart.hpp"

namespace cayley::examples {

using curves::CurveChart;
using geometry::Mat8;
using geometry::OrientedPlane;

// (u, v) -> exp(uA) exp(vB) . base.
struct OrbitSpec {
  Mat8 A = Mat8::Zero();
  Mat8 B = Mat8::Zero();
  OrientedPlane base{Mat8::Identity().col(0), Mat8::Identity().col(1)};
  curves::Domain domain{-0.4, 0.4, -0.4, 0.4};
};

CurveChart orbit_chart(const OrbitSpec& s, const std::string& label = "orbit");

// Commuting pairs: x, y in a Cartan subalgebra t of spin(7), conjugated by
// exp(C), C in spin(7). Parameters: (x[3], y[3], C[21]).
using OrbitParams = Eigen::Matrix<double, 27, 1>;
std::pair<Mat8, Mat8> orbit_generators(const OrbitParams& p);

// Pseudoholomorphic measure of the orbit through e1 ^ e2 (constant along a
// commuting orbit), squared.
double orbit_objective(const OrbitParams& p);

struct OrbitSearchConfig {
  int n_starts = 8;
  int max_iters = 20000;  // objective evaluations per start
  double tol = 1e-8;      // on the (unsquared) residual
  std::uint64_t seed = 0;
  double initial_step = 0.5;
  // Seeds every start at this point (perturbed by `perturbation`) instead of
  // a random draw.
  std::optional<OrbitParams> start;
  double perturbation = 1e-3;
};

struct OrbitStart {
  OrbitParams params;
  double residual = 0;
  std::vector<double> history;  // residual after each sweep
  int evaluations = 0;
};

struct OrbitSearchResult {
  std::vector<OrbitStart> starts;
  int best = -1;
  bool success = false;
  OrbitSpec spec;  // best pair, each generator scaled so |theta| = 1
};

OrbitSearchResult search_orbit(const OrbitSearchConfig& cfg);

}  // namespace cayley::examples
