#pragma once

#include <cstdint>
#include <vector>

#include "cayley/spin7/tables.hpp"

namespace cayley::spin7 {

struct ComassOptions {
  int starts = 512;
  int steps = 200;
  double initial_step = 0.1;
  std::uint64_t seed = 0;
};

struct ComassResult {
  double value = 0;                 // max over starts of |f(V)|
  Eigen::MatrixXd frame;            // 8 x k orthonormal maximizer
  std::vector<double> start_values; // best |f| per start, in start order
};

// Multistart projected gradient ascent of |f| on the Stiefel manifold of
// orthonormal k-frames; the step halves whenever a step fails to improve.
ComassResult comass_estimate(const AlternatingForm<double>& f, const ComassOptions& opt = {});

double evaluate_frame(const AlternatingForm<double>& f, const Eigen::MatrixXd& V);

}  // namespace cayley::spin7
