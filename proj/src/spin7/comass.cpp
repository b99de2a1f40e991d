#include "cayley/spin7/comass.hpp"

#include <stdexcept>

#include "cayley/util/parallel.hpp"

namespace cayley::spin7 {

namespace {

Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd& A) {
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(A);
  Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(A.rows(), A.cols());
  // Fix signs so that Q spans the same oriented frame as A (R with positive diagonal).
  const Eigen::MatrixXd R = qr.matrixQR().topRows(A.cols()).triangularView<Eigen::Upper>();
  for (int j = 0; j < A.cols(); ++j)
    if (R(j, j) < 0) Q.col(j) = -Q.col(j);
  return Q;
}

Eigen::MatrixXd gradient(const AlternatingForm<double>& f, const Eigen::MatrixXd& V) {
  Eigen::MatrixXd G(V.rows(), V.cols());
  Eigen::MatrixXd W = V;
  for (int j = 0; j < V.cols(); ++j) {
    for (int i = 0; i < 8; ++i) {
      W.col(j).setZero();
      W(i, j) = 1.0;
      G(i, j) = evaluate_frame(f, W);
    }
    W.col(j) = V.col(j);
  }
  return G;
}

}  // namespace

double evaluate_frame(const AlternatingForm<double>& f, const Eigen::MatrixXd& V) {
  if (V.rows() != 8 || V.cols() != f.degree()) throw std::invalid_argument("evaluate_frame: frame shape mismatch");
  if (f.degree() == 4) return evaluate4(f, V.col(0), V.col(1), V.col(2), V.col(3));
  std::vector<exterior::Vec<double>> cols(V.cols());
  for (int j = 0; j < V.cols(); ++j)
    for (int i = 0; i < 8; ++i) cols[j][i] = V(i, j);
  return exterior::evaluate(f, std::span<const exterior::Vec<double>>(cols));
}

ComassResult comass_estimate(const AlternatingForm<double>& f, const ComassOptions& opt) {
  if (f.dim() != 8) throw std::invalid_argument("comass_estimate: form must live on R^8");
  if (opt.starts < 1 || opt.steps < 0) throw std::invalid_argument("comass_estimate: bad options");
  const int k = f.degree();

  struct StartResult {
    double value = 0;
    Eigen::MatrixXd frame;
  };
  auto results = util::parallel_map(static_cast<std::size_t>(opt.starts), [&](std::size_t s) {
    auto rng = util::substream(opt.seed, s);
    std::normal_distribution<double> normal;
    Eigen::MatrixXd V(8, k);
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < 8; ++i) V(i, j) = normal(rng);
    V = orthonormalize(V);
    double val = evaluate_frame(f, V);
    double step = opt.initial_step;
    for (int it = 0; it < opt.steps && step > 1e-16; ++it) {
      const double sign = val >= 0 ? 1.0 : -1.0;
      Eigen::MatrixXd G = gradient(f, V);
      Eigen::MatrixXd VtG = V.transpose() * G;
      Eigen::MatrixXd rg = G - V * (0.5 * (VtG + VtG.transpose()));
      if (rg.norm() < 1e-15) break;
      Eigen::MatrixXd cand = orthonormalize(V + sign * step * rg);
      const double cv = evaluate_frame(f, cand);
      if (std::abs(cv) > std::abs(val)) {
        V = cand;
        val = cv;
      } else {
        step *= 0.5;
      }
    }
    return StartResult{std::abs(val), V};
  });

  ComassResult out;
  std::size_t best = 0;
  for (std::size_t s = 0; s < results.size(); ++s) {
    out.start_values.push_back(results[s].value);
    if (results[s].value > results[best].value) best = s;
  }
  out.value = results[best].value;
  out.frame = results[best].frame;
  return out;
}

}  // namespace cayley::spin7
