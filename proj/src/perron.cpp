#include "markovgeo/perron.hpp"

#include <cmath>
#include <string>

#include "markovgeo/errors.hpp"

namespace markovgeo {

namespace {

constexpr double kIterateTolerance = 1e-13;
constexpr int kIterationBudget = 100000;

// Dominant eigenvector of (a + I), normalized to unit max entry.
Eigen::VectorXd shifted_power_vector(const Eigen::MatrixXd& a) {
  const int m = static_cast<int>(a.rows());
  Eigen::VectorXd v = Eigen::VectorXd::Ones(m);
  for (int iter = 0; iter < kIterationBudget; ++iter) {
    Eigen::VectorXd next = a * v + v;
    next /= next.maxCoeff();
    double diff = (next - v).cwiseAbs().maxCoeff();
    v = std::move(next);
    if (diff < kIterateTolerance) return v;
  }
  fail(errc::convergence_failure,
       "power iteration did not converge within " +
           std::to_string(kIterationBudget) + " iterations");
}

}  // namespace

PositiveEdgeFunction make_positive_function(Eigen::MatrixXd matrix,
                                            std::optional<EdgeSet> declared_support,
                                            double zero_threshold) {
  if (matrix.rows() != matrix.cols() || matrix.rows() < 2) {
    fail(errc::invalid_size, "function matrix must be square with size >= 2");
  }
  const int m = static_cast<int>(matrix.rows());
  std::vector<std::pair<int, int>> inferred;
  for (int x = 0; x < m; ++x) {
    for (int xp = 0; xp < m; ++xp) {
      double v = matrix(x, xp);
      if (v < -zero_threshold) {
        fail(errc::not_stochastic, "negative entry in positive function");
      }
      if (v <= zero_threshold) {
        matrix(x, xp) = 0.0;
      } else {
        inferred.emplace_back(x, xp);
      }
    }
  }
  EdgeSet support(m, inferred);
  if (declared_support && !(*declared_support == support)) {
    fail(errc::support_mismatch,
         "declared support disagrees with positive entries");
  }
  if (!strongly_connected(support)) {
    fail(errc::not_irreducible, "support graph is not strongly connected");
  }
  return PositiveEdgeFunction{std::move(matrix), std::move(support)};
}

PositiveEdgeFunction as_positive_function(const Kernel& kernel) {
  return PositiveEdgeFunction{kernel.matrix, kernel.support};
}

PFData pf_data(const PositiveEdgeFunction& h) {
  Eigen::VectorXd v = shifted_power_vector(h.matrix);
  Eigen::VectorXd w = shifted_power_vector(h.matrix.transpose());
  Eigen::VectorXd u = w / w.dot(v);
  double rho = u.dot(h.matrix * v) / u.dot(v);
  if (!(rho > 0.0) || !v.allFinite() || !u.allFinite()) {
    fail(errc::numerical_failure, "degenerate Perron-Frobenius data");
  }
  Eigen::MatrixXd projection = v * u.transpose();
  return PFData{rho, std::move(v), std::move(u), std::move(projection)};
}

Kernel stochastic_rescale(const PositiveEdgeFunction& h) {
  PFData pf = pf_data(h);
  const int m = h.size();
  Eigen::MatrixXd p(m, m);
  for (int x = 0; x < m; ++x)
    for (int xp = 0; xp < m; ++xp)
      p(x, xp) = h.matrix(x, xp) * pf.right(xp) / (pf.rho * pf.right(x));
  return validate_kernel(std::move(p), h.support);
}

Eigen::MatrixXd pf_projection(const PositiveEdgeFunction& h) {
  return pf_data(h).projection;
}

}  // namespace markovgeo
