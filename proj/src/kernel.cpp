#include "markovgeo/kernel.hpp"

#include <cmath>
#include <string>

#include "markovgeo/errors.hpp"

namespace markovgeo {

namespace {

void check_square(const Eigen::MatrixXd& matrix) {
  if (matrix.rows() != matrix.cols()) {
    fail(errc::invalid_size, "matrix must be square, got " +
                                 std::to_string(matrix.rows()) + "x" +
                                 std::to_string(matrix.cols()));
  }
  if (matrix.rows() < 2) {
    fail(errc::invalid_size, "state space must have at least two states");
  }
}

// Clamp tiny negatives to zero, zero out sub-threshold entries, and check
// the declared support against the inferred one.
EdgeSet clean_and_infer_support(Eigen::MatrixXd& matrix,
                                const std::optional<EdgeSet>& declared,
                                double zero_threshold) {
  const int m = static_cast<int>(matrix.rows());
  std::vector<std::pair<int, int>> inferred;
  for (int x = 0; x < m; ++x) {
    for (int xp = 0; xp < m; ++xp) {
      double v = matrix(x, xp);
      if (v < -zero_threshold) {
        fail(errc::not_stochastic, "negative entry at (" + std::to_string(x + 1) +
                                       "," + std::to_string(xp + 1) + ")");
      }
      if (v <= zero_threshold) {
        matrix(x, xp) = 0.0;
      } else {
        inferred.emplace_back(x, xp);
      }
    }
  }
  EdgeSet support(m, inferred);
  if (declared && !(*declared == support)) {
    fail(errc::support_mismatch,
         "declared support disagrees with positive entries");
  }
  return support;
}

}  // namespace

Kernel validate_kernel(Eigen::MatrixXd matrix,
                       std::optional<EdgeSet> declared_support,
                       double zero_threshold) {
  check_square(matrix);
  EdgeSet support = clean_and_infer_support(matrix, declared_support, zero_threshold);
  const int m = support.size();
  for (int x = 0; x < m; ++x) {
    double sum = matrix.row(x).sum();
    if (std::abs(sum - 1.0) > kRowSumSlack) {
      fail(errc::not_stochastic, "row " + std::to_string(x + 1) + " sums to " +
                                     std::to_string(sum));
    }
    matrix.row(x) /= sum;
  }
  if (!strongly_connected(support)) {
    fail(errc::not_irreducible, "support graph is not strongly connected");
  }
  return Kernel{std::move(matrix), std::move(support)};
}

EdgeMeasure validate_edge_measure(Eigen::MatrixXd matrix,
                                  std::optional<EdgeSet> declared_support,
                                  double zero_threshold) {
  check_square(matrix);
  EdgeSet support = clean_and_infer_support(matrix, declared_support, zero_threshold);
  double total = matrix.sum();
  if (std::abs(total - 1.0) > kRowSumSlack) {
    fail(errc::not_stochastic, "entries sum to " + std::to_string(total));
  }
  matrix /= total;
  Eigen::VectorXd row = matrix.rowwise().sum();
  Eigen::VectorXd col = matrix.colwise().sum().transpose();
  double imbalance = (row - col).cwiseAbs().maxCoeff();
  if (imbalance > kRowSumSlack) {
    fail(errc::unbalanced_marginals,
         "row and column marginals differ by " + std::to_string(imbalance));
  }
  if (!strongly_connected(support)) {
    fail(errc::not_irreducible, "support graph is not strongly connected");
  }
  return EdgeMeasure{std::move(matrix), std::move(support)};
}

Distribution stationary_distribution(const Kernel& kernel) {
  const int m = kernel.size();
  Eigen::MatrixXd system = kernel.matrix.transpose() - Eigen::MatrixXd::Identity(m, m);
  system.row(m - 1).setOnes();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m);
  rhs(m - 1) = 1.0;
  Eigen::VectorXd pi = system.partialPivLu().solve(rhs);
  pi /= pi.sum();
  double residual =
      (kernel.matrix.transpose() * pi - pi).cwiseAbs().maxCoeff();
  if (!pi.allFinite() || pi.minCoeff() <= 0.0 || residual > 1e-10) {
    fail(errc::numerical_failure,
         "stationary solve failed, residual " + std::to_string(residual));
  }
  return pi;
}

Kernel time_reversal(const Kernel& kernel) {
  Distribution pi = stationary_distribution(kernel);
  const int m = kernel.size();
  Eigen::MatrixXd reversed(m, m);
  for (int x = 0; x < m; ++x)
    for (int xp = 0; xp < m; ++xp)
      reversed(x, xp) = pi(xp) * kernel.matrix(xp, x) / pi(x);
  return validate_kernel(std::move(reversed), kernel.support.transposed());
}

EdgeMeasure edge_measure(const Kernel& kernel) {
  Distribution pi = stationary_distribution(kernel);
  Eigen::MatrixXd q = pi.asDiagonal() * kernel.matrix;
  return EdgeMeasure{std::move(q), kernel.support};
}

Kernel kernel_from_edge_measure(const EdgeMeasure& measure) {
  const int m = measure.size();
  Eigen::VectorXd pi = measure.matrix.rowwise().sum();
  for (int x = 0; x < m; ++x) {
    if (pi(x) <= kZeroThreshold) {
      fail(errc::degenerate_marginal,
           "state " + std::to_string(x + 1) + " has vanishing marginal");
    }
  }
  Eigen::MatrixXd p = pi.cwiseInverse().asDiagonal() * measure.matrix;
  return validate_kernel(std::move(p), measure.support);
}

double edge_expectation(const EdgeMeasure& measure, const Eigen::MatrixXd& g) {
  return (measure.matrix.array() * g.array()).sum();
}

}  // namespace markovgeo
