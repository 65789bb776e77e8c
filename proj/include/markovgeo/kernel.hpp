#pragma once

#include <Eigen/Dense>
#include <optional>

#include "markovgeo/edge_set.hpp"

namespace markovgeo {

/// Entries at or below this magnitude are structural zeros.
inline constexpr double kZeroThreshold = 1e-12;
/// Tolerance on row sums / total mass of validated objects.
inline constexpr double kRowSumTolerance = 1e-12;
/// A row sum may deviate this much from 1 before validation fails.
inline constexpr double kRowSumSlack = 1e-9;

/// Row-stochastic irreducible transition matrix with explicit support.
struct Kernel {
  Eigen::MatrixXd matrix;
  EdgeSet support;

  int size() const { return support.size(); }
};

/// Strictly positive probability vector.
using Distribution = Eigen::VectorXd;

/// Stationary pair-probability matrix Q = diag(pi) P with balanced marginals.
struct EdgeMeasure {
  Eigen::MatrixXd matrix;
  EdgeSet support;

  int size() const { return support.size(); }
};

/// Checks stochasticity and irreducibility, infers or verifies the support,
/// clamps float noise, and renormalizes rows exactly.
Kernel validate_kernel(Eigen::MatrixXd matrix,
                       std::optional<EdgeSet> declared_support = std::nullopt,
                       double zero_threshold = kZeroThreshold);

/// Checks total mass, marginal balance, positivity on support.
EdgeMeasure validate_edge_measure(
    Eigen::MatrixXd matrix,
    std::optional<EdgeSet> declared_support = std::nullopt,
    double zero_threshold = kZeroThreshold);

/// Unique pi with pi P = pi, by a direct linear solve with one equation
/// replaced by the normalization sum(pi) = 1.
Distribution stationary_distribution(const Kernel& kernel);

/// Adjoint kernel P*(x,x') = pi(x') P(x',x) / pi(x).
Kernel time_reversal(const Kernel& kernel);

EdgeMeasure edge_measure(const Kernel& kernel);

Kernel kernel_from_edge_measure(const EdgeMeasure& measure);

/// Q[g] = sum_{x,x'} Q(x,x') g(x,x').
double edge_expectation(const EdgeMeasure& measure, const Eigen::MatrixXd& g);

}  // namespace markovgeo
