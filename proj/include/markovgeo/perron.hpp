#pragma once

#include <Eigen/Dense>
#include <optional>

#include "markovgeo/kernel.hpp"

namespace markovgeo {

/// Nonnegative irreducible matrix, strictly positive exactly on its support.
/// The support need not be symmetric.
struct PositiveEdgeFunction {
  Eigen::MatrixXd matrix;
  EdgeSet support;

  int size() const { return support.size(); }
};

PositiveEdgeFunction make_positive_function(
    Eigen::MatrixXd matrix,
    std::optional<EdgeSet> declared_support = std::nullopt,
    double zero_threshold = kZeroThreshold);

PositiveEdgeFunction as_positive_function(const Kernel& kernel);

/// Perron-Frobenius root, eigenvector pair and rank-one projection.
///
/// Normalization: right vector scaled to max entry 1, then the left vector
/// scaled so that u . v = 1. projection(x,x') = v(x) u(x').
struct PFData {
  double rho = 0.0;
  Eigen::VectorXd right;
  Eigen::VectorXd left;
  Eigen::MatrixXd projection;
};

/// Shifted power iteration on (h + I) and (h^T + I); the shift keeps the
/// iteration convergent for periodic support patterns. The root is the
/// bilinear Rayleigh quotient u h v / (u . v) of the converged pair.
PFData pf_data(const PositiveEdgeFunction& h);

/// The map s: P(x,x') = h(x,x') v(x') / (rho v(x)). Same support as h,
/// idempotent on kernels, invariant under h -> h . e^{f(x')-f(x)+c}.
Kernel stochastic_rescale(const PositiveEdgeFunction& h);

Eigen::MatrixXd pf_projection(const PositiveEdgeFunction& h);

}  // namespace markovgeo
