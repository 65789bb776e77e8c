#include "markovgeo/sampling.hpp"

#include <cmath>

#include "markovgeo/errors.hpp"

namespace markovgeo {

namespace {

constexpr int kBalancingBudget = 10000;

Eigen::MatrixXd random_symmetric_positive(int size, Rng& rng) {
  Eigen::MatrixXd a(size, size);
  for (int x = 0; x < size; ++x) {
    for (int xp = x; xp < size; ++xp) {
      double v = uniform(rng, 0.1, 1.0);
      a(x, xp) = v;
      a(xp, x) = v;
    }
  }
  return a;
}

}  // namespace

Distribution random_distribution(int size, Rng& rng) {
  Eigen::VectorXd pi(size);
  for (int x = 0; x < size; ++x) pi(x) = uniform(rng, 0.1, 1.0);
  return pi / pi.sum();
}

Kernel random_kernel(int size, Rng& rng) {
  Eigen::MatrixXd p(size, size);
  for (int x = 0; x < size; ++x)
    for (int xp = 0; xp < size; ++xp) p(x, xp) = uniform(rng, 0.05, 1.0);
  p.array().colwise() /= p.rowwise().sum().array();
  return validate_kernel(std::move(p));
}

Kernel random_symmetric_kernel(int size, Rng& rng) {
  Eigen::MatrixXd a = random_symmetric_positive(size, rng);
  for (int iter = 0; iter < kBalancingBudget; ++iter) {
    Eigen::VectorXd row = a.rowwise().sum();
    if ((row.array() - 1.0).abs().maxCoeff() < 1e-14) {
      return validate_kernel(std::move(a));
    }
    Eigen::VectorXd d = row.array().rsqrt();
    a = d.asDiagonal() * a * d.asDiagonal();
  }
  fail(errc::convergence_failure, "symmetric balancing did not converge");
}

Kernel random_bistochastic_kernel(int size, Rng& rng) {
  Eigen::MatrixXd a(size, size);
  for (int x = 0; x < size; ++x)
    for (int xp = 0; xp < size; ++xp) a(x, xp) = uniform(rng, 0.1, 1.0);
  for (int iter = 0; iter < kBalancingBudget; ++iter) {
    a.array().colwise() /= a.rowwise().sum().array();
    a.array().rowwise() /= a.colwise().sum().array();
    double drift = (a.rowwise().sum().array() - 1.0).abs().maxCoeff();
    if (drift < 1e-14) return validate_kernel(std::move(a));
  }
  fail(errc::convergence_failure, "doubly stochastic balancing did not converge");
}

Kernel random_reversible_kernel(const EdgeSet& support, Rng& rng) {
  if (!support.symmetric()) {
    fail(errc::asymmetric_support,
         "reversible sampling needs a symmetric support");
  }
  const int m = support.size();
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(m, m);
  for (auto [x, xp] : support.edges()) {
    if (xp < x) continue;
    double v = uniform(rng, 0.1, 1.0);
    q(x, xp) = v;
    q(xp, x) = v;
  }
  q /= q.sum();
  return kernel_from_edge_measure(validate_edge_measure(std::move(q), support));
}

Kernel random_reversible_kernel(int size, Rng& rng) {
  return random_reversible_kernel(EdgeSet::full(size), rng);
}

Kernel random_memoryless_kernel(int size, Rng& rng) {
  Distribution pi = random_distribution(size, rng);
  Eigen::MatrixXd p(size, size);
  for (int x = 0; x < size; ++x) p.row(x) = pi.transpose();
  return validate_kernel(std::move(p));
}

PositiveEdgeFunction random_reversible_function(int size, Rng& rng) {
  Eigen::MatrixXd s(size, size);
  for (int x = 0; x < size; ++x) {
    for (int xp = x; xp < size; ++xp) {
      double v = uniform(rng, -1.0, 1.0);
      s(x, xp) = v;
      s(xp, x) = v;
    }
  }
  Eigen::VectorXd f(size);
  for (int x = 0; x < size; ++x) f(x) = uniform(rng, -1.0, 1.0);
  double c = uniform(rng, -1.0, 1.0);
  Eigen::MatrixXd h(size, size);
  for (int x = 0; x < size; ++x)
    for (int xp = 0; xp < size; ++xp)
      h(x, xp) = std::exp(s(x, xp) + f(xp) - f(x) + c);
  return make_positive_function(std::move(h));
}

}  // namespace markovgeo
