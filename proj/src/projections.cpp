#include "markovgeo/projections.hpp"

#include <cmath>

#include "markovgeo/errors.hpp"
#include "markovgeo/perron.hpp"
#include "markovgeo/reversibility.hpp"

namespace markovgeo {

namespace {

bool support_contained(const EdgeSet& inner, const EdgeSet& outer) {
  for (auto [x, xp] : inner.edges())
    if (!outer.contains(x, xp)) return false;
  return true;
}

double finite_kl(const Kernel& p1, const Kernel& p2) {
  DivergenceValue d = kl_divergence(p1, p2);
  if (d.infinite) {
    fail(errc::support_mismatch, "divergence is infinite for these supports");
  }
  return d.value;
}

}  // namespace

DivergenceValue kl_divergence(const Kernel& p1, const Kernel& p2) {
  if (p1.size() != p2.size()) {
    fail(errc::invalid_size, "kernels have different state spaces");
  }
  if (!support_contained(p1.support, p2.support)) {
    return DivergenceValue{0.0, true};
  }
  Distribution pi = stationary_distribution(p1);
  double sum = 0.0;
  for (auto [x, xp] : p1.support.edges()) {
    sum += pi(x) * p1.matrix(x, xp) *
           std::log(p1.matrix(x, xp) / p2.matrix(x, xp));
  }
  return DivergenceValue{std::max(sum, 0.0), false};
}

Kernel m_projection(const Kernel& kernel) {
  Kernel reversed = time_reversal(kernel);
  Eigen::MatrixXd avg = 0.5 * (kernel.matrix + reversed.matrix);
  return validate_kernel(std::move(avg),
                         kernel.support.united(reversed.support));
}

Kernel e_projection(const Kernel& kernel) {
  Kernel reversed = time_reversal(kernel);
  EdgeSet intersection = kernel.support.intersected(reversed.support);
  if (!strongly_connected(intersection)) {
    fail(errc::intersection_not_connected,
         "E intersect E* is not strongly connected");
  }
  const int m = kernel.size();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(m, m);
  for (auto [x, xp] : intersection.edges())
    h(x, xp) = std::sqrt(kernel.matrix(x, xp) * reversed.matrix(x, xp));
  return stochastic_rescale(
      PositiveEdgeFunction{std::move(h), std::move(intersection)});
}

double pythagorean_residual(const Kernel& kernel, const Kernel& pbar,
                            ProjectionMode mode) {
  if (!is_reversible_balance(pbar)) {
    fail(errc::not_reversible, "Pbar fails detailed balance");
  }
  if (mode == ProjectionMode::m) {
    Kernel pm = m_projection(kernel);
    if (!support_contained(pm.support, pbar.support)) {
      fail(errc::support_mismatch,
           "Pbar must be supported on all of E union E*");
    }
    return finite_kl(kernel, pbar) - finite_kl(kernel, pm) -
           finite_kl(pm, pbar);
  }
  Kernel pe = e_projection(kernel);
  if (!support_contained(pbar.support, pe.support)) {
    fail(errc::support_mismatch,
         "Pbar must be supported within E intersect E*");
  }
  return finite_kl(pbar, kernel) - finite_kl(pbar, pe) - finite_kl(pe, kernel);
}

std::pair<double, double> bisection_check(const Kernel& kernel) {
  Kernel reversed = time_reversal(kernel);
  Kernel pm = m_projection(kernel);
  Kernel pe = e_projection(kernel);
  double m_gap =
      std::abs(finite_kl(kernel, pm) - finite_kl(reversed, pm));
  double e_gap =
      std::abs(finite_kl(pe, kernel) - finite_kl(pe, reversed));
  return {m_gap, e_gap};
}

}  // namespace markovgeo
