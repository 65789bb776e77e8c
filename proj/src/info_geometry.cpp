#include "markovgeo/info_geometry.hpp"

#include <cmath>
#include <string>

#include "markovgeo/errors.hpp"

namespace markovgeo {

namespace {

constexpr double kLogDerivativeStep = 1e-5;

void require_reversible(const Kernel& kernel, double tol) {
  if (!kernel.support.symmetric() || !is_reversible_balance(kernel, tol)) {
    fail(errc::not_reversible, "kernel fails detailed balance");
  }
}

void require_same_size(const Kernel& p0, const Kernel& p1) {
  if (p0.size() != p1.size()) {
    fail(errc::invalid_size, "kernels have different state spaces");
  }
}

Eigen::MatrixXd tilted_matrix(const EFamilySpec& spec,
                              const Eigen::VectorXd& theta) {
  Eigen::MatrixXd s = spec.carrier.matrix;
  for (int i = 0; i < spec.dimension(); ++i)
    s += theta(i) * spec.generators[i].matrix;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(spec.size(), spec.size());
  for (auto [x, xp] : spec.carrier.support.edges()) h(x, xp) = std::exp(s(x, xp));
  return h;
}

}  // namespace

Eigen::MatrixXd basis_function(int size, int i, int j) {
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(size, size);
  g(i, j) += 1.0;
  g(j, i) += 1.0;
  return g;
}

Kernel tilt(const Kernel& kernel, const Eigen::MatrixXd& g, double theta) {
  const int m = kernel.size();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(m, m);
  for (auto [x, xp] : kernel.support.edges())
    h(x, xp) = kernel.matrix(x, xp) * std::exp(theta * g(x, xp));
  return stochastic_rescale(PositiveEdgeFunction{std::move(h), kernel.support});
}

Kernel e_geodesic(const Kernel& p0, const Kernel& p1, double t) {
  require_same_size(p0, p1);
  if (!(p0.support == p1.support)) {
    fail(errc::support_mismatch, "e-geodesic endpoints must share a support");
  }
  const int m = p0.size();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(m, m);
  for (auto [x, xp] : p0.support.edges())
    h(x, xp) = std::pow(p0.matrix(x, xp), 1.0 - t) * std::pow(p1.matrix(x, xp), t);
  return stochastic_rescale(PositiveEdgeFunction{std::move(h), p0.support});
}

Kernel m_geodesic(const Kernel& p0, const Kernel& p1, double t) {
  require_same_size(p0, p1);
  Eigen::MatrixXd q =
      (1.0 - t) * edge_measure(p0).matrix + t * edge_measure(p1).matrix;
  return kernel_from_edge_measure(validate_edge_measure(std::move(q)));
}

NaturalCoords natural_coords(const Kernel& kernel, double tol) {
  require_reversible(kernel, tol);
  const int m = kernel.size();
  const int xstar = kernel.support.excluded_column();
  const double anchor =
      kernel.matrix(m - 1, xstar) * kernel.matrix(xstar, m - 1);
  auto pairs = kernel.support.coordinate_pairs();
  std::vector<double> theta;
  theta.reserve(pairs.size());
  for (auto [i, j] : pairs) {
    double weight = (i == j) ? 2.0 : 1.0;
    theta.push_back(
        std::log(kernel.matrix(i, j) * kernel.matrix(j, i) / anchor) /
        (2.0 * weight));
  }
  return NaturalCoords{std::move(theta), kernel.support};
}

PositiveEdgeFunction natural_lift(const NaturalCoords& coords) {
  const int m = coords.support.size();
  auto pairs = coords.support.coordinate_pairs();
  if (pairs.size() != coords.theta.size()) {
    fail(errc::invalid_size, "coordinate vector does not match T(E)");
  }
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(m, m);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [i, j] = pairs[k];
    s += coords.theta[k] * basis_function(m, i, j);
  }
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(m, m);
  for (auto [x, xp] : coords.support.edges()) h(x, xp) = std::exp(s(x, xp));
  return PositiveEdgeFunction{std::move(h), coords.support};
}

Kernel kernel_from_natural(const NaturalCoords& coords) {
  return stochastic_rescale(natural_lift(coords));
}

ExpectationCoords expectation_coords(const Kernel& kernel, double tol) {
  require_reversible(kernel, tol);
  EdgeMeasure q = edge_measure(kernel);
  auto pairs = kernel.support.coordinate_pairs();
  std::vector<double> eta;
  eta.reserve(pairs.size());
  for (auto [i, j] : pairs) eta.push_back(q.matrix(i, j) + q.matrix(j, i));
  return ExpectationCoords{std::move(eta), kernel.support};
}

EdgeMeasure edge_measure_from_expectation(const ExpectationCoords& coords) {
  const int m = coords.support.size();
  auto pairs = coords.support.coordinate_pairs();
  if (pairs.size() != coords.eta.size()) {
    fail(errc::invalid_size, "coordinate vector does not match T(E)");
  }
  double assigned = 0.0;
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(m, m);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [i, j] = pairs[k];
    double eta = coords.eta[k];
    if (!(eta > 0.0)) {
      fail(errc::infeasible_coords, "eta must be strictly positive");
    }
    q(i, j) = eta / 2.0;
    q(j, i) = eta / 2.0;
    assigned += (i == j) ? eta / 2.0 : eta;
  }
  double residual = 1.0 - assigned;
  if (residual <= kZeroThreshold) {
    fail(errc::infeasible_coords, "no residual mass left for the anchor edge");
  }
  const int xstar = coords.support.excluded_column();
  q(m - 1, xstar) = residual / 2.0;
  q(xstar, m - 1) = residual / 2.0;
  return validate_edge_measure(std::move(q), coords.support);
}

Kernel kernel_from_expectation(const ExpectationCoords& coords) {
  return kernel_from_edge_measure(edge_measure_from_expectation(coords));
}

int reversible_dimension(const EdgeSet& support) {
  if (!support.symmetric()) {
    fail(errc::asymmetric_support,
         "reversible family needs a symmetric support");
  }
  return (support.edge_count() + support.diagonal_count()) / 2 - 1;
}

Kernel family_kernel(const EFamilySpec& spec, const Eigen::VectorXd& theta) {
  return stochastic_rescale(
      PositiveEdgeFunction{tilted_matrix(spec, theta), spec.carrier.support});
}

double family_log_root(const EFamilySpec& spec, const Eigen::VectorXd& theta) {
  PFData pf = pf_data(
      PositiveEdgeFunction{tilted_matrix(spec, theta), spec.carrier.support});
  return std::log(pf.rho);
}

Eigen::MatrixXd fisher_metric(const EFamilySpec& spec) {
  const int d = spec.dimension();
  const double h = kLogDerivativeStep;
  Kernel center = family_kernel(spec, spec.theta);
  EdgeMeasure q = edge_measure(center);
  auto edges = spec.carrier.support.edges();

  // d_i log P on the support, one column per parameter direction
  Eigen::MatrixXd dlog(edges.size(), d);
  for (int i = 0; i < d; ++i) {
    Eigen::VectorXd up = spec.theta, down = spec.theta;
    up(i) += h;
    down(i) -= h;
    Kernel plus = family_kernel(spec, up);
    Kernel minus = family_kernel(spec, down);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [x, xp] = edges[e];
      dlog(e, i) = (std::log(plus.matrix(x, xp)) - std::log(minus.matrix(x, xp))) /
                   (2.0 * h);
    }
  }

  Eigen::MatrixXd metric = Eigen::MatrixXd::Zero(d, d);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [x, xp] = edges[e];
    double w = q.matrix(x, xp);
    for (int i = 0; i < d; ++i)
      for (int j = i; j < d; ++j) metric(i, j) += w * dlog(e, i) * dlog(e, j);
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < i; ++j) metric(i, j) = metric(j, i);
  return metric;
}

Eigen::MatrixXd psi_hessian(const EFamilySpec& spec, double step) {
  const int d = spec.dimension();
  auto psi = [&](const Eigen::VectorXd& theta) {
    return family_log_root(spec, theta);
  };
  Eigen::MatrixXd hess(d, d);
  const double center = psi(spec.theta);
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      Eigen::VectorXd t = spec.theta;
      if (i == j) {
        t(i) += step;
        double fp = psi(t);
        t(i) -= 2 * step;
        double fm = psi(t);
        hess(i, i) = (fp - 2 * center + fm) / (step * step);
      } else {
        auto at = [&](double di, double dj) {
          Eigen::VectorXd u = spec.theta;
          u(i) += di;
          u(j) += dj;
          return psi(u);
        };
        hess(i, j) = (at(step, step) - at(step, -step) - at(-step, step) +
                      at(-step, -step)) /
                     (4 * step * step);
        hess(j, i) = hess(i, j);
      }
    }
  }
  return hess;
}

}  // namespace markovgeo
