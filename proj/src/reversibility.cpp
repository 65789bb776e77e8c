#include "markovgeo/reversibility.hpp"

#include <cmath>
#include <queue>
#include <string>

#include "markovgeo/errors.hpp"
#include "markovgeo/numerics.hpp"

namespace markovgeo {

namespace {

// Simple cycles of length >= 3, each reported once: the root is the cycle's
// smallest vertex and the orientation is fixed by second < last.
template <typename Visit>
void for_each_simple_cycle(const EdgeSet& edges, Visit visit) {
  const int m = edges.size();
  std::vector<int> path;
  std::vector<char> on_path(m, 0);

  auto dfs = [&](auto&& self, int root, int current) -> void {
    for (int next = root; next < m; ++next) {
      if (!edges.contains(current, next)) continue;
      if (next == root) {
        if (path.size() >= 3 && path[1] < path.back()) visit(path);
        continue;
      }
      if (on_path[next]) continue;
      on_path[next] = 1;
      path.push_back(next);
      self(self, root, next);
      path.pop_back();
      on_path[next] = 0;
    }
  };

  for (int root = 0; root < m; ++root) {
    path.assign(1, root);
    on_path.assign(m, 0);
    on_path[root] = 1;
    dfs(dfs, root, root);
  }
}

Eigen::VectorXd spanning_tree_potential(const EdgeSet& support,
                                        const Eigen::MatrixXd& diff) {
  const int m = support.size();
  Eigen::VectorXd f = Eigen::VectorXd::Zero(m);
  std::vector<char> seen(m, 0);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = 1;
  while (!frontier.empty()) {
    int x = frontier.front();
    frontier.pop();
    for (int y = 0; y < m; ++y) {
      if (!seen[y] && support.contains(x, y)) {
        f(y) = f(x) + diff(x, y);
        seen[y] = 1;
        frontier.push(y);
      }
    }
  }
  return f;
}

}  // namespace

EdgeFunction make_edge_function(Eigen::MatrixXd matrix, EdgeSet support) {
  if (matrix.rows() != matrix.cols() ||
      static_cast<int>(matrix.rows()) != support.size()) {
    fail(errc::invalid_size, "function matrix does not match its support");
  }
  if (!support.symmetric()) {
    fail(errc::asymmetric_support, "edge functions need a symmetric support");
  }
  if (!strongly_connected(support)) {
    fail(errc::not_irreducible, "support graph is not strongly connected");
  }
  const int m = support.size();
  for (int x = 0; x < m; ++x)
    for (int xp = 0; xp < m; ++xp)
      if (!support.contains(x, xp)) matrix(x, xp) = 0.0;
  return EdgeFunction{std::move(matrix), std::move(support)};
}

EFamilySpec make_efamily_spec(EdgeFunction carrier,
                              std::vector<EdgeFunction> generators,
                              Eigen::VectorXd theta) {
  if (static_cast<int>(generators.size()) != theta.size()) {
    fail(errc::invalid_size, "theta length does not match generator count");
  }
  for (const auto& g : generators) {
    if (!(g.support == carrier.support)) {
      fail(errc::support_mismatch,
           "carrier and generators must share one support");
    }
  }
  const int m = carrier.size();
  auto shifts = shift_space_basis(carrier.support);
  Eigen::MatrixXd stacked(generators.size() + shifts.size(), m * m);
  int row = 0;
  for (const auto& g : generators)
    stacked.row(row++) = g.matrix.reshaped().transpose();
  for (const auto& n : shifts) stacked.row(row++) = n.reshaped().transpose();
  int expected = static_cast<int>(generators.size() + shifts.size());
  if (numerical_rank(stacked) != expected) {
    fail(errc::dependent_generators,
         "generators are linearly dependent modulo the shift space");
  }
  return EFamilySpec{std::move(carrier), std::move(generators), std::move(theta)};
}

double balance_residual(const Kernel& kernel) {
  Distribution pi = stationary_distribution(kernel);
  const int m = kernel.size();
  double residual = 0.0;
  for (int x = 0; x < m; ++x)
    for (int xp = x + 1; xp < m; ++xp)
      residual = std::max(residual,
                          std::abs(pi(x) * kernel.matrix(x, xp) -
                                   pi(xp) * kernel.matrix(xp, x)));
  return residual;
}

bool is_reversible_balance(const Kernel& kernel, double tol) {
  return balance_residual(kernel) <= tol;
}

std::optional<double> kolmogorov_residual(const PositiveEdgeFunction& h) {
  if (h.size() > kMaxCycleStates) {
    fail(errc::too_large, "cycle enumeration capped at " +
                              std::to_string(kMaxCycleStates) + " states");
  }
  if (!h.support.symmetric()) return std::nullopt;
  Eigen::MatrixXd logs = Eigen::MatrixXd::Zero(h.size(), h.size());
  for (auto [x, xp] : h.support.edges()) logs(x, xp) = std::log(h.matrix(x, xp));
  double worst = 0.0;
  for_each_simple_cycle(h.support, [&](const std::vector<int>& cycle) {
    double forward = 0.0, backward = 0.0;
    const int n = static_cast<int>(cycle.size());
    for (int t = 0; t < n; ++t) {
      int a = cycle[t], b = cycle[(t + 1) % n];
      forward += logs(a, b);
      backward += logs(b, a);
    }
    worst = std::max(worst, std::abs(forward - backward));
  });
  return worst;
}

bool kolmogorov_cycle_check(const PositiveEdgeFunction& h, double tol) {
  auto residual = kolmogorov_residual(h);
  return residual.has_value() && *residual <= tol;
}

double pf_asymmetry(const PositiveEdgeFunction& h) {
  Eigen::MatrixXd a = pf_projection(h).cwiseProduct(h.matrix.transpose());
  double scale = a.cwiseAbs().maxCoeff();
  double asym = (a - a.transpose()).cwiseAbs().maxCoeff();
  return scale > 0.0 ? asym / scale : 0.0;
}

bool is_reversible_pf(const PositiveEdgeFunction& h, double tol) {
  if (!h.support.symmetric()) return false;
  return pf_asymmetry(h) <= tol;
}

LogReversibleDecomposition log_reversible_decompose(const EdgeFunction& g,
                                                    double tol) {
  const int m = g.size();
  Eigen::MatrixXd sym = 0.5 * (g.matrix + g.matrix.transpose());
  // potential(x') - potential(x) must match the antisymmetric part on edges
  Eigen::MatrixXd diff = 0.5 * (g.matrix - g.matrix.transpose());
  Eigen::VectorXd phi = spanning_tree_potential(g.support, diff);
  bool valid = true;
  for (auto [x, xp] : g.support.edges()) {
    if (std::abs(phi(xp) - phi(x) - diff(x, xp)) > tol) {
      valid = false;
      break;
    }
  }
  EdgeFunction part = make_edge_function(std::move(sym), g.support);
  return LogReversibleDecomposition{std::move(part), std::move(phi), valid};
}

bool is_reversible_efamily(const EFamilySpec& spec, double tol) {
  if (!spec.carrier.support.symmetric()) return false;
  if (!log_reversible_decompose(spec.carrier, tol).valid) return false;
  for (const auto& g : spec.generators)
    if (!log_reversible_decompose(g, tol).valid) return false;
  return true;
}

std::vector<Eigen::MatrixXd> shift_space_basis(const EdgeSet& support) {
  const int m = support.size();
  std::vector<Eigen::MatrixXd> basis;
  basis.reserve(m);
  for (int k = 0; k < m - 1; ++k) {
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(m, m);
    for (auto [x, xp] : support.edges())
      h(x, xp) = (xp == k ? 1.0 : 0.0) - (x == k ? 1.0 : 0.0);
    basis.push_back(std::move(h));
  }
  Eigen::MatrixXd ones = Eigen::MatrixXd::Zero(m, m);
  for (auto [x, xp] : support.edges()) ones(x, xp) = 1.0;
  basis.push_back(std::move(ones));
  return basis;
}

}  // namespace markovgeo
