#include "markovgeo/families.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "markovgeo/errors.hpp"
#include "markovgeo/info_geometry.hpp"
#include "markovgeo/numerics.hpp"
#include "markovgeo/reversibility.hpp"

namespace markovgeo {

namespace {

void require_full_support(const Kernel& kernel, const char* what) {
  if (kernel.support.edge_count() != kernel.size() * kernel.size()) {
    fail(errc::support_mismatch,
         std::string(what) + " requires a full-support kernel");
  }
}

// Symmetric kernel of the e-hull proof: off-diagonal pair (i,j) carries
// mass 2t/m, the two diagonal cells 2(1-t)/m, everything else 1/m.
Eigen::MatrixXd hull_pair_kernel(int m, int i, int j, double t) {
  Eigen::MatrixXd p = Eigen::MatrixXd::Constant(m, m, 1.0 / m);
  p(i, i) = 2.0 * (1.0 - t) / m;
  p(j, j) = 2.0 * (1.0 - t) / m;
  p(i, j) = 2.0 * t / m;
  p(j, i) = 2.0 * t / m;
  return p;
}

}  // namespace

bool family_membership(const Kernel& kernel, FamilyTag tag, double tol) {
  switch (tag) {
    case FamilyTag::reversible:
      return is_reversible_balance(kernel, tol);
    case FamilyTag::symmetric:
      return (kernel.matrix - kernel.matrix.transpose()).cwiseAbs().maxCoeff() <=
             tol;
    case FamilyTag::bistochastic:
      return (kernel.matrix.colwise().sum().array() - 1.0).abs().maxCoeff() <=
             tol;
    case FamilyTag::memoryless: {
      Eigen::VectorXd spread = kernel.matrix.colwise().maxCoeff() -
                               kernel.matrix.colwise().minCoeff();
      return spread.maxCoeff() <= tol;
    }
  }
  fail(errc::usage_error, "unknown family tag");
}

SimplexPoint flatten_symmetric_matrix(const Eigen::MatrixXd& q) {
  const int m = static_cast<int>(q.rows());
  SimplexPoint point(m * (m + 1) / 2);
  int k = 0;
  for (int i = 0; i < m; ++i) point(k++) = q(i, i);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) point(k++) = 2.0 * q(i, j);
  return point;
}

SimplexPoint flatten_reversible(const EdgeMeasure& measure) {
  const int m = measure.size();
  if (measure.support.edge_count() != m * m) {
    fail(errc::support_mismatch, "flattening requires full support");
  }
  double asym =
      (measure.matrix - measure.matrix.transpose()).cwiseAbs().maxCoeff();
  if (asym > kReversibilityTolerance) {
    fail(errc::not_symmetric, "edge measure is not symmetric");
  }
  return flatten_symmetric_matrix(0.5 *
                                  (measure.matrix + measure.matrix.transpose()));
}

EdgeMeasure unflatten_reversible(const SimplexPoint& point, int size) {
  if (point.size() != size * (size + 1) / 2) {
    fail(errc::invalid_size, "simplex point has the wrong length");
  }
  Eigen::MatrixXd q(size, size);
  int k = 0;
  for (int i = 0; i < size; ++i) q(i, i) = point(k++);
  for (int i = 0; i < size; ++i) {
    for (int j = i + 1; j < size; ++j) {
      q(i, j) = point(k) / 2.0;
      q(j, i) = point(k) / 2.0;
      ++k;
    }
  }
  return validate_edge_measure(std::move(q));
}

std::tuple<EdgeMeasure, EdgeMeasure, Eigen::MatrixXd>
counterexample_edge_measures() {
  Eigen::MatrixXd a(3, 3), b(3, 3);
  a << 1, 1, 2, 2, 1, 2, 1, 3, 1;
  b << 1, 3, 1, 2, 1, 2, 2, 1, 1;
  a /= a.sum();
  b /= b.sum();
  Eigen::MatrixXd mid = (a.array() * b.array()).sqrt();
  mid /= mid.sum();
  return {validate_edge_measure(a), validate_edge_measure(b), mid};
}

double marginal_imbalance(const Eigen::MatrixXd& q) {
  Eigen::VectorXd row = q.rowwise().sum();
  Eigen::VectorXd col = q.colwise().sum().transpose();
  return (row - col).cwiseAbs().maxCoeff();
}

std::pair<int, int> ehull_rank_experiment(int size, int samples,
                                          std::uint64_t seed) {
  if (size < 3) {
    fail(errc::invalid_size, "the e-hull construction needs at least 3 states");
  }
  Rng rng(seed);
  auto shifts = shift_space_basis(EdgeSet::full(size));
  Eigen::MatrixXd stacked(samples + shifts.size(), size * size);
  for (int s = 0; s < samples; ++s) {
    Kernel p = random_symmetric_kernel(size, rng);
    stacked.row(s) = p.matrix.array().log().matrix().reshaped().transpose();
  }
  for (std::size_t n = 0; n < shifts.size(); ++n)
    stacked.row(samples + n) = shifts[n].reshaped().transpose();
  int expected = (size * (size + 1) / 2 - 1) + size;
  int rank = numerical_rank(stacked);

  double recovery = ehull_generator_recovery_error(size);
  if (recovery > 1e-9) {
    fail(errc::numerical_failure,
         "generator recovery drifted to " + std::to_string(recovery));
  }
  return {rank, expected};
}

double ehull_generator_recovery_error(int size, double t) {
  if (size < 3) {
    fail(errc::invalid_size, "the e-hull construction needs at least 3 states");
  }
  const double a = std::log(2.0 * (1.0 - t));
  const double b = std::log(2.0 * t);
  const double logm = std::log(static_cast<double>(size));
  double worst = 0.0;
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < i; ++j) {
      Eigen::MatrixXd hat =
          hull_pair_kernel(size, i, j, t).array().log().matrix() +
          Eigen::MatrixXd::Constant(size, size, logm);
      Eigen::MatrixXd tilde =
          hull_pair_kernel(size, i, j, 1.0 - t).array().log().matrix() +
          Eigen::MatrixXd::Constant(size, size, logm);
      Eigen::MatrixXd recovered = (b * hat - a * tilde) / (b * b - a * a);
      worst = std::max(
          worst,
          (recovered - basis_function(size, i, j)).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

int mhull_basis_rank(int size, double epsilon) {
  const int dim = size * (size + 1) / 2;
  Eigen::MatrixXd stacked(dim, dim);
  int row = 0;
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j <= i; ++j) {
      Eigen::VectorXd pi = Eigen::VectorXd::Constant(size, epsilon / size);
      pi(i) += (1.0 - epsilon) / 2.0;
      pi(j) += (1.0 - epsilon) / 2.0;
      Eigen::MatrixXd q = pi * pi.transpose();
      stacked.row(row++) = flatten_symmetric_matrix(q).transpose();
    }
  }
  return numerical_rank(stacked);
}

bool mhull_basis_experiment(int size, double epsilon) {
  return mhull_basis_rank(size, epsilon) == size * (size + 1) / 2;
}

EdgeSet lazy_cycle_support(int size) {
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < size; ++x) {
    edges.emplace_back(x, x);
    edges.emplace_back(x, (x + 1) % size);
    edges.emplace_back((x + 1) % size, x);
  }
  return EdgeSet(size, edges);
}

Kernel lazy_cycle_kernel(int size, double theta1, double theta2) {
  if (size < 3) {
    fail(errc::invalid_size, "the cycle walk needs at least 3 states");
  }
  const double norm =
      std::exp(theta1) + std::exp(theta2) + std::exp(-theta2);
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(size, size);
  for (int x = 0; x < size; ++x) {
    p(x, x) = std::exp(theta1) / norm;
    p(x, (x + 1) % size) = std::exp(theta2) / norm;
    p((x + 1) % size, x) = std::exp(-theta2) / norm;
  }
  return validate_kernel(std::move(p), lazy_cycle_support(size));
}

std::pair<Eigen::VectorXd, Eigen::MatrixXd> iid_family_coordinates(
    const Kernel& kernel) {
  require_full_support(kernel, "iid coordinate chart");
  const int m = kernel.size();
  const auto& p = kernel.matrix;
  Eigen::VectorXd first(m - 1);
  for (int i = 0; i < m - 1; ++i) {
    first(i) =
        std::log(p(m - 1, i) * p(i, m - 1) / (p(m - 1, m - 1) * p(m - 1, m - 1)));
  }
  Eigen::MatrixXd second(m - 1, m - 1);
  for (int i = 0; i < m - 1; ++i)
    for (int j = 0; j < m - 1; ++j)
      second(i, j) = std::log(p(i, j) * p(m - 1, m - 1) /
                              (p(m - 1, j) * p(i, m - 1)));
  return {std::move(first), std::move(second)};
}

}  // namespace markovgeo
