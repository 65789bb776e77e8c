#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "markovgeo/kernel.hpp"
#include "markovgeo/perron.hpp"

namespace markovgeo {

inline constexpr double kReversibilityTolerance = 1e-9;
/// Kolmogorov cycle enumeration is capped at this many states.
inline constexpr int kMaxCycleStates = 8;

/// Real function on a symmetric, strongly connected edge set; zero outside.
struct EdgeFunction {
  Eigen::MatrixXd matrix;
  EdgeSet support;

  int size() const { return support.size(); }
};

EdgeFunction make_edge_function(Eigen::MatrixXd matrix, EdgeSet support);

/// Splitting g = symmetric_part + potential(x') - potential(x) on the
/// support, when such a splitting exists. The potential is f/2 for the f
/// with g(x,x') = g(x',x) + f(x') - f(x).
struct LogReversibleDecomposition {
  EdgeFunction symmetric_part;
  Eigen::VectorXd potential;
  bool valid = false;
};

/// Exponentially tilted family: members s(exp(carrier + sum theta_i g_i)).
struct EFamilySpec {
  EdgeFunction carrier;
  std::vector<EdgeFunction> generators;
  Eigen::VectorXd theta;

  int size() const { return carrier.size(); }
  int dimension() const { return static_cast<int>(generators.size()); }
};

/// Validates shared supports and linear independence of the generators in
/// the quotient by the shift space.
EFamilySpec make_efamily_spec(EdgeFunction carrier,
                              std::vector<EdgeFunction> generators,
                              Eigen::VectorXd theta);

/// Detailed balance: max |pi(x)P(x,x') - pi(x')P(x',x)| <= tol.
bool is_reversible_balance(const Kernel& kernel,
                           double tol = kReversibilityTolerance);
double balance_residual(const Kernel& kernel);

/// Kolmogorov criterion over all simple cycles of length >= 3. Requires
/// at most kMaxCycleStates states.
bool kolmogorov_cycle_check(const PositiveEdgeFunction& h,
                            double tol = kReversibilityTolerance);

/// Largest |log prod h(gamma) - log prod h(gamma*)| over simple cycles;
/// empty when the support is asymmetric (some reverse edge is missing).
std::optional<double> kolmogorov_residual(const PositiveEdgeFunction& h);

/// Spectral test: h is reversible iff Pi_h o h^T is symmetric.
bool is_reversible_pf(const PositiveEdgeFunction& h,
                      double tol = kReversibilityTolerance);

/// Relative asymmetry of Pi_h o h^T.
double pf_asymmetry(const PositiveEdgeFunction& h);

LogReversibleDecomposition log_reversible_decompose(
    const EdgeFunction& g, double tol = kReversibilityTolerance);

/// A family is reversible iff the support is symmetric and the carrier and
/// every generator are log-reversible.
bool is_reversible_efamily(const EFamilySpec& spec,
                           double tol = kReversibilityTolerance);

/// Basis of the shift space N: functions f(x') - f(x) + c restricted to the
/// support. m matrices for a strongly connected support on m states.
std::vector<Eigen::MatrixXd> shift_space_basis(const EdgeSet& support);

}  // namespace markovgeo
