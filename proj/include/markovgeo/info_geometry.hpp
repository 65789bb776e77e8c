#pragma once

#include <Eigen/Dense>
#include <vector>

#include "markovgeo/kernel.hpp"
#include "markovgeo/perron.hpp"
#include "markovgeo/reversibility.hpp"

namespace markovgeo {

/// Natural parameters of the reversible family, indexed by the support's
/// coordinate pairs T(E) in lexicographic order.
struct NaturalCoords {
  std::vector<double> theta;
  EdgeSet support;
};

/// Expectation parameters eta_ij = Q(i,j) + Q(j,i), same indexing.
struct ExpectationCoords {
  std::vector<double> eta;
  EdgeSet support;
};

/// Basis element g_ij = delta_i^T delta_j + delta_j^T delta_i.
Eigen::MatrixXd basis_function(int size, int i, int j);

/// Exponential tilting s(P o exp[theta g]).
Kernel tilt(const Kernel& kernel, const Eigen::MatrixXd& g, double theta);

/// s(P0^{1-t} o P1^t). Both kernels must share one support.
Kernel e_geodesic(const Kernel& p0, const Kernel& p1, double t);

/// Kernel of (1-t) Q0 + t Q1; the support is the union of the endpoints'.
Kernel m_geodesic(const Kernel& p0, const Kernel& p1, double t);

NaturalCoords natural_coords(const Kernel& kernel,
                             double tol = kReversibilityTolerance);

/// exp(sum theta^ij g_ij) on the support, before stochastic rescaling.
PositiveEdgeFunction natural_lift(const NaturalCoords& coords);

Kernel kernel_from_natural(const NaturalCoords& coords);

ExpectationCoords expectation_coords(const Kernel& kernel,
                                     double tol = kReversibilityTolerance);

/// Symmetric edge measure implied by eta, then its kernel.
Kernel kernel_from_expectation(const ExpectationCoords& coords);
EdgeMeasure edge_measure_from_expectation(const ExpectationCoords& coords);

/// dim W_rev(X,E) = (|E| + |T0(E)|)/2 - 1 for symmetric supports.
int reversible_dimension(const EdgeSet& support);

/// Family member s(exp(K + sum theta_i g_i)) at the given parameters.
Kernel family_kernel(const EFamilySpec& spec, const Eigen::VectorXd& theta);

/// psi(theta) = log of the PF root of exp(K + sum theta_i g_i).
double family_log_root(const EFamilySpec& spec, const Eigen::VectorXd& theta);

/// Fisher metric g_ij = sum Q(x,x') d_i log P d_j log P at spec.theta,
/// with central finite differences of log P (step 1e-5).
Eigen::MatrixXd fisher_metric(const EFamilySpec& spec);

/// Hessian of psi by central finite differences; cross-check for the metric.
Eigen::MatrixXd psi_hessian(const EFamilySpec& spec, double step = 1e-4);

}  // namespace markovgeo
