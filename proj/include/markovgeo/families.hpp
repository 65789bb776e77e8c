#pragma once

#include <Eigen/Dense>
#include <tuple>
#include <utility>

#include "markovgeo/kernel.hpp"
#include "markovgeo/sampling.hpp"

namespace markovgeo {

enum class FamilyTag { reversible, symmetric, bistochastic, memoryless };

/// Point of the probability simplex over m(m+1)/2 cells, image of a
/// reversible edge measure under the flattening Markov map.
using SimplexPoint = Eigen::VectorXd;

bool family_membership(const Kernel& kernel, FamilyTag tag, double tol = 1e-9);

/// Diagonal entries followed by doubled off-diagonal entries (i < j,
/// lexicographic). Requires a symmetric edge measure with full support.
SimplexPoint flatten_reversible(const EdgeMeasure& measure);

/// Flattening of an arbitrary symmetric matrix; no positivity requirement.
SimplexPoint flatten_symmetric_matrix(const Eigen::MatrixXd& q);

/// Inverse of the flattening map.
EdgeMeasure unflatten_reversible(const SimplexPoint& point, int size);

/// The two three-state edge measures whose e-geodesic midpoint in P(X^2)
/// has unbalanced marginals, plus that normalized midpoint.
std::tuple<EdgeMeasure, EdgeMeasure, Eigen::MatrixXd>
counterexample_edge_measures();

/// max_x |row marginal - column marginal| of a pair matrix.
double marginal_imbalance(const Eigen::MatrixXd& q);

/// Rank of the span of logs of random symmetric kernels together with the
/// shift space, against the expected (m(m+1)/2 - 1) + m.
std::pair<int, int> ehull_rank_experiment(int size, int samples,
                                          std::uint64_t seed);

/// Worst deviation of (b h_hat - a h_tilde)/(b^2 - a^2) from g_ij over all
/// off-diagonal basis elements, built from the symmetric kernels P_{ij,t}.
double ehull_generator_recovery_error(int size, double t = 0.25);

/// True iff the flattened pair measures of the mixtures
/// (eps/m) 1 + (1-eps)(delta_i + delta_j)/2 have full rank m(m+1)/2.
bool mhull_basis_experiment(int size, double epsilon);
int mhull_basis_rank(int size, double epsilon);

/// Ito-style coordinates of a full-support kernel; the theta_ij block
/// vanishes exactly on memoryless kernels.
std::pair<Eigen::VectorXd, Eigen::MatrixXd> iid_family_coordinates(
    const Kernel& kernel);

/// Biased lazy random walk on the m-cycle: P(x,x) = e^t1/S,
/// P(x,x+1) = e^t2/S, P(x+1,x) = e^-t2/S with S = e^t1 + e^t2 + e^-t2.
Kernel lazy_cycle_kernel(int size, double theta1, double theta2);
EdgeSet lazy_cycle_support(int size);

}  // namespace markovgeo
