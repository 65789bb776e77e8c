#pragma once

#include <Eigen/Dense>

namespace markovgeo {

/// Singular values below rel_tol times the largest count as zero.
inline int numerical_rank(const Eigen::MatrixXd& a, double rel_tol = 1e-8) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) <= 0.0) return 0;
  int rank = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > rel_tol * s(0)) ++rank;
  return rank;
}

}  // namespace markovgeo
