#pragma once

#include <utility>

#include "markovgeo/kernel.hpp"

namespace markovgeo {

/// KL divergence between kernels; infinite when support(P1) is not
/// contained in support(P2).
struct DivergenceValue {
  double value = 0.0;
  bool infinite = false;

  bool operator<(const DivergenceValue& other) const {
    if (infinite) return false;
    if (other.infinite) return true;
    return value < other.value;
  }
};

enum class ProjectionMode { m, e };

/// D(P1||P2) = sum pi1(x) P1(x,x') log(P1(x,x')/P2(x,x')) over support(P1).
DivergenceValue kl_divergence(const Kernel& p1, const Kernel& p2);

/// Additive reversiblization (P + P*)/2 on E union E*; preserves pi.
Kernel m_projection(const Kernel& kernel);

/// Exponential reversiblization s(sqrt(P o P*)) on E intersect E*.
/// Requires the intersection to be strongly connected.
Kernel e_projection(const Kernel& kernel);

/// Pythagorean defect, mode m: D(P||Pbar) - D(P||Pm) - D(Pm||Pbar);
/// mode e: D(Pbar||P) - D(Pbar||Pe) - D(Pe||P). Pbar must be reversible
/// with a support compatible with the projection.
double pythagorean_residual(const Kernel& kernel, const Kernel& pbar,
                            ProjectionMode mode);

/// (|D(P||Pm) - D(P*||Pm)|, |D(Pe||P) - D(Pe||P*)|).
std::pair<double, double> bisection_check(const Kernel& kernel);

}  // namespace markovgeo
