#pragma once

#include <cstdint>
#include <random>

#include "markovgeo/kernel.hpp"
#include "markovgeo/perron.hpp"

namespace markovgeo {

using Rng = std::mt19937_64;

/// Uniform double in [0,1) built from raw engine output, so streams are
/// identical across standard library implementations.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

Distribution random_distribution(int size, Rng& rng);

/// Full-support kernel with rows drawn from uniform(0.05, 1) and normalized.
Kernel random_kernel(int size, Rng& rng);

/// Symmetric stochastic kernel via symmetric Sinkhorn balancing of a random
/// positive symmetric matrix.
Kernel random_symmetric_kernel(int size, Rng& rng);

/// Doubly stochastic kernel via alternating row/column normalization.
Kernel random_bistochastic_kernel(int size, Rng& rng);

/// Reversible kernel from a random symmetric edge measure on the support.
Kernel random_reversible_kernel(const EdgeSet& support, Rng& rng);
Kernel random_reversible_kernel(int size, Rng& rng);

/// Memoryless kernel 1^T pi for a random positive pi.
Kernel random_memoryless_kernel(int size, Rng& rng);

/// exp(symmetric + f(x') - f(x) + c): a random reversible positive function
/// with full support.
PositiveEdgeFunction random_reversible_function(int size, Rng& rng);

}  // namespace markovgeo
