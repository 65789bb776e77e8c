#include "markovgeo/errors.hpp"

namespace markovgeo {

const char* errc_name(errc code) {
  switch (code) {
    case errc::invalid_size: return "InvalidSize";
    case errc::not_stochastic: return "NotStochastic";
    case errc::not_irreducible: return "NotIrreducible";
    case errc::support_mismatch: return "SupportMismatch";
    case errc::degenerate_marginal: return "DegenerateMarginal";
    case errc::unbalanced_marginals: return "UnbalancedMarginals";
    case errc::not_symmetric: return "NotSymmetric";
    case errc::not_reversible: return "NotReversible";
    case errc::asymmetric_support: return "AsymmetricSupport";
    case errc::infeasible_coords: return "InfeasibleCoords";
    case errc::too_large: return "TooLarge";
    case errc::intersection_not_connected: return "IntersectionNotConnected";
    case errc::dependent_generators: return "DependentGenerators";
    case errc::convergence_failure: return "ConvergenceFailure";
    case errc::numerical_failure: return "NumericalFailure";
    case errc::usage_error: return "UsageError";
    case errc::io_error: return "IoError";
  }
  return "UnknownError";
}

bool errc_is_numerical(errc code) {
  return code == errc::convergence_failure || code == errc::numerical_failure;
}

}  // namespace markovgeo
