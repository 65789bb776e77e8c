#pragma once

#include <stdexcept>
#include <string>

namespace markovgeo {

enum class errc {
  invalid_size,
  not_stochastic,
  not_irreducible,
  support_mismatch,
  degenerate_marginal,
  unbalanced_marginals,
  not_symmetric,
  not_reversible,
  asymmetric_support,
  infeasible_coords,
  too_large,
  intersection_not_connected,
  dependent_generators,
  convergence_failure,
  numerical_failure,
  usage_error,
  io_error,
};

/// Name used in machine-readable error output, e.g. "NotStochastic".
const char* errc_name(errc code);

/// Numerical failures map to a distinct process exit code in the CLI.
bool errc_is_numerical(errc code);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw error(code, message);
}

}  // namespace markovgeo
