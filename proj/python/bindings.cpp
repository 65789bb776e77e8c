#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "markovgeo/errors.hpp"
#include "markovgeo/families.hpp"
#include "markovgeo/info_geometry.hpp"
#include "markovgeo/projections.hpp"
#include "markovgeo/reversibility.hpp"
#include "markovgeo/sampling.hpp"

namespace py = pybind11;
using namespace markovgeo;

namespace {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using IndexPair = std::pair<int, int>;
using CoordMap = std::map<IndexPair, double>;

EdgeSet edge_set_from(int size, const std::optional<std::vector<IndexPair>>& edges) {
  if (!edges) return EdgeSet::full(size);
  return EdgeSet(size, *edges);
}

Kernel kernel_from(const Matrix& matrix) { return validate_kernel(matrix); }

EFamilySpec spec_from(const Matrix& carrier, const std::vector<Matrix>& generators,
                      const Vector& theta,
                      const std::optional<std::vector<IndexPair>>& support) {
  const int m = static_cast<int>(carrier.rows());
  EdgeSet edges = edge_set_from(m, support);
  std::vector<EdgeFunction> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) gens.push_back(make_edge_function(g, edges));
  return make_efamily_spec(make_edge_function(carrier, edges), std::move(gens),
                           theta);
}

CoordMap coords_to_map(const std::vector<double>& values, const EdgeSet& support) {
  CoordMap out;
  auto pairs = support.coordinate_pairs();
  for (std::size_t k = 0; k < pairs.size(); ++k) out[pairs[k]] = values[k];
  return out;
}

std::vector<double> map_to_values(const CoordMap& coords, const EdgeSet& support) {
  auto pairs = support.coordinate_pairs();
  if (coords.size() != pairs.size()) {
    fail(errc::invalid_size, "coordinate map does not match T(E)");
  }
  std::vector<double> values;
  values.reserve(pairs.size());
  for (auto [i, j] : pairs) {
    auto it = coords.find({i, j});
    if (it == coords.end()) {
      fail(errc::invalid_size, "missing coordinate (" + std::to_string(i) + "," +
                                   std::to_string(j) + ")");
    }
    values.push_back(it->second);
  }
  return values;
}

}  // namespace

PYBIND11_MODULE(markovgeo, m) {
  m.doc() =
      "Information geometry of finite irreducible Markov kernels: "
      "reversibility tests, projections, charts, geodesics and hull "
      "experiments. Matrices are dense numpy arrays; states are 0-based.";

  static py::exception<error> exc(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const error& e) {
      py::set_error(
          exc, (std::string(errc_name(e.code())) + ": " + e.what()).c_str());
    }
  });

  m.def(
      "validate",
      [](const Matrix& p) { return kernel_from(p).matrix; },
      py::arg("matrix"),
      "Validate a kernel: clamps float noise, renormalizes rows, checks "
      "irreducibility. Returns the cleaned matrix.");

  m.def(
      "stationary_distribution",
      [](const Matrix& p) { return Vector(stationary_distribution(kernel_from(p))); },
      py::arg("kernel"));

  m.def(
      "time_reversal",
      [](const Matrix& p) { return time_reversal(kernel_from(p)).matrix; },
      py::arg("kernel"));

  m.def(
      "edge_measure",
      [](const Matrix& p) { return edge_measure(kernel_from(p)).matrix; },
      py::arg("kernel"));

  m.def(
      "kernel_from_edge_measure",
      [](const Matrix& q) {
        return kernel_from_edge_measure(validate_edge_measure(q)).matrix;
      },
      py::arg("measure"));

  m.def(
      "is_reversible",
      [](const Matrix& p, const std::string& method, double tol) {
        Kernel k = kernel_from(p);
        if (method == "balance") return is_reversible_balance(k, tol);
        if (method == "pf") return is_reversible_pf(as_positive_function(k), tol);
        if (method == "kolmogorov")
          return kolmogorov_cycle_check(as_positive_function(k), tol);
        fail(errc::usage_error, "method must be balance, pf or kolmogorov");
      },
      py::arg("kernel"), py::arg("method") = "balance", py::arg("tol") = 1e-9);

  m.def(
      "balance_residual",
      [](const Matrix& p) { return balance_residual(kernel_from(p)); },
      py::arg("kernel"));

  m.def(
      "stochastic_rescale",
      [](const Matrix& h) {
        return stochastic_rescale(make_positive_function(h)).matrix;
      },
      py::arg("function"),
      "The map s: rescale a positive irreducible matrix into a kernel.");

  m.def(
      "pf_data",
      [](const Matrix& h) {
        PFData pf = pf_data(make_positive_function(h));
        return py::make_tuple(pf.rho, Vector(pf.left), Vector(pf.right),
                              Matrix(pf.projection));
      },
      py::arg("function"),
      "Returns (rho, left, right, projection) with left . right = 1.");

  m.def(
      "kl_divergence",
      [](const Matrix& p1, const Matrix& p2) {
        DivergenceValue d = kl_divergence(kernel_from(p1), kernel_from(p2));
        return d.infinite ? std::numeric_limits<double>::infinity() : d.value;
      },
      py::arg("p1"), py::arg("p2"));

  m.def(
      "m_projection",
      [](const Matrix& p) { return m_projection(kernel_from(p)).matrix; },
      py::arg("kernel"));

  m.def(
      "e_projection",
      [](const Matrix& p) { return e_projection(kernel_from(p)).matrix; },
      py::arg("kernel"));

  m.def(
      "pythagorean_residual",
      [](const Matrix& p, const Matrix& pbar, const std::string& mode) {
        if (mode != "m" && mode != "e")
          fail(errc::usage_error, "mode must be 'm' or 'e'");
        return pythagorean_residual(
            kernel_from(p), kernel_from(pbar),
            mode == "m" ? ProjectionMode::m : ProjectionMode::e);
      },
      py::arg("kernel"), py::arg("pbar"), py::arg("mode"));

  m.def(
      "bisection_check",
      [](const Matrix& p) { return bisection_check(kernel_from(p)); },
      py::arg("kernel"));

  m.def(
      "tilt",
      [](const Matrix& p, const Matrix& g, double theta) {
        return tilt(kernel_from(p), g, theta).matrix;
      },
      py::arg("kernel"), py::arg("generator"), py::arg("theta"));

  m.def(
      "e_geodesic",
      [](const Matrix& p0, const Matrix& p1, double t) {
        return e_geodesic(kernel_from(p0), kernel_from(p1), t).matrix;
      },
      py::arg("p0"), py::arg("p1"), py::arg("t"));

  m.def(
      "m_geodesic",
      [](const Matrix& p0, const Matrix& p1, double t) {
        return m_geodesic(kernel_from(p0), kernel_from(p1), t).matrix;
      },
      py::arg("p0"), py::arg("p1"), py::arg("t"));

  m.def(
      "natural_coords",
      [](const Matrix& p) {
        NaturalCoords coords = natural_coords(kernel_from(p));
        return coords_to_map(coords.theta, coords.support);
      },
      py::arg("kernel"),
      "Natural parameters keyed by 0-based (i,j) pairs of T(E).");

  m.def(
      "kernel_from_natural",
      [](int size, const CoordMap& coords,
         const std::optional<std::vector<IndexPair>>& support) {
        EdgeSet edges = edge_set_from(size, support);
        return kernel_from_natural({map_to_values(coords, edges), edges}).matrix;
      },
      py::arg("size"), py::arg("coords"), py::arg("support") = std::nullopt);

  m.def(
      "expectation_coords",
      [](const Matrix& p) {
        ExpectationCoords coords = expectation_coords(kernel_from(p));
        return coords_to_map(coords.eta, coords.support);
      },
      py::arg("kernel"));

  m.def(
      "kernel_from_expectation",
      [](int size, const CoordMap& coords,
         const std::optional<std::vector<IndexPair>>& support) {
        EdgeSet edges = edge_set_from(size, support);
        return kernel_from_expectation({map_to_values(coords, edges), edges})
            .matrix;
      },
      py::arg("size"), py::arg("coords"), py::arg("support") = std::nullopt);

  m.def(
      "reversible_dimension",
      [](int size, const std::optional<std::vector<IndexPair>>& support) {
        return reversible_dimension(edge_set_from(size, support));
      },
      py::arg("size"), py::arg("support") = std::nullopt);

  m.def(
      "fisher_metric",
      [](const Matrix& carrier, const std::vector<Matrix>& generators,
         const Vector& theta, const std::optional<std::vector<IndexPair>>& support) {
        return Matrix(fisher_metric(spec_from(carrier, generators, theta, support)));
      },
      py::arg("carrier"), py::arg("generators"), py::arg("theta"),
      py::arg("support") = std::nullopt);

  m.def(
      "psi_hessian",
      [](const Matrix& carrier, const std::vector<Matrix>& generators,
         const Vector& theta, const std::optional<std::vector<IndexPair>>& support,
         double step) {
        return Matrix(
            psi_hessian(spec_from(carrier, generators, theta, support), step));
      },
      py::arg("carrier"), py::arg("generators"), py::arg("theta"),
      py::arg("support") = std::nullopt, py::arg("step") = 1e-4);

  m.def(
      "family_membership",
      [](const Matrix& p, const std::string& family, double tol) {
        FamilyTag tag;
        if (family == "reversible") tag = FamilyTag::reversible;
        else if (family == "symmetric") tag = FamilyTag::symmetric;
        else if (family == "bistochastic") tag = FamilyTag::bistochastic;
        else if (family == "memoryless") tag = FamilyTag::memoryless;
        else fail(errc::usage_error, "unknown family " + family);
        return family_membership(kernel_from(p), tag, tol);
      },
      py::arg("kernel"), py::arg("family"), py::arg("tol") = 1e-9);

  m.def(
      "flatten_reversible",
      [](const Matrix& q) {
        return Vector(flatten_reversible(validate_edge_measure(q)));
      },
      py::arg("measure"));

  m.def(
      "unflatten_reversible",
      [](const Vector& point, int size) {
        return unflatten_reversible(point, size).matrix;
      },
      py::arg("point"), py::arg("size"));

  m.def("counterexample_edge_measures", [] {
    auto [q0, q1, midpoint] = counterexample_edge_measures();
    return py::make_tuple(Matrix(q0.matrix), Matrix(q1.matrix), midpoint);
  });

  m.def(
      "marginal_imbalance", [](const Matrix& q) { return marginal_imbalance(q); },
      py::arg("pair_matrix"));

  m.def("ehull_rank_experiment", &ehull_rank_experiment, py::arg("size"),
        py::arg("samples"), py::arg("seed"));
  m.def("ehull_generator_recovery_error", &ehull_generator_recovery_error,
        py::arg("size"), py::arg("t") = 0.25);
  m.def("mhull_basis_experiment", &mhull_basis_experiment, py::arg("size"),
        py::arg("epsilon"));
  m.def("mhull_basis_rank", &mhull_basis_rank, py::arg("size"), py::arg("epsilon"));

  m.def(
      "iid_family_coordinates",
      [](const Matrix& p) {
        auto [first, second] = iid_family_coordinates(kernel_from(p));
        return py::make_tuple(Vector(first), Matrix(second));
      },
      py::arg("kernel"));

  m.def(
      "lazy_cycle_kernel",
      [](int size, double theta1, double theta2) {
        return lazy_cycle_kernel(size, theta1, theta2).matrix;
      },
      py::arg("size"), py::arg("theta1"), py::arg("theta2"));

  m.def(
      "random_reversible_kernel",
      [](int size, std::uint64_t seed) {
        Rng rng(seed);
        return random_reversible_kernel(size, rng).matrix;
      },
      py::arg("size"), py::arg("seed"));
}
