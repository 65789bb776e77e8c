#pragma once

#include <string>

#include "json.hpp"
#include "markovgeo/info_geometry.hpp"
#include "markovgeo/kernel.hpp"

namespace markovgeo {

using Json = nlohmann::ordered_json;

/// Serialize with doubles at 17 significant digits, so emitted values
/// round-trip exactly and output is byte-identical across platforms.
std::string dump_json(const Json& value);

Json matrix_to_json(const Eigen::MatrixXd& matrix);
Json vector_to_json(const Eigen::VectorXd& vector);
Json support_to_json(const EdgeSet& support);  // 1-based pairs

/// {"size": m, "matrix": [[...]], "support": [[x,x'],...]}.
Json kernel_to_json(const Kernel& kernel);
Json edge_measure_to_json(const EdgeMeasure& measure);

/// Accepts the kernel file schema; "support" is optional and 1-based.
Kernel kernel_from_json(const Json& value);

Kernel load_kernel(const std::string& path);

/// Coordinate maps serialize as {"(i,j)": value} with 1-based indices.
Json natural_coords_to_json(const NaturalCoords& coords);
Json expectation_coords_to_json(const ExpectationCoords& coords);

}  // namespace markovgeo
