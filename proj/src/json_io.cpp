#include "markovgeo/json_io.hpp"

#include <cstdio>
#include <fstream>

#include "markovgeo/errors.hpp"

namespace markovgeo {

namespace {

void append_escaped(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

void append_value(std::string& out, const Json& value) {
  switch (value.type()) {
    case nlohmann::detail::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = value.begin(); it != value.end(); ++it) {
        if (!first) out += ',';
        first = false;
        append_escaped(out, it.key());
        out += ':';
        append_value(out, it.value());
      }
      out += '}';
      break;
    }
    case nlohmann::detail::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& item : value) {
        if (!first) out += ',';
        first = false;
        append_value(out, item);
      }
      out += ']';
      break;
    }
    case nlohmann::detail::value_t::string:
      append_escaped(out, value.get_ref<const std::string&>());
      break;
    case nlohmann::detail::value_t::boolean:
      out += value.get<bool>() ? "true" : "false";
      break;
    case nlohmann::detail::value_t::number_integer:
      out += std::to_string(value.get<std::int64_t>());
      break;
    case nlohmann::detail::value_t::number_unsigned:
      out += std::to_string(value.get<std::uint64_t>());
      break;
    case nlohmann::detail::value_t::number_float: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", value.get<double>());
      out += buf;
      break;
    }
    default:
      out += "null";
  }
}

std::string pair_key(int i, int j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

std::string dump_json(const Json& value) {
  std::string out;
  append_value(out, value);
  return out;
}

Json matrix_to_json(const Eigen::MatrixXd& matrix) {
  Json rows = Json::array();
  for (Eigen::Index x = 0; x < matrix.rows(); ++x) {
    Json row = Json::array();
    for (Eigen::Index xp = 0; xp < matrix.cols(); ++xp)
      row.push_back(matrix(x, xp));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json vector_to_json(const Eigen::VectorXd& vector) {
  Json out = Json::array();
  for (Eigen::Index x = 0; x < vector.size(); ++x) out.push_back(vector(x));
  return out;
}

Json support_to_json(const EdgeSet& support) {
  Json out = Json::array();
  for (auto [x, xp] : support.edges())
    out.push_back(Json::array({x + 1, xp + 1}));
  return out;
}

Json kernel_to_json(const Kernel& kernel) {
  Json out;
  out["size"] = kernel.size();
  out["matrix"] = matrix_to_json(kernel.matrix);
  out["support"] = support_to_json(kernel.support);
  return out;
}

Json edge_measure_to_json(const EdgeMeasure& measure) {
  Json out;
  out["size"] = measure.size();
  out["matrix"] = matrix_to_json(measure.matrix);
  out["support"] = support_to_json(measure.support);
  return out;
}

Kernel kernel_from_json(const Json& value) {
  if (!value.is_object() || !value.contains("size") || !value.contains("matrix")) {
    fail(errc::io_error, "kernel file needs \"size\" and \"matrix\"");
  }
  const int m = value.at("size").get<int>();
  const auto& rows = value.at("matrix");
  if (!rows.is_array() || static_cast<int>(rows.size()) != m) {
    fail(errc::io_error, "matrix row count does not match size");
  }
  Eigen::MatrixXd matrix(m, m);
  for (int x = 0; x < m; ++x) {
    const auto& row = rows.at(x);
    if (!row.is_array() || static_cast<int>(row.size()) != m) {
      fail(errc::io_error, "matrix is not square");
    }
    for (int xp = 0; xp < m; ++xp) matrix(x, xp) = row.at(xp).get<double>();
  }
  std::optional<EdgeSet> support;
  if (value.contains("support")) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : value.at("support")) {
      if (!e.is_array() || e.size() != 2) {
        fail(errc::io_error, "support entries must be [x,x'] pairs");
      }
      edges.emplace_back(e.at(0).get<int>() - 1, e.at(1).get<int>() - 1);
    }
    support.emplace(m, edges);
  }
  return validate_kernel(std::move(matrix), std::move(support));
}

Kernel load_kernel(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::io_error, "cannot open " + path);
  Json value = Json::parse(in, nullptr, false);
  if (value.is_discarded()) fail(errc::io_error, "invalid JSON in " + path);
  return kernel_from_json(value);
}

Json natural_coords_to_json(const NaturalCoords& coords) {
  Json map = Json::object();
  auto pairs = coords.support.coordinate_pairs();
  for (std::size_t k = 0; k < pairs.size(); ++k)
    map[pair_key(pairs[k].first, pairs[k].second)] = coords.theta[k];
  Json out;
  out["chart"] = "natural";
  out["size"] = coords.support.size();
  out["support"] = support_to_json(coords.support);
  out["coords"] = std::move(map);
  return out;
}

Json expectation_coords_to_json(const ExpectationCoords& coords) {
  Json map = Json::object();
  auto pairs = coords.support.coordinate_pairs();
  for (std::size_t k = 0; k < pairs.size(); ++k)
    map[pair_key(pairs[k].first, pairs[k].second)] = coords.eta[k];
  Json out;
  out["chart"] = "expectation";
  out["size"] = coords.support.size();
  out["support"] = support_to_json(coords.support);
  out["coords"] = std::move(map);
  return out;
}

}  // namespace markovgeo
