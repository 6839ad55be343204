#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fss/error.hpp"
#include "fss/ingest.hpp"
#include "fss/membership.hpp"
#include "fss/variables.hpp"

// JSON forms of variable specs and dataset schemas.
//
// Variable specs: a top-level list of
//   {"name", "column", "partitions": [{"label", "nodes": [[x, y], ...],
//    "left_tail", "right_tail", "description"?}], "range"?: [lo, hi]}
namespace fss {

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline nlohmann::json to_json(const VariableSpec& spec) {
  nlohmann::json parts = nlohmann::json::array();
  for (const auto& p : spec.partitions) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& n : p.mf.nodes()) nodes.push_back({n.x, n.degree});
    nlohmann::json j{{"label", p.label}, {"nodes", nodes}, {"left_tail", p.mf.left_tail()}, {"right_tail", p.mf.right_tail()}};
    if (!p.description.empty()) j["description"] = p.description;
    parts.push_back(std::move(j));
  }
  nlohmann::json j{{"name", spec.name}, {"column", spec.column}, {"partitions", parts}};
  if (spec.plot_range) j["range"] = {spec.plot_range->first, spec.plot_range->second};
  return j;
}

inline std::string specs_to_json(const std::vector<VariableSpec>& specs) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& s : specs) j.push_back(to_json(s));
  return j.dump(2) + "\n";
}

inline std::vector<VariableSpec> parse_variable_specs(std::string_view text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("variable spec JSON: ") + e.what());
  }
  if (!root.is_array() || root.empty()) throw ConfigError("variable spec JSON must be a non-empty list of variables");
  std::vector<VariableSpec> specs;
  try {
    for (const auto& v : root) {
      VariableSpec spec;
      spec.name = v.at("name").get<std::string>();
      spec.column = v.at("column").get<std::string>();
      for (const auto& p : v.at("partitions")) {
        std::vector<Node> nodes;
        for (const auto& n : p.at("nodes")) {
          if (!n.is_array() || n.size() != 2) throw ConfigError("variable '" + spec.name + "': node must be [x, degree]");
          nodes.push_back({n[0].get<double>(), n[1].get<double>()});
        }
        spec.partitions.push_back({p.at("label").get<std::string>(), p.value("description", std::string{}),
                                   make_piecewise(std::move(nodes), p.at("left_tail").get<double>(),
                                                  p.at("right_tail").get<double>())});
      }
      if (v.contains("range")) spec.plot_range = std::pair{v["range"].at(0).get<double>(), v["range"].at(1).get<double>()};
      validate(spec);
      specs.push_back(std::move(spec));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("variable spec JSON: ") + e.what());
  }
  return specs;
}

inline std::vector<VariableSpec> load_variable_specs(const std::filesystem::path& path) {
  return parse_variable_specs(read_file(path));
}

/// {"column_map": {...}, "label_encoding": {"1": "healthy-control", ...}, "id_column"?: "..."}
/// Missing keys fall back to the UCI Coimbra layout.
inline DatasetSchema parse_schema(std::string_view text) {
  DatasetSchema schema = DatasetSchema::coimbra();
  try {
    const auto root = nlohmann::json::parse(text);
    if (root.contains("column_map"))
      for (const auto& [k, v] : root["column_map"].items()) schema.column_map[k] = v.get<std::string>();
    if (root.contains("label_encoding")) {
      schema.label_encoding.clear();
      for (const auto& [k, v] : root["label_encoding"].items()) {
        const auto s = v.get<std::string>();
        if (s == "healthy-control")
          schema.label_encoding[k] = Label::healthy_control;
        else if (s == "patient")
          schema.label_encoding[k] = Label::patient;
        else
          throw ConfigError("schema label '" + s + "' is neither healthy-control nor patient");
      }
    }
    if (root.contains("id_column")) schema.id_column = root["id_column"].get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("schema JSON: ") + e.what());
  }
  schema.validate();
  return schema;
}

}  // namespace fss
