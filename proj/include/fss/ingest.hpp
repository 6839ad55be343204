#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "fss/detail/text.hpp"
#include "fss/error.hpp"
#include "fss/variables.hpp"

namespace fss {

/// Canonical measurement columns used by the default variable specs.
inline const std::vector<std::string>& canonical_measurements() {
  static const std::vector<std::string> names{"Age", "BMI", "Insulin", "Leptin", "Adiponectin"};
  return names;
}

struct DatasetSchema {
  /// Canonical name (Age, BMI, Insulin, Leptin, Adiponectin, Classification)
  /// to source header name.
  std::map<std::string, std::string> column_map;
  /// Source label value to class.
  std::map<std::string, Label> label_encoding;
  /// When set, object ids come from this column instead of row position.
  std::optional<std::string> id_column;

  /// UCI Coimbra layout: 1 = healthy control, 2 = patient.
  static DatasetSchema coimbra() {
    DatasetSchema s;
    for (const auto& name : canonical_measurements()) s.column_map[name] = name;
    s.column_map["Classification"] = "Classification";
    s.label_encoding = {{"1", Label::healthy_control}, {"2", Label::patient}};
    return s;
  }

  void validate() const {
    for (const auto& name : canonical_measurements())
      if (!column_map.contains(name)) throw ConfigError("dataset schema does not map column '" + name + "'");
    if (!column_map.contains("Classification")) throw ConfigError("dataset schema does not map column 'Classification'");
    if (label_encoding.empty()) throw ConfigError("dataset schema has no label encoding");
  }
};

/// Object id for a 1-based row position.
inline std::string object_id(std::size_t position) { return "μ_" + std::to_string(position); }

/// Parses CSV text; one record per data row, ids by row position unless the
/// schema names an id column. `source` only labels error messages.
inline std::vector<PatientRecord> parse_csv(std::string_view text, const DatasetSchema& schema,
                                            std::string_view source = "<input>") {
  schema.validate();
  const auto lines = detail::split_lines(text);
  std::size_t first = 0;
  while (first < lines.size() && detail::trim(lines[first]).empty()) ++first;
  if (first == lines.size()) throw DataError(std::string(source) + ": missing header row");

  auto header = detail::split_csv_line(lines[first], first + 1);
  if (!header.empty() && header[0].starts_with("\xEF\xBB\xBF")) header[0].erase(0, 3);
  auto find_col = [&](const std::string& name) -> std::size_t {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (detail::trim(header[i]) == name) return i;
    throw DataError(std::string(source) + ": header has no column '" + name + "'");
  };
  std::vector<std::pair<std::string, std::size_t>> measure_cols;
  for (const auto& name : canonical_measurements()) measure_cols.emplace_back(name, find_col(schema.column_map.at(name)));
  const std::size_t label_col = find_col(schema.column_map.at("Classification"));
  const std::optional<std::size_t> id_col =
      schema.id_column ? std::optional<std::size_t>(find_col(*schema.id_column)) : std::nullopt;

  std::vector<PatientRecord> records;
  for (std::size_t i = first + 1; i < lines.size(); ++i) {
    if (detail::trim(lines[i]).empty()) continue;
    const std::size_t line_no = i + 1;
    const auto fields = detail::split_csv_line(lines[i], line_no);
    if (fields.size() != header.size())
      throw DataError(std::string(source) + ":" + std::to_string(line_no) + ": expected " + std::to_string(header.size()) +
                      " fields, found " + std::to_string(fields.size()));
    PatientRecord rec;
    rec.id = id_col ? std::string(detail::trim(fields[*id_col])) : object_id(records.size() + 1);
    for (const auto& [name, col] : measure_cols) {
      const auto v = detail::parse_double(fields[col]);
      if (!v || !std::isfinite(*v) || *v < 0)
        throw DataError(std::string(source) + ":" + std::to_string(line_no) + ": column '" + header[col] +
                        "' has invalid value '" + fields[col] + "'");
      rec.measurements[name] = *v;
    }
    const std::string raw_label(detail::trim(fields[label_col]));
    const auto it = schema.label_encoding.find(raw_label);
    if (it == schema.label_encoding.end())
      throw DataError(std::string(source) + ":" + std::to_string(line_no) + ": unknown label value '" + raw_label + "'");
    rec.label = it->second;
    records.push_back(std::move(rec));
  }
  return records;
}

inline std::vector<PatientRecord> load_csv(const std::filesystem::path& path, const DatasetSchema& schema) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open data file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_csv(buf.str(), schema, path.string());
}

/// Sublist by 1-based row positions, in requested order.
inline std::vector<PatientRecord> select_samples(std::span<const PatientRecord> records, std::span<const std::size_t> positions) {
  std::vector<PatientRecord> out;
  for (auto p : positions) {
    if (p == 0 || p > records.size())
      throw DataError("sample index " + std::to_string(p) + " outside 1.." + std::to_string(records.size()));
    out.push_back(records[p - 1]);
  }
  return out;
}

/// Sublist by object id, in requested order.
inline std::vector<PatientRecord> select_samples(std::span<const PatientRecord> records, std::span<const std::string> ids) {
  std::vector<PatientRecord> out;
  for (const auto& id : ids) {
    const auto it = std::find_if(records.begin(), records.end(), [&](const PatientRecord& r) { return r.id == id; });
    if (it == records.end()) throw DataError("unknown sample id '" + id + "'");
    out.push_back(*it);
  }
  return out;
}

/// Row positions of the ten built-in sample patients.
inline const std::vector<std::size_t>& table1_positions() {
  static const std::vector<std::size_t> p{3, 11, 19, 31, 45, 60, 71, 82, 91, 104};
  return p;
}

/// The ten published sample patients with their ground-truth labels.
inline std::vector<PatientRecord> builtin_table1() {
  struct Row {
    std::size_t pos;
    double age, bmi, insulin, leptin, adiponectin;
    Label label;
  };
  static constexpr Row rows[] = {
      {3, 82, 23.12, 4.50, 17.94, 22.43, Label::healthy_control},
      {11, 49, 23.01, 5.66, 35.59, 26.72, Label::healthy_control},
      {19, 64, 34.53, 4.43, 21.21, 5.46, Label::healthy_control},
      {31, 66, 36.21, 15.53, 74.71, 7.54, Label::healthy_control},
      {45, 71, 30.30, 8.34, 56.50, 8.13, Label::healthy_control},
      {60, 62, 22.66, 3.48, 9.86, 11.24, Label::patient},
      {71, 44, 24.74, 58.46, 18.16, 16.10, Label::patient},
      {82, 71, 25.51, 10.40, 19.07, 5.49, Label::patient},
      {91, 82, 31.22, 18.08, 31.65, 9.92, Label::patient},
      {104, 57, 34.84, 12.55, 33.16, 2.36, Label::patient},
  };
  std::vector<PatientRecord> out;
  for (const auto& r : rows)
    out.push_back({object_id(r.pos),
                   {{"Age", r.age}, {"BMI", r.bmi}, {"Insulin", r.insulin}, {"Leptin", r.leptin}, {"Adiponectin", r.adiponectin}},
                   r.label});
  return out;
}

inline std::map<std::string, Label> labels_of(std::span<const PatientRecord> records) {
  std::map<std::string, Label> out;
  for (const auto& r : records)
    if (r.label) out.emplace(r.id, *r.label);
  return out;
}

}  // namespace fss
