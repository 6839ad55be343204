#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "fss/error.hpp"
#include "fss/membership.hpp"
#include "fss/softset.hpp"

namespace fss {

/// One linguistic label of a variable, e.g. AGE/O ("Old").
struct Partition {
  std::string label;        // short code used in parameter names
  std::string description;  // human-readable name, may be empty
  MembershipFunction mf;
};

/// A clinical variable and its fuzzy partition.
struct VariableSpec {
  std::string name;    // AGE, BMI, ...
  std::string column;  // source-data column
  std::vector<Partition> partitions;
  std::optional<std::pair<double, double>> plot_range;

  /// Parameter label of partition i, e.g. "(AGE)_O".
  std::string parameter(std::size_t i) const { return "(" + name + ")_" + partitions[i].label; }

  std::vector<std::string> parameters() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < partitions.size(); ++i) out.push_back(parameter(i));
    return out;
  }

  std::pair<double, double> sampling_range() const {
    if (plot_range) return *plot_range;
    double lo = partitions.front().mf.nodes().front().x;
    double hi = partitions.front().mf.nodes().back().x;
    for (const auto& p : partitions) {
      lo = std::min(lo, p.mf.nodes().front().x);
      hi = std::max(hi, p.mf.nodes().back().x);
    }
    const double span = hi - lo;
    return {std::min(0.0, lo), hi + (span > 0 ? 0.25 * span : 1.0)};
  }
};

inline void validate(const VariableSpec& spec) {
  if (spec.name.empty()) throw ConfigError("variable spec without a name");
  if (spec.partitions.empty()) throw ConfigError("variable '" + spec.name + "' has no partitions");
  std::unordered_set<std::string_view> seen;
  for (const auto& p : spec.partitions) {
    if (p.label.empty()) throw ConfigError("variable '" + spec.name + "' has a partition without a label");
    if (!seen.insert(p.label).second)
      throw ConfigError("variable '" + spec.name + "' has duplicate partition label '" + p.label + "'");
  }
  if (spec.plot_range && !(spec.plot_range->first < spec.plot_range->second))
    throw ConfigError("variable '" + spec.name + "' has an empty plot range");
}

enum class Label { healthy_control, patient };

inline std::string_view to_string(Label l) { return l == Label::healthy_control ? "healthy-control" : "patient"; }

struct PatientRecord {
  std::string id;
  std::map<std::string, double> measurements;
  std::optional<Label> label;
};

/// The five partitions of age, BMI, insulin, leptin and adiponectin (17 labels).
///
/// Age "Child" is the continuous reading (5,1)-(15,0) of a printed branch that
/// would otherwise jump from 1 to 2/3 at x = 5.
inline std::vector<VariableSpec> default_variable_specs() {
  auto pw = [](std::vector<Node> nodes, double left, double right) { return make_piecewise(std::move(nodes), left, right); };
  std::vector<VariableSpec> specs;
  specs.push_back({"AGE",
                   "Age",
                   {{"C", "Child", pw({{5, 1}, {15, 0}}, 1, 0)},
                    {"Y", "Young", pw({{10, 0}, {25, 1}, {40, 0}}, 0, 0)},
                    {"M", "Mild", pw({{30, 0}, {45, 1}, {60, 0}}, 0, 0)},
                    {"O", "Old", pw({{50, 0}, {65, 1}}, 0, 1)}},
                   std::pair{0.0, 100.0}});
  specs.push_back({"BMI",
                   "BMI",
                   {{"OI", "Obesity Class I", pw({{2, 1}, {22, 0}}, 1, 0)},
                    {"OII", "Obesity Class II", pw({{20, 0}, {26, 1}, {33, 0}}, 0, 0)},
                    {"OIII", "Obesity Class III", pw({{30, 0}, {35, 1}}, 0, 1)}},
                   std::pair{0.0, 50.0}});
  specs.push_back({"INS",
                   "Insulin",
                   {{"L", "Hypoglycemia", pw({{0, 1}, {5, 0}}, 1, 0)},
                    {"M", "Normal", pw({{3, 0}, {6.5, 1}, {10, 0}}, 0, 0)},
                    {"H", "Hyperinsulinemia", pw({{8, 0}, {10, 1}}, 0, 1)}},
                   std::pair{0.0, 60.0}});
  specs.push_back({"LPN",
                   "Leptin",
                   {{"L", "Low-Leptin", pw({{5, 1}, {20, 0}}, 1, 0)},
                    {"M", "Medium-Leptin", pw({{15, 0}, {30, 1}, {45, 0}}, 0, 0)},
                    {"H", "High-Leptin", pw({{40, 0}, {55, 1}, {70, 0}}, 0, 0)},
                    {"VH", "Very High-Leptin", pw({{65, 0}, {75, 1}}, 0, 1)}},
                   std::pair{0.0, 100.0}});
  specs.push_back({"ADP",
                   "Adiponectin",
                   {{"L", "Low-Adiponectin", pw({{3, 1}, {10, 0}}, 1, 0)},
                    {"M", "Medium-Adiponectin", pw({{7, 0}, {15, 1}, {23, 0}}, 0, 0)},
                    {"H", "High-Adiponectin", pw({{20, 0}, {25, 1}}, 0, 1)}},
                   std::pair{0.0, 40.0}});
  return specs;
}

/// Degree per partition label, in partition order.
inline std::vector<std::pair<std::string, double>> fuzzify_value(const VariableSpec& spec, double x) {
  if (!std::isfinite(x)) throw InputError("cannot fuzzify non-finite value for variable '" + spec.name + "'");
  std::vector<std::pair<std::string, double>> out;
  out.reserve(spec.partitions.size());
  for (const auto& p : spec.partitions) out.emplace_back(p.label, p.mf(x));
  return out;
}

using WarningSink = std::function<void(const std::string&)>;

inline void warn_to_stderr(const std::string& msg) { std::cerr << "warning: " << msg << '\n'; }

/// One fuzzy soft set per spec; rows follow record order.
inline std::vector<FuzzySoftSet> fuzzify_cohort(std::span<const PatientRecord> records, std::span<const VariableSpec> specs,
                                                const WarningSink& warn = warn_to_stderr) {
  std::vector<FuzzySoftSet> out;
  out.reserve(specs.size());
  std::vector<std::string> universe;
  for (const auto& r : records) universe.push_back(r.id);
  for (const auto& spec : specs) {
    std::vector<double> degrees;
    degrees.reserve(records.size() * spec.partitions.size());
    for (const auto& r : records) {
      const auto it = r.measurements.find(spec.column);
      if (it == r.measurements.end())
        throw DataError("record '" + r.id + "' has no column '" + spec.column + "'");
      if (!std::isfinite(it->second))
        throw DataError("record '" + r.id + "', column '" + spec.column + "': value is not finite");
      bool any = false;
      for (const auto& [label, d] : fuzzify_value(spec, it->second)) {
        degrees.push_back(d);
        any = any || d > 0.0;
      }
      if (!any && warn)
        warn("record '" + r.id + "': " + spec.column + " = " + detail::format_exact(it->second) +
             " lies outside every partition of " + spec.name);
    }
    out.emplace_back(universe, spec.parameters(), std::move(degrees));
  }
  return out;
}

struct ErrataEntry {
  std::string object;
  std::string parameter;
  double printed = 0.0;
  double computed = 0.0;
  double delta = 0.0;  // |computed - printed|
};

/// Absolute slack added to every "within tolerance" test so that a printed
/// 0.80 vs a computed 0.79 counts as within 0.01 despite binary rounding.
inline constexpr double tolerance_slack = 1e-9;

/// Cells where |computed - printed| > tolerance, largest delta first.
inline std::vector<ErrataEntry> errata_report(const FuzzySoftSet& computed, const FuzzySoftSet& printed, double tolerance) {
  if (computed.universe() != printed.universe() || computed.parameters() != printed.parameters())
    throw DataError("errata_report requires identical universes and parameters");
  std::vector<ErrataEntry> out;
  for (std::size_t o = 0; o < computed.object_count(); ++o)
    for (std::size_t p = 0; p < computed.parameter_count(); ++p) {
      const double c = computed.at(o, p);
      const double d = printed.at(o, p);
      const double delta = std::abs(c - d);
      if (delta > tolerance + tolerance_slack)
        out.push_back({computed.universe()[o], computed.parameters()[p], d, c, delta});
    }
  std::stable_sort(out.begin(), out.end(), [](const ErrataEntry& a, const ErrataEntry& b) { return a.delta > b.delta; });
  return out;
}

inline std::string errata_to_csv(std::span<const ErrataEntry> entries, std::string_view table = {}) {
  std::string out = table.empty() ? "object,parameter,printed,computed,delta\n" : "table,object,parameter,printed,computed,delta\n";
  for (const auto& e : entries) {
    if (!table.empty()) {
      out += detail::csv_escape(table);
      out += ',';
    }
    out += detail::csv_escape(e.object) + ',' + detail::csv_escape(e.parameter) + ',' + detail::format_fixed(e.printed, 2) +
           ',' + detail::format_fixed(e.computed, 6) + ',' + detail::format_fixed(e.delta, 6) + '\n';
  }
  return out;
}

}  // namespace fss
