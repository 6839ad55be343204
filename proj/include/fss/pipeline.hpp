#pragma once

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "fss/config.hpp"
#include "fss/detail/text.hpp"
#include "fss/error.hpp"
#include "fss/ingest.hpp"
#include "fss/reduction.hpp"
#include "fss/reference_tables.hpp"
#include "fss/scoring.hpp"
#include "fss/softset.hpp"
#include "fss/variables.hpp"

#ifndef FSS_VERSION
#define FSS_VERSION "0.0.0"
#endif

namespace fss {

inline constexpr std::string_view tool_name = "fss";
inline constexpr std::string_view tool_version = FSS_VERSION;

enum class ReductionPolicy { per_variable, off };

inline std::string_view to_string(ReductionPolicy r) { return r == ReductionPolicy::off ? "off" : "per-variable"; }

/// How far run_pipeline goes; each stage includes the outputs of the ones before it.
enum class Stage { fuzzify, reduce, product, score, run };

struct PipelineConfig {
  std::optional<std::filesystem::path> data_path;    // nullopt: built-in sample patients
  std::optional<std::filesystem::path> schema_path;  // nullopt: UCI Coimbra layout
  std::vector<std::size_t> select;                   // 1-based rows; empty keeps all
  std::optional<std::filesystem::path> spec_path;    // nullopt: default partitions
  Combiner combiner = Combiner::max;
  ComparisonMode mode = ComparisonMode::count;
  ReductionPolicy reduction = ReductionPolicy::per_variable;
  double threshold = 0.0;
  std::filesystem::path output_dir = "out";
  int display_decimals = 2;
};

/// Output file name to content, in emission order by name.
using OutputFiles = std::map<std::string, std::string>;

namespace detail {

inline nlohmann::json config_json(const PipelineConfig& cfg, std::string_view data_digest, std::string_view spec_digest) {
  nlohmann::json select = nlohmann::json::array();
  for (auto s : cfg.select) select.push_back(s);
  return nlohmann::json{
      {"data", cfg.data_path ? cfg.data_path->generic_string() : std::string("builtin-table1")},
      {"data_digest", data_digest},
      {"schema", cfg.schema_path ? cfg.schema_path->generic_string() : std::string("coimbra")},
      {"select", select},
      {"spec", cfg.spec_path ? cfg.spec_path->generic_string() : std::string("defaults")},
      {"spec_digest", spec_digest},
      {"combiner", to_string(cfg.combiner)},
      {"mode", to_string(cfg.mode)},
      {"reduction", to_string(cfg.reduction)},
      {"threshold", format_exact(cfg.threshold)},
      {"round", cfg.display_decimals},
  };
}

inline std::string manifest_line(std::string_view hash) {
  return "# " + std::string(tool_name) + " " + std::string(tool_version) + " config=" + std::string(hash) + "\n";
}

// The sample-patient cohort under the default partitions is the only input
// that has published tables to reconcile against.
inline std::string errata_csv(const std::vector<FuzzySoftSet>& sets) {
  const std::vector<std::pair<std::string, FuzzySoftSet>> printed{{"AGE", reference::printed_age()},
                                                                  {"BMI", reference::printed_bmi()},
                                                                  {"INS", reference::printed_insulin()},
                                                                  {"LPN", reference::printed_leptin()},
                                                                  {"ADP", reference::printed_adiponectin()}};
  std::string out = "table,object,parameter,printed,computed,delta\n";
  for (std::size_t i = 0; i < printed.size() && i < sets.size(); ++i) {
    const auto& [name, ref] = printed[i];
    if (sets[i].universe() != ref.universe() || sets[i].parameters() != ref.parameters()) continue;
    const auto csv = errata_to_csv(errata_report(sets[i], ref, 0.01), name);
    out += csv.substr(csv.find('\n') + 1);
  }
  return out;
}

}  // namespace detail

/// Computes every output of `stage` in memory. Throws on any error before a
/// single byte is written.
inline OutputFiles build_outputs(const PipelineConfig& cfg, Stage stage, const WarningSink& warn = warn_to_stderr) {
  if (!std::isfinite(cfg.threshold)) throw ConfigError("threshold must be finite");
  if (cfg.display_decimals < 0 || cfg.display_decimals > 12) throw ConfigError("--round must be between 0 and 12");

  std::string spec_digest = "defaults";
  std::vector<VariableSpec> specs;
  if (cfg.spec_path) {
    const auto text = read_file(*cfg.spec_path);
    spec_digest = detail::hex64(detail::fnv1a(text));
    specs = parse_variable_specs(text);
  } else {
    specs = default_variable_specs();
  }

  std::string data_digest = "builtin";
  std::vector<PatientRecord> records;
  if (cfg.data_path) {
    const auto schema = cfg.schema_path ? parse_schema(read_file(*cfg.schema_path)) : DatasetSchema::coimbra();
    std::ifstream in(*cfg.data_path, std::ios::binary);
    if (!in) throw DataError("cannot open data file '" + cfg.data_path->string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    data_digest = detail::hex64(detail::fnv1a(buf.str()));
    records = parse_csv(buf.str(), schema, cfg.data_path->string());
  } else {
    if (cfg.schema_path) throw ConfigError("--schema applies only to --data files");
    records = builtin_table1();
  }
  if (!cfg.select.empty()) records = select_samples(records, cfg.select);
  if (records.empty()) throw DataError("no records to process");

  const auto config = detail::config_json(cfg, data_digest, spec_digest);
  const auto hash = detail::hex64(detail::fnv1a(config.dump()));
  const auto footer = detail::manifest_line(hash);

  OutputFiles files;
  const auto sets = fuzzify_cohort(records, specs, warn);
  for (std::size_t i = 0; i < sets.size(); ++i) files["fuzzy_" + specs[i].name + ".csv"] = to_table(sets[i], 6);
  files["errata.csv"] = detail::errata_csv(sets);

  std::vector<FuzzySoftSet> chosen = sets;
  if (stage >= Stage::reduce) {
    std::string text = "reduction: " + std::string(to_string(cfg.reduction)) + "\n";
    if (cfg.reduction == ReductionPolicy::per_variable) {
      for (std::size_t i = 0; i < sets.size(); ++i) {
        const auto results = find_reductions(sets[i]);
        if (results.empty()) throw InvariantError("no reduction found for " + specs[i].name);
        text += reductions_to_text(specs[i].name, results);
        text += "  selected [1]\n";
        chosen[i] = restrict(sets[i], results.front().reduct);
        if (optimal_objects(chosen[i]) != optimal_objects(sets[i]))
          throw InvariantError("reduction of " + specs[i].name + " changed the optimal objects");
      }
    }
    files["reduction.txt"] = text;
  }

  if (stage >= Stage::product) {
    const auto result = score_pipeline_full(chosen, cfg.combiner, cfg.mode, cfg.threshold, labels_of(records));
    files["product.csv"] = to_table(result.product, 6);
    if (stage >= Stage::score) {
      double sum = 0.0, scale = 0.0;
      for (double s : result.report.scores) {
        sum += s;
        scale += std::abs(s);
      }
      const double allowed = cfg.mode == ComparisonMode::count ? 0.0 : 1e-9 * std::max(1.0, scale);
      if (std::abs(sum) > allowed) throw InvariantError("scores do not sum to zero");
      files["comparison.csv"] = comparison_to_csv(result.table, 6);
      files["scores.csv"] = report_to_csv(result.report);
      auto text = report_to_text(result.report, cfg.display_decimals);
      text += "product parameters: " + std::to_string(result.product.parameter_count()) + "\n";
      files["scores.txt"] = text;
      if (!cfg.data_path && cfg.select.empty()) {
        // Replays the published comparison table for the built-in cohort.
        auto replay = scores(ComparisonTable::from_counts(reference::sample_ids(), reference::printed_comparison(),
                                                          reference::printed_comparison_parameters));
        attach_predictions(replay, cfg.threshold, labels_of(records));
        files["reference_scores.csv"] = report_to_csv(replay);
        files["reference_scores.txt"] = report_to_text(replay, cfg.display_decimals);
      }
    }
  }

  for (auto& [name, content] : files) content += footer;

  nlohmann::json manifest{{"tool", tool_name}, {"version", tool_version}, {"config", config}, {"config_hash", hash}};
  nlohmann::json listed = nlohmann::json::array();
  for (const auto& [name, content] : files)
    listed.push_back({{"file", name}, {"fnv1a", detail::hex64(detail::fnv1a(content))}});
  manifest["files"] = listed;
  files["manifest.json"] = manifest.dump(2) + "\n";
  return files;
}

/// Writes each file to a temporary sibling, then renames it into place.
inline void write_outputs(const std::filesystem::path& dir, const OutputFiles& files) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create output directory '" + dir.string() + "': " + ec.message());
  std::vector<std::pair<std::filesystem::path, std::filesystem::path>> staged;
  auto discard = [&] {
    for (const auto& [tmp, _] : staged) std::filesystem::remove(tmp, ec);
  };
  for (const auto& [name, content] : files) {
    const auto target = dir / name;
    auto tmp = target;
    tmp += ".tmp";
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (out) out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.close();
    staged.emplace_back(tmp, target);
    if (!out) {
      discard();
      throw ConfigError("cannot write '" + target.string() + "'");
    }
  }
  for (const auto& [tmp, target] : staged) {
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
      discard();
      throw ConfigError("cannot move '" + tmp.string() + "' into place: " + ec.message());
    }
  }
}

inline OutputFiles run_pipeline(const PipelineConfig& cfg, Stage stage = Stage::run, const WarningSink& warn = warn_to_stderr) {
  auto files = build_outputs(cfg, stage, warn);
  write_outputs(cfg.output_dir, files);
  return files;
}

/// One CSV per variable: `x` plus a degree column per partition label.
inline OutputFiles curve_files(const std::vector<VariableSpec>& specs, std::size_t samples_per_curve) {
  if (samples_per_curve < 2) throw InputError("samples per curve must be at least 2");
  OutputFiles files;
  for (const auto& spec : specs) {
    const auto [lo, hi] = spec.sampling_range();
    std::vector<std::vector<CurveSample>> curves;
    for (const auto& p : spec.partitions) curves.push_back(sample_curve(p.mf, lo, hi, samples_per_curve));
    std::string out = "x";
    for (const auto& p : spec.partitions) out += "," + detail::csv_escape(p.label);
    out += '\n';
    for (std::size_t i = 0; i < samples_per_curve; ++i) {
      out += detail::format_fixed(curves.front()[i].x, 6);
      for (const auto& c : curves) out += "," + detail::format_fixed(c[i].degree, 6);
      out += '\n';
    }
    files["curves_" + spec.name + ".csv"] = std::move(out);
  }
  return files;
}

inline OutputFiles emit_curves(const std::vector<VariableSpec>& specs, const std::filesystem::path& out_dir,
                               std::size_t samples_per_curve) {
  auto files = curve_files(specs, samples_per_curve);
  write_outputs(out_dir, files);
  return files;
}

}  // namespace fss
