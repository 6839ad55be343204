// fss: fuzzy-soft-set risk ranking from the command line.
//
//   fss run                       full pipeline on the built-in sample patients
//   fss run --data dataR2.csv     same on a UCI Coimbra style CSV
//   fss verify                    reconcile against the published tables
//
// Exit codes: 0 ok, 1 configuration error, 2 data error, 3 invariant violation.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "fss/fss.hpp"

namespace {

struct Options {
  std::string data = "builtin";
  std::string schema;
  std::string spec;
  std::vector<std::size_t> select;
  std::string combiner = "max";
  std::string mode = "count";
  std::string reduction = "per-variable";
  double threshold = 0.0;
  std::string out = "out";
  int round = 2;
  std::size_t samples = 101;
  bool quiet = false;
};

fss::PipelineConfig to_config(const Options& o) {
  fss::PipelineConfig cfg;
  if (o.data != "builtin") cfg.data_path = o.data;
  if (!o.schema.empty()) cfg.schema_path = o.schema;
  if (!o.spec.empty()) cfg.spec_path = o.spec;
  cfg.select = o.select;
  cfg.combiner = o.combiner == "min" ? fss::Combiner::min : fss::Combiner::max;
  cfg.mode = o.mode == "difference" ? fss::ComparisonMode::difference : fss::ComparisonMode::count;
  cfg.reduction = o.reduction == "off" ? fss::ReductionPolicy::off : fss::ReductionPolicy::per_variable;
  cfg.threshold = o.threshold;
  cfg.output_dir = o.out;
  cfg.display_decimals = o.round;
  return cfg;
}

void add_pipeline_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--data", o.data, "CSV data file, or 'builtin' for the ten sample patients")->capture_default_str();
  cmd->add_option("--schema", o.schema, "JSON dataset schema (column names, label encoding)");
  cmd->add_option("--select", o.select, "1-based data rows to keep, e.g. --select 3 11 19")->delimiter(',');
  cmd->add_option("--spec", o.spec, "JSON variable specs (default: built-in partitions)");
  cmd->add_option("--combiner", o.combiner, "product combiner")->check(CLI::IsMember({"max", "min"}))->capture_default_str();
  cmd->add_option("--mode", o.mode, "comparison table mode")
      ->check(CLI::IsMember({"count", "difference"}))
      ->capture_default_str();
  cmd->add_option("--reduction", o.reduction, "parameter reduction")
      ->check(CLI::IsMember({"per-variable", "off"}))
      ->capture_default_str();
  cmd->add_option("--threshold", o.threshold, "score above which an object is high-risk")->capture_default_str();
  cmd->add_option("--out", o.out, "output directory")->capture_default_str();
  cmd->add_option("--round", o.round, "decimals in aligned text output")->capture_default_str();
  cmd->add_flag("-q,--quiet", o.quiet, "do not print the score table");
}

int run_stage(const Options& o, fss::Stage stage) {
  const auto files = fss::run_pipeline(to_config(o), stage);
  if (!o.quiet) {
    if (const auto it = files.find("scores.txt"); it != files.end()) std::cout << it->second;
    std::cout << "wrote " << files.size() << " files to " << o.out << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fuzzy soft set risk ranking"};
  app.set_version_flag("--version", std::string(fss::tool_version));
  app.require_subcommand(1);
  Options o;

  struct Sub {
    const char* name;
    const char* help;
    fss::Stage stage;
  };
  const Sub stages[] = {
      {"fuzzify", "fuzzify records into per-variable fuzzy soft sets and the errata report", fss::Stage::fuzzify},
      {"reduce", "fuzzify, then list normal parameter reductions per variable", fss::Stage::reduce},
      {"product", "fuzzify, reduce and write the product soft set", fss::Stage::product},
      {"score", "full pipeline through comparison and score tables", fss::Stage::score},
      {"run", "full pipeline with every output and the run manifest", fss::Stage::run},
  };
  fss::Stage chosen = fss::Stage::run;
  for (const auto& s : stages) {
    auto* cmd = app.add_subcommand(s.name, s.help);
    add_pipeline_flags(cmd, o);
    cmd->callback([&chosen, stage = s.stage] { chosen = stage; });
  }

  auto* curves = app.add_subcommand("curves", "sample every membership function to CSV for plotting");
  curves->add_option("--spec", o.spec, "JSON variable specs (default: built-in partitions)");
  curves->add_option("--out", o.out, "output directory")->capture_default_str();
  curves->add_option("--samples", o.samples, "samples per curve")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "check the implementation against the published tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (curves->parsed()) {
      const auto specs = o.spec.empty() ? fss::default_variable_specs() : fss::load_variable_specs(o.spec);
      const auto files = fss::emit_curves(specs, o.out, o.samples);
      std::cout << "wrote " << files.size() << " curve files to " << o.out << "\n";
      return 0;
    }
    if (verify->parsed()) {
      const auto report = fss::verify_fixtures();
      std::cout << fss::verify_to_text(report);
      return report.hard_ok() ? 0 : 3;
    }
    return run_stage(o, chosen);
  } catch (const fss::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const fss::InvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const fss::Error& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 2;
  }
}
