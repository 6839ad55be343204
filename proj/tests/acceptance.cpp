// Acceptance suite: one PASS/FAIL line per criterion.
//
//   fss_acceptance        run every criterion
//   fss_acceptance 7      run criterion 7 only
//
// Exit status is nonzero when any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fss/fss.hpp"
#include "oracles.hpp"

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;
using Cell = std::pair<std::string, std::string>;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double ms_since(Clock::time_point t0) { return std::chrono::duration<double, std::milli>(Clock::now() - t0).count(); }

std::string fmt(double v, int decimals) { return fss::detail::format_fixed(v, decimals); }

const std::vector<fss::FuzzySoftSet>& sample_sets() {
  static const auto sets = fss::fuzzify_cohort(fss::builtin_table1(), fss::default_variable_specs(), nullptr);
  return sets;
}

std::size_t within(const fss::FuzzySoftSet& computed, const fss::FuzzySoftSet& printed) {
  std::size_t n = 0;
  for (std::size_t k = 0; k < computed.degrees().size(); ++k)
    n += std::abs(computed.degrees()[k] - printed.degrees()[k]) <= fss::fixture_tolerance + fss::tolerance_slack;
  return n;
}

// Every divergent cell must be listed once in the errata, carrying the value
// of the closed-form membership expression.
bool errata_complete(const fss::FuzzySoftSet& computed, const fss::FuzzySoftSet& printed,
                     std::vector<double> (*closed_form)(double), const char* column, std::string& why) {
  const auto errata = fss::errata_report(computed, printed, fss::fixture_tolerance);
  const auto records = fss::builtin_table1();
  std::size_t divergent = 0;
  for (std::size_t o = 0; o < computed.object_count(); ++o) {
    const auto want = closed_form(records[o].measurements.at(column));
    for (std::size_t p = 0; p < computed.parameter_count(); ++p) {
      if (std::abs(computed.at(o, p) - printed.at(o, p)) <= fss::fixture_tolerance + fss::tolerance_slack) continue;
      ++divergent;
      const auto it = std::find_if(errata.begin(), errata.end(), [&](const fss::ErrataEntry& e) {
        return e.object == computed.universe()[o] && e.parameter == computed.parameters()[p];
      });
      if (it == errata.end()) {
        why = "missing errata for " + computed.universe()[o] + " " + computed.parameters()[p];
        return false;
      }
      if (std::abs(it->computed - want[p]) > 1e-12) {
        why = "errata value mismatch at " + it->object + " " + it->parameter;
        return false;
      }
    }
  }
  if (divergent != errata.size()) {
    why = "errata lists cells that do not diverge";
    return false;
  }
  return true;
}

Outcome age_fuzzification() {
  const auto records = fss::builtin_table1();
  const std::vector<fss::VariableSpec> age_spec{fss::default_variable_specs()[0]};
  std::vector<double> times;
  fss::FuzzySoftSet computed;
  for (int i = 0; i < 7; ++i) {
    const auto t0 = Clock::now();
    computed = fss::fuzzify_cohort(records, age_spec, nullptr)[0];
    times.push_back(ms_since(t0));
  }
  std::sort(times.begin(), times.end());
  const double median = times[times.size() / 2];
  const auto n = within(computed, fss::reference::printed_age());
  return {n == 40 && median < 1.0, std::to_string(n) + "/40 cells within ±0.01; median runtime " + fmt(median, 4) + " ms (< 1 ms)"};
}

Outcome adiponectin_fuzzification() {
  const auto n = within(sample_sets()[4], fss::reference::printed_adiponectin());
  return {n == 30, std::to_string(n) + "/30 cells within ±0.01"};
}

Outcome insulin_fuzzification() {
  const auto& s = sample_sets()[2];
  const auto n = within(s, fss::reference::printed_insulin());
  std::set<Cell> cells;
  std::string listing;
  for (const auto& e : fss::errata_report(s, fss::reference::printed_insulin(), fss::fixture_tolerance)) {
    cells.emplace(e.object, e.parameter);
    listing += " (" + e.object + ", " + e.parameter + ": " + fmt(e.computed, 3) + " vs " + fmt(e.printed, 2) + ")";
  }
  const std::set<Cell> expected{{"μ_45", "(INS)_H"}, {"μ_60", "(INS)_L"}};
  return {n >= 28 && cells == expected, std::to_string(n) + "/30 cells within ±0.01 (need 28); errata" + listing};
}

Outcome leptin_fuzzification() {
  const auto& s = sample_sets()[3];
  const auto n = within(s, fss::reference::printed_leptin());
  std::string why;
  const bool complete = errata_complete(s, fss::reference::printed_leptin(), fss::testing::closed_form::leptin, "Leptin", why);
  return {n >= 33 && complete, std::to_string(n) + "/40 cells within ±0.01 (need 33); " +
                                   (complete ? "every divergent cell in errata with its equation value" : why)};
}

Outcome bmi_fuzzification() {
  const auto& s = sample_sets()[1];
  const auto n = within(s, fss::reference::printed_bmi());
  std::string why;
  const bool complete = errata_complete(s, fss::reference::printed_bmi(), fss::testing::closed_form::bmi, "BMI", why);
  return {n >= 22 && complete,
          std::to_string(n) + "/30 cells within ±0.01 (need 22); " + (complete ? "divergences enumerated in errata" : why)};
}

Outcome product_fixture() {
  const auto& sets = sample_sets();
  const auto prod = fss::product(sets[0], sets[1], fss::Combiner::max);
  const auto printed = fss::reference::printed_age_bmi_product();
  std::set<Cell> input_errata;
  for (const auto& e : fss::errata_report(sets[0], fss::reference::printed_age(), fss::fixture_tolerance))
    input_errata.emplace(e.object, e.parameter);
  for (const auto& e : fss::errata_report(sets[1], fss::reference::printed_bmi(), fss::fixture_tolerance))
    input_errata.emplace(e.object, e.parameter);

  std::size_t clean_rows_ok = 0, clean_rows = 0, divergent = 0, untraced = 0;
  for (std::size_t o = 0; o < prod.object_count(); ++o) {
    const auto& id = prod.universe()[o];
    bool row_has_errata = false;
    for (const auto& [obj, _] : input_errata) row_has_errata = row_has_errata || obj == id;
    bool row_ok = true;
    for (std::size_t p = 0; p < prod.parameter_count(); ++p) {
      const bool ok = std::abs(prod.at(o, p) - printed.at(o, p)) <= fss::fixture_tolerance + fss::tolerance_slack;
      row_ok = row_ok && ok;
      if (ok) continue;
      ++divergent;
      const auto age = sets[0].parameters()[p / 3];
      const auto bmi = sets[1].parameters()[p % 3];
      if (!input_errata.contains({id, age}) && !input_errata.contains({id, bmi})) ++untraced;
    }
    if (!row_has_errata) {
      ++clean_rows;
      clean_rows_ok += row_ok;
    }
  }
  return {clean_rows_ok == clean_rows && untraced == 0,
          std::to_string(clean_rows_ok) + "/" + std::to_string(clean_rows) + " rows with equation-consistent inputs match all 12 cells; " +
              std::to_string(divergent) + " divergent cells, " + std::to_string(untraced) + " not traceable to age/BMI errata"};
}

Outcome score_exactness() {
  const auto table = fss::ComparisonTable::from_counts(fss::reference::sample_ids(), fss::reference::printed_comparison(),
                                                       fss::reference::printed_comparison_parameters);
  const auto r = fss::scores(table);
  const auto expected = fss::reference::printed_scores();
  std::size_t exact = 0;
  for (std::size_t i = 0; i < expected.size(); ++i)
    exact += r.row_sums[i] == expected[i].row_sum && r.column_sums[i] == expected[i].column_sum && r.scores[i] == expected[i].score;
  const double sum = std::accumulate(r.scores.begin(), r.scores.end(), 0.0);
  return {exact == 10 && sum == 0.0, std::to_string(exact) + "/10 (row, column, score) triples exact, e.g. μ_3 (" +
                                         fmt(r.row_sums[0], 0) + ", " + fmt(r.column_sums[0], 0) + ", " + fmt(r.scores[0], 0) +
                                         "); sum of scores " + fmt(sum, 0)};
}

Outcome accuracy() {
  const auto table = fss::ComparisonTable::from_counts(fss::reference::sample_ids(), fss::reference::printed_comparison(),
                                                       fss::reference::printed_comparison_parameters);
  auto r = fss::scores(table);
  r.predictions = fss::classify(r, 0.0);
  const auto labels = fss::labels_of(fss::builtin_table1());
  const double acc = fss::evaluate(fss::prediction_map(r), labels);
  std::vector<std::string> correct, wrong;
  for (std::size_t i = 0; i < r.universe.size(); ++i)
    (fss::agrees(r.predictions[i], labels.at(r.universe[i])) ? correct : wrong).push_back(r.universe[i]);
  const bool ok = acc == 0.70 && correct == fss::reference::published_correct() && wrong == fss::reference::published_wrong();
  std::string w;
  for (const auto& id : wrong) w += " " + id;
  return {ok, "accuracy " + fmt(acc, 2) + "; " + std::to_string(correct.size()) + " correct; wrong:" + w};
}

Outcome product_to_comparison() {
  const auto computed = fss::comparison_table(fss::reference::printed_product72(), fss::ComparisonMode::count);
  const auto printed = fss::ComparisonTable::from_counts(fss::reference::sample_ids(), fss::reference::printed_comparison(),
                                                         fss::reference::printed_comparison_parameters);
  const auto agreement = fss::compare_tables(computed, printed);
  const bool ok = agreement.diagonal_matched == agreement.diagonal_total &&
                  agreement.off_diagonal_rate() >= fss::comparison_match_threshold;
  std::string detail = "diagonal " + std::to_string(agreement.diagonal_matched) + "/" + std::to_string(agreement.diagonal_total) +
                       " at 72; off-diagonal " + std::to_string(agreement.off_diagonal_matched) + "/" +
                       std::to_string(agreement.off_diagonal_total) + " = " + fmt(100 * agreement.off_diagonal_rate(), 1) +
                       "% (need >= 85%); " + std::to_string(agreement.mismatches.size()) + " mismatches reported:";
  for (const auto& m : agreement.mismatches)
    detail += "\n      (" + m.row + ", " + m.column + ") printed " + fmt(m.printed, 0) + " computed " + fmt(m.computed, 0);
  return {ok, detail};
}

fss::FuzzySoftSet permute_universe(const fss::FuzzySoftSet& s, const std::vector<std::size_t>& perm) {
  std::vector<std::string> ids;
  std::vector<double> d;
  for (auto i : perm) {
    ids.push_back(s.universe()[i]);
    d.insert(d.end(), s.row(i).begin(), s.row(i).end());
  }
  return fss::FuzzySoftSet(ids, s.parameters(), d);
}

fss::FuzzySoftSet with_column(const fss::FuzzySoftSet& s, double value) {
  auto labels = s.parameters();
  labels.push_back("tie");
  std::vector<double> d;
  for (std::size_t o = 0; o < s.object_count(); ++o) {
    d.insert(d.end(), s.row(o).begin(), s.row(o).end());
    d.push_back(value);
  }
  return fss::FuzzySoftSet(s.universe(), labels, d);
}

Outcome property_suite() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::size_t failures = 0;
  std::string first_failure;
  auto check = [&](bool ok, const char* what) {
    if (!ok && failures++ == 0) first_failure = what;
  };
  constexpr int instances = 10000;
  for (int trial = 0; trial < instances; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const std::size_t m = 1 + rng() % 12;
    const auto s = fss::testing::random_set(rng, n, m);
    const auto c = fss::comparison_table(s, fss::ComparisonMode::count);
    const auto r = fss::scores(c);
    const double md = static_cast<double>(m);
    for (std::size_t i = 0; i < n; ++i) {
      check(c.at(i, i) == md, "diagonal equals m");
      for (std::size_t j = 0; j < n; ++j) check(c.at(i, j) + c.at(j, i) >= md, "c_ij + c_ji >= m");
    }
    check(std::accumulate(r.scores.begin(), r.scores.end(), 0.0) == 0.0, "scores sum to 0 (count)");
    const auto rd = fss::scores(fss::comparison_table(s, fss::ComparisonMode::difference));
    check(std::abs(std::accumulate(rd.scores.begin(), rd.scores.end(), 0.0)) <= 1e-9, "scores sum to 0 (difference)");

    // Appending a column on which every object ties.
    const auto ct = fss::comparison_table(with_column(s, std::round(u(rng) * 10) / 10), fss::ComparisonMode::count);
    for (std::size_t k = 0; k < c.cells().size(); ++k) check(ct.cells()[k] == c.cells()[k] + 1, "tie column adds 1");
    check(fss::scores(ct).scores == r.scores, "tie column leaves scores");

    // Raising one of object i's degrees.
    {
      const std::size_t i = rng() % n, e = rng() % m;
      auto d = s.degrees();
      auto& cell = d[i * m + e];
      cell = cell + (1.0 - cell) * u(rng);
      const auto raised = fss::scores(fss::comparison_table(fss::FuzzySoftSet(s.universe(), s.parameters(), d)));
      check(raised.scores[i] >= r.scores[i], "score monotone in own degree");
    }

    // Min product never exceeds max product.
    {
      const auto other = fss::testing::random_set(rng, n, 1 + rng() % 4);
      std::vector<std::string> labels;
      for (const auto& p : other.parameters()) labels.push_back("b" + p);
      const fss::FuzzySoftSet b(s.universe(), labels, other.degrees());
      const auto lo = fss::product(s, b, fss::Combiner::min);
      const auto hi = fss::product(s, b, fss::Combiner::max);
      for (std::size_t k = 0; k < lo.degrees().size(); ++k) check(lo.degrees()[k] <= hi.degrees()[k], "min <= max product");
    }

    // Permuting the universe permutes the scores.
    {
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const auto rp = fss::scores(fss::comparison_table(permute_universe(s, perm)));
      for (std::size_t k = 0; k < n; ++k) check(rp.scores[k] == r.scores[perm[k]], "permutation equivariance");
    }
  }
  const double seconds = ms_since(t0) / 1000.0;
  return {failures == 0 && seconds < 30.0, std::to_string(instances) + " instances, " + std::to_string(failures) + " violations" +
                                               (failures ? " (first: " + first_failure + ")" : "") + "; " + fmt(seconds, 2) +
                                               " s (< 30 s)"};
}

Outcome reduction_oracle() {
  std::mt19937_64 rng(424242);
  std::size_t agree = 0;
  constexpr int instances = 500;
  for (int trial = 0; trial < instances; ++trial) {
    const auto s = fss::testing::random_set(rng, 1 + rng() % 8, 1 + rng() % 12);
    std::vector<std::uint32_t> got;
    for (const auto& r : fss::find_reductions(s)) got.push_back(fss::testing::mask_of(s, r.reduct));
    auto brute = fss::testing::brute_reductions(s);
    std::sort(got.begin(), got.end());
    std::sort(brute.begin(), brute.end());
    agree += got == brute;
  }
  const auto age = fss::reference::printed_age();
  const std::vector<std::string> expected{"μ_3", "μ_31", "μ_45", "μ_82", "μ_91"};
  const auto reducts = fss::find_reductions(age);
  bool preserved = fss::optimal_objects(age) == expected && !reducts.empty();
  std::string listing;
  for (const auto& r : reducts) {
    preserved = preserved && fss::optimal_objects(fss::restrict(age, r.reduct)) == expected;
    listing += " {";
    for (std::size_t k = 0; k < r.reduct.size(); ++k) listing += (k ? ", " : "") + r.reduct[k];
    listing += "}";
  }
  return {agree == instances && preserved, std::to_string(agree) + "/" + std::to_string(instances) +
                                               " random instances agree with 2^m enumeration; age reducts" + listing +
                                               (preserved ? " preserve" : " do not preserve") + " {μ_3, μ_31, μ_45, μ_82, μ_91}"};
}

Outcome end_to_end() {
  const fs::path data = fs::path(FSS_TEST_DATA_DIR) / "coimbra_synthetic.csv";
  const auto base = fs::temp_directory_path() / ("fss_acceptance_" + std::to_string(std::random_device{}()));
  fss::PipelineConfig cfg;
  cfg.data_path = data;
  double worst = 0.0;
  std::vector<fss::OutputFiles> runs;
  for (int i = 0; i < 2; ++i) {
    cfg.output_dir = base / ("run" + std::to_string(i));
    const auto t0 = Clock::now();
    runs.push_back(fss::run_pipeline(cfg, fss::Stage::run, nullptr));
    worst = std::max(worst, ms_since(t0));
  }
  bool identical = runs[0] == runs[1];
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(base / "run0")) {
    std::ifstream a(entry.path(), std::ios::binary), b(base / "run1" / entry.path().filename(), std::ios::binary);
    const std::string sa{std::istreambuf_iterator<char>(a), {}}, sb{std::istreambuf_iterator<char>(b), {}};
    identical = identical && sa == sb;
    ++files;
  }
  const auto records = fss::load_csv(data, fss::DatasetSchema::coimbra());
  std::error_code ec;
  fs::remove_all(base, ec);
  return {worst < 1000.0 && identical && records.size() == 116,
          std::to_string(records.size()) + " rows; slowest run " + fmt(worst, 1) + " ms (< 1000 ms); " + std::to_string(files) +
              " files " + (identical ? "byte-identical" : "DIFFER") + " across two runs"};
}

struct Criterion {
  const char* name;
  Outcome (*run)();
};

const Criterion criteria[] = {
    {"age fuzzification", age_fuzzification},
    {"adiponectin fuzzification", adiponectin_fuzzification},
    {"insulin fuzzification", insulin_fuzzification},
    {"leptin fuzzification", leptin_fuzzification},
    {"BMI fuzzification", bmi_fuzzification},
    {"age x BMI max-product fixture", product_fixture},
    {"comparison table -> score table exactness", score_exactness},
    {"accuracy at threshold 0", accuracy},
    {"72-column product -> comparison table consistency", product_to_comparison},
    {"randomized property suite", property_suite},
    {"reduction vs brute-force oracle", reduction_oracle},
    {"end-to-end performance and determinism", end_to_end},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  constexpr int count = static_cast<int>(std::size(criteria));
  if (only < 0 || only > count) {
    std::fprintf(stderr, "criterion must be 1..%d\n", count);
    return 2;
  }
  int failed = 0;
  for (int i = 1; i <= count; ++i) {
    if (only && i != only) continue;
    Outcome o;
    try {
      o = criteria[i - 1].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("criterion %2d %s  %s: %s\n", i, o.pass ? "PASS" : "FAIL", criteria[i - 1].name, o.detail.c_str());
  }
  return failed ? 1 : 0;
}
