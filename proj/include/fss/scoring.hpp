#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fss/detail/text.hpp"
#include "fss/error.hpp"
#include "fss/softset.hpp"
#include "fss/variables.hpp"

namespace fss {

/// Tolerance of the ">=" test between two degrees in count mode.
inline constexpr double comparison_epsilon = 1e-9;

enum class ComparisonMode {
  count,       // c[i][j] = #{e : d_i(e) >= d_j(e)}
  difference,  // c[i][j] = sum_e d_i(e) - d_j(e)
};

inline std::string_view to_string(ComparisonMode m) { return m == ComparisonMode::count ? "count" : "difference"; }

class ComparisonTable {
 public:
  ComparisonTable(std::vector<std::string> universe, std::vector<double> cells, ComparisonMode mode,
                  std::size_t parameter_count)
      : universe_(std::move(universe)), cells_(std::move(cells)), mode_(mode), parameter_count_(parameter_count) {
    const std::size_t n = universe_.size();
    if (cells_.size() != n * n) throw DataError("comparison table must be square over its universe");
    const double m = static_cast<double>(parameter_count_);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const double c = at(i, j);
        if (mode_ == ComparisonMode::count) {
          if (c < 0 || c > m || c != std::floor(c))
            throw DataError("count cell (" + universe_[i] + ", " + universe_[j] + ") outside 0.." + std::to_string(parameter_count_));
          if (i == j && c != m) throw DataError("count diagonal at " + universe_[i] + " differs from the parameter count");
        } else {
          if (i == j && c != 0.0) throw DataError("difference diagonal must be 0");
          if (std::abs(c + at(j, i)) > 1e-9 * std::max(1.0, m)) throw DataError("difference table must be antisymmetric");
        }
      }
  }

  /// Count-mode table from printed integers.
  static ComparisonTable from_counts(std::vector<std::string> universe, std::span<const int> counts, std::size_t parameter_count) {
    return ComparisonTable(std::move(universe), std::vector<double>(counts.begin(), counts.end()), ComparisonMode::count,
                           parameter_count);
  }

  const std::vector<std::string>& universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return universe_.size(); }
  ComparisonMode mode() const noexcept { return mode_; }
  std::size_t parameter_count() const noexcept { return parameter_count_; }
  double at(std::size_t i, std::size_t j) const { return cells_[i * universe_.size() + j]; }
  const std::vector<double>& cells() const noexcept { return cells_; }

 private:
  std::vector<std::string> universe_;
  std::vector<double> cells_;
  ComparisonMode mode_;
  std::size_t parameter_count_;
};

inline ComparisonTable comparison_table(const FuzzySoftSet& s, ComparisonMode mode = ComparisonMode::count) {
  const std::size_t n = s.object_count();
  const std::size_t m = s.parameter_count();
  if (n == 0 || m == 0) throw DataError("comparison table of an empty fuzzy soft set");
  std::vector<double> cells(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto ri = s.row(i);
    for (std::size_t j = 0; j < n; ++j) {
      const auto rj = s.row(j);
      double c = 0.0;
      if (mode == ComparisonMode::count) {
        std::size_t k = 0;
        for (std::size_t e = 0; e < m; ++e)
          if (ri[e] >= rj[e] - comparison_epsilon) ++k;
        c = static_cast<double>(k);
      } else if (i != j) {
        for (std::size_t e = 0; e < m; ++e) c += ri[e] - rj[e];
      }
      cells[i * n + j] = c;
    }
  }
  // Exact antisymmetry: summation order differs between (i,j) and (j,i).
  if (mode == ComparisonMode::difference)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) cells[j * n + i] = -cells[i * n + j];
  return ComparisonTable(s.universe(), std::move(cells), mode, m);
}

enum class Risk { healthy, high_risk };

inline std::string_view to_string(Risk r) { return r == Risk::high_risk ? "high-risk" : "healthy"; }

struct ScoreReport {
  std::vector<std::string> universe;
  std::vector<double> row_sums;
  std::vector<double> column_sums;
  std::vector<double> scores;
  std::vector<Risk> predictions;             // empty until classified
  std::vector<std::optional<Label>> labels;  // empty when no ground truth
  std::optional<double> accuracy;
  ComparisonMode mode = ComparisonMode::count;
  std::size_t product_parameter_count = 0;
};

/// Row sum, column sum and their difference per object.
inline ScoreReport scores(const ComparisonTable& c) {
  const std::size_t n = c.size();
  ScoreReport r;
  r.universe = c.universe();
  r.mode = c.mode();
  r.product_parameter_count = c.parameter_count();
  r.row_sums.assign(n, 0.0);
  r.column_sums.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      r.row_sums[i] += c.at(i, j);
      r.column_sums[j] += c.at(i, j);
    }
  r.scores.resize(n);
  for (std::size_t i = 0; i < n; ++i) r.scores[i] = r.row_sums[i] - r.column_sums[i];
  return r;
}

/// High risk iff score > threshold.
inline std::vector<Risk> classify(const ScoreReport& report, double threshold = 0.0) {
  if (!std::isfinite(threshold)) throw InputError("classification threshold must be finite");
  std::vector<Risk> out;
  out.reserve(report.scores.size());
  for (double s : report.scores) out.push_back(s > threshold ? Risk::high_risk : Risk::healthy);
  return out;
}

inline bool agrees(Risk prediction, Label truth) {
  return (prediction == Risk::high_risk) == (truth == Label::patient);
}

/// Fraction of objects whose prediction matches the ground truth.
inline double evaluate(const std::map<std::string, Risk>& predictions, const std::map<std::string, Label>& labels) {
  if (labels.empty()) throw DataError("evaluation needs at least one ground-truth label");
  if (predictions.size() != labels.size()) throw DataError("predictions and labels cover different objects");
  std::size_t correct = 0;
  for (const auto& [id, truth] : labels) {
    const auto it = predictions.find(id);
    if (it == predictions.end()) throw DataError("no prediction for labelled object '" + id + "'");
    if (agrees(it->second, truth)) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(labels.size());
}

inline std::map<std::string, Risk> prediction_map(const ScoreReport& report) {
  std::map<std::string, Risk> out;
  for (std::size_t i = 0; i < report.predictions.size(); ++i) out.emplace(report.universe[i], report.predictions[i]);
  return out;
}

/// Attaches labels and predictions; accuracy is set when every object is labelled.
inline void attach_predictions(ScoreReport& report, double threshold, const std::map<std::string, Label>& labels) {
  report.predictions = classify(report, threshold);
  report.labels.clear();
  report.accuracy.reset();
  if (labels.empty()) return;
  std::map<std::string, Label> covered;
  for (const auto& id : report.universe) {
    const auto it = labels.find(id);
    report.labels.push_back(it == labels.end() ? std::nullopt : std::optional<Label>(it->second));
    if (it != labels.end()) covered.emplace(id, it->second);
  }
  if (covered.size() == report.universe.size()) report.accuracy = evaluate(prediction_map(report), covered);
}

struct PipelineResult {
  FuzzySoftSet product;
  ComparisonTable table;
  ScoreReport report;
};

/// product_n -> comparison_table -> scores -> classify, keeping intermediates.
inline PipelineResult score_pipeline_full(std::span<const FuzzySoftSet> sets, Combiner combiner, ComparisonMode mode,
                                          double threshold, const std::map<std::string, Label>& labels = {}) {
  auto prod = product_n(sets, combiner);
  auto table = comparison_table(prod, mode);
  auto report = scores(table);
  attach_predictions(report, threshold, labels);
  return {std::move(prod), std::move(table), std::move(report)};
}

inline ScoreReport score_pipeline(std::span<const FuzzySoftSet> sets, Combiner combiner, ComparisonMode mode,
                                  double threshold, const std::map<std::string, Label>& labels = {}) {
  return score_pipeline_full(sets, combiner, mode, threshold, labels).report;
}

namespace detail {
inline std::string score_number(double v, ComparisonMode mode, int decimals) {
  return mode == ComparisonMode::count ? format_fixed(v, 0) : format_fixed(v, decimals);
}
}  // namespace detail

/// CSV `object,row_sum,column_sum,score,prediction,label`.
inline std::string report_to_csv(const ScoreReport& r) {
  std::string out = "object,row_sum,column_sum,score,prediction,label\n";
  for (std::size_t i = 0; i < r.universe.size(); ++i) {
    out += detail::csv_escape(r.universe[i]) + ',' + detail::score_number(r.row_sums[i], r.mode, 6) + ',' +
           detail::score_number(r.column_sums[i], r.mode, 6) + ',' + detail::score_number(r.scores[i], r.mode, 6) + ',';
    if (i < r.predictions.size()) out += to_string(r.predictions[i]);
    out += ',';
    if (i < r.labels.size() && r.labels[i]) out += to_string(*r.labels[i]);
    out += '\n';
  }
  return out;
}

namespace detail {
inline std::string pad_right(std::string s, std::size_t w) {
  // Column width counts code points so "μ_3" aligns with ASCII headers.
  std::size_t cps = 0;
  for (unsigned char c : s) cps += (c & 0xC0) != 0x80;
  if (cps < w) s.append(w - cps, ' ');
  return s;
}
inline std::string pad_left(const std::string& s, std::size_t w) {
  return s.size() < w ? std::string(w - s.size(), ' ') + s : s;
}
}  // namespace detail

/// Aligned text in the layout of a score table, followed by the accuracy line.
inline std::string report_to_text(const ScoreReport& r, int decimals = 2) {
  std::string out = detail::pad_right("Sample No", 12) + detail::pad_left("Row Sum", 12) + detail::pad_left("Column Sum", 12) +
                    detail::pad_left("Score", 12) + "  Prediction  Label\n";
  for (std::size_t i = 0; i < r.universe.size(); ++i) {
    out += detail::pad_right(r.universe[i], 12) + detail::pad_left(detail::score_number(r.row_sums[i], r.mode, decimals), 12) +
           detail::pad_left(detail::score_number(r.column_sums[i], r.mode, decimals), 12) +
           detail::pad_left(detail::score_number(r.scores[i], r.mode, decimals), 12) + "  ";
    out += detail::pad_right(i < r.predictions.size() ? std::string(to_string(r.predictions[i])) : "", 10) + "  ";
    if (i < r.labels.size() && r.labels[i]) out += to_string(*r.labels[i]);
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += '\n';
  }
  if (r.accuracy) out += "accuracy: " + detail::format_fixed(*r.accuracy, 2) + "\n";
  return out;
}

inline std::string comparison_to_csv(const ComparisonTable& c, int decimals = 6) {
  std::string out = "object";
  for (const auto& id : c.universe()) out += ',' + detail::csv_escape(id);
  out += '\n';
  for (std::size_t i = 0; i < c.size(); ++i) {
    out += detail::csv_escape(c.universe()[i]);
    for (std::size_t j = 0; j < c.size(); ++j) out += ',' + detail::score_number(c.at(i, j), c.mode(), decimals);
    out += '\n';
  }
  return out;
}

}  // namespace fss
