#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "fss/softset.hpp"

// Published tables for the ten sample patients, transcribed verbatim
// (including cells that disagree with the membership equations).
namespace fss::reference {

inline const std::vector<std::string>& sample_ids() {
  static const std::vector<std::string> ids{"μ_3", "μ_11", "μ_19", "μ_31", "μ_45", "μ_60", "μ_71", "μ_82", "μ_91", "μ_104"};
  return ids;
}

namespace detail {
inline FuzzySoftSet sample_set(std::vector<std::string> parameters, std::span<const double> cells) {
  return FuzzySoftSet(sample_ids(), std::move(parameters), std::vector<double>(cells.begin(), cells.end()));
}
}  // namespace detail

inline FuzzySoftSet printed_age() {
  static constexpr double cells[] = {
      0.00, 0.00, 0.00, 1.00,
      0.00, 0.00, 0.73, 0.00,
      0.00, 0.00, 0.00, 0.93,
      0.00, 0.00, 0.00, 1.00,
      0.00, 0.00, 0.00, 1.00,
      0.00, 0.00, 0.00, 0.80,
      0.00, 0.00, 0.93, 0.00,
      0.00, 0.00, 0.00, 1.00,
      0.00, 0.00, 0.00, 1.00,
      0.00, 0.00, 0.20, 0.46,
  };
  return detail::sample_set({"(AGE)_C", "(AGE)_Y", "(AGE)_M", "(AGE)_O"}, cells);
}

inline FuzzySoftSet printed_bmi() {
  static constexpr double cells[] = {
      0.00, 0.50, 0.00,
      0.00, 0.50, 0.00,
      0.00, 0.00, 0.80,
      0.00, 0.00, 1.00,
      0.00, 0.83, 0.00,
      0.00, 0.33, 0.00,
      0.00, 0.80, 0.00,
      0.00, 0.83, 0.00,
      0.00, 0.35, 0.24,
      0.00, 0.00, 0.96,
  };
  return detail::sample_set({"(BMI)_OI", "(BMI)_OII", "(BMI)_OIII"}, cells);
}

inline FuzzySoftSet printed_insulin() {
  static constexpr double cells[] = {
      0.10, 0.42, 0.00,
      0.00, 0.76, 0.00,
      0.11, 0.40, 0.00,
      0.00, 0.00, 1.00,
      0.00, 0.47, 0.14,
      0.43, 0.13, 0.00,
      0.00, 0.00, 1.00,
      0.00, 0.00, 1.00,
      0.00, 0.00, 1.00,
      0.00, 0.00, 1.00,
  };
  return detail::sample_set({"(INS)_L", "(INS)_M", "(INS)_H"}, cells);
}

inline FuzzySoftSet printed_leptin() {
  static constexpr double cells[] = {
      0.17, 0.16, 0.00, 0.00,
      0.00, 0.62, 0.00, 0.00,
      0.00, 0.41, 0.00, 0.00,
      0.00, 0.00, 0.64, 0.00,
      0.00, 0.00, 0.99, 0.00,
      0.68, 0.00, 0.00, 0.00,
      0.00, 0.21, 0.00, 0.00,
      0.06, 0.27, 0.00, 0.00,
      0.00, 0.89, 0.00, 0.00,
      0.00, 0.78, 0.00, 0.00,
  };
  return detail::sample_set({"(LPN)_L", "(LPN)_M", "(LPN)_H", "(LPN)_VH"}, cells);
}

inline FuzzySoftSet printed_adiponectin() {
  static constexpr double cells[] = {
      0.00, 0.07, 0.48,
      0.00, 0.00, 1.00,
      0.64, 0.00, 0.00,
      0.35, 0.06, 0.00,
      0.26, 0.14, 0.00,
      0.00, 0.53, 0.00,
      0.00, 0.86, 0.00,
      0.65, 0.00, 0.00,
      0.02, 0.36, 0.00,
      1.00, 0.00, 0.00,
  };
  return detail::sample_set({"(ADP)_L", "(ADP)_M", "(ADP)_H"}, cells);
}

/// Age x BMI product under max, columns (AGE)_C×(BMI)_OI ... (AGE)_O×(BMI)_OIII.
inline FuzzySoftSet printed_age_bmi_product() {
  static constexpr double cells[] = {
      0.00, 0.50, 0.00, 0.00, 0.50, 0.00, 0.00, 0.50, 0.00, 1.00, 1.00, 1.00,
      0.00, 0.50, 0.00, 0.00, 0.50, 0.00, 0.73, 0.73, 0.73, 0.00, 0.50, 0.00,
      0.00, 0.00, 0.80, 0.00, 0.00, 0.80, 0.00, 0.00, 0.80, 0.93, 0.93, 0.93,
      0.00, 0.00, 1.00, 0.00, 0.00, 1.00, 0.00, 0.00, 1.00, 1.00, 1.00, 1.00,
      0.00, 0.83, 0.00, 0.00, 0.83, 0.00, 0.00, 0.83, 0.00, 1.00, 1.00, 1.00,
      0.00, 0.33, 0.00, 0.00, 0.33, 0.00, 0.00, 0.33, 0.00, 0.80, 0.80, 0.80,
      0.00, 0.80, 0.00, 0.00, 0.80, 0.00, 0.93, 0.93, 0.93, 0.00, 0.80, 0.00,
      0.00, 0.83, 0.00, 0.00, 0.83, 0.00, 0.00, 0.83, 0.00, 1.00, 1.00, 1.00,
      0.00, 0.35, 0.24, 0.00, 0.35, 0.24, 0.00, 0.35, 0.24, 1.00, 1.00, 1.00,
      0.00, 0.00, 0.96, 0.00, 0.00, 0.96, 0.20, 0.20, 0.96, 0.46, 0.46, 0.96,
  };
  std::vector<std::string> labels;
  for (const char* a : {"C", "Y", "M", "O"})
    for (const char* b : {"OI", "OII", "OIII"}) labels.push_back(std::string("(AGE)_") + a + std::string(product_separator) + "(BMI)_" + b);
  return detail::sample_set(std::move(labels), cells);
}

/// The 72-column product table fed to the comparison step, columns €1..€72.
inline FuzzySoftSet printed_product72() {
  static constexpr double cells[] = {
      0.50, 0.50, 0.50, 0.50, 0.50, 0.50, 0.50, 0.50, 0.50, 0.50, 0.50, 0.50,
      0.50, 0.50, 0.50, 0.50, 0.50, 0.50, 0.17, 0.17, 0.48, 0.16, 0.16, 0.48,
      0.42, 0.42, 0.48, 0.42, 0.42, 0.48, 0.17, 0.17, 0.48, 0.16, 0.16, 0.48,
      1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00,
      1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00,
      1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00,
      0.73, 0.73, 1.00, 0.73, 0.73, 1.00, 0.76, 0.76, 1.00, 0.76, 0.76, 1.00,
      0.73, 0.73, 1.00, 0.73, 0.73, 1.00, 0.73, 0.73, 1.00, 0.73, 0.73, 1.00,
      0.76, 0.76, 1.00, 0.76, 0.76, 1.00, 0.73, 0.73, 1.00, 0.73, 0.73, 1.00,
      0.50, 0.50, 1.00, 0.62, 0.62, 1.00, 0.76, 0.76, 1.00, 0.76, 0.76, 1.00,
      0.50, 0.50, 1.00, 0.62, 0.62, 1.00, 0.00, 0.00, 1.00, 0.62, 0.62, 1.00,
      0.76, 0.76, 1.00, 0.76, 0.76, 1.00, 0.00, 0.00, 1.00, 0.62, 0.62, 1.00,
      0.64, 0.11, 0.11, 0.64, 0.41, 0.41, 0.64, 0.40, 0.40, 0.64, 0.41, 0.41,
      0.64, 0.00, 0.00, 0.64, 0.41, 0.41, 0.80, 0.80, 0.80, 0.80, 0.80, 0.80,
      0.80, 0.80, 0.80, 0.80, 0.80, 0.80, 0.80, 0.80, 0.80, 0.80, 0.80, 0.80,
      0.93, 0.93, 0.93, 0.93, 0.93, 0.93, 0.93, 0.93, 0.93, 0.93, 0.93, 0.93,
      0.93, 0.93, 0.93, 0.93, 0.93, 0.93, 0.93, 0.93, 0.93, 0.93, 0.93, 0.93,
      0.93, 0.93, 0.93, 0.93, 0.93, 0.93, 0.93, 0.93, 0.93, 0.93, 0.93, 0.93,
      0.35, 0.06, 0.00, 0.64, 0.64, 0.64, 0.35, 0.06, 0.00, 0.64, 0.64, 0.64,
      1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00,
      1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00,
      1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00,
      1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00,
      1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00,
      0.83, 0.83, 0.83, 0.99, 0.99, 0.99, 0.83, 0.83, 0.83, 0.99, 0.99, 0.99,
      0.83, 0.83, 0.83, 0.99, 0.99, 0.99, 0.26, 0.14, 0.00, 0.99, 0.99, 0.99,
      0.47, 0.47, 0.47, 0.99, 0.99, 0.99, 0.26, 0.14, 0.14, 0.99, 0.99, 0.99,
      1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00,
      1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00,
      1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00,
      0.68, 0.68, 0.68, 0.43, 0.53, 0.43, 0.68, 0.68, 0.68, 0.33, 0.53, 0.33,
      0.68, 0.68, 0.68, 0.33, 0.53, 0.33, 0.68, 0.68, 0.68, 0.43, 0.53, 0.43,
      0.68, 0.68, 0.68, 0.13, 0.53, 0.13, 0.68, 0.68, 0.68, 0.00, 0.53, 0.00,
      0.80, 0.80, 0.80, 0.80, 0.80, 0.80, 0.80, 0.80, 0.80, 0.80, 0.80, 0.80,
      0.80, 0.80, 0.80, 0.80, 0.80, 0.80, 0.80, 0.80, 0.80, 0.80, 0.80, 0.80,
      0.80, 0.80, 0.80, 0.80, 0.80, 0.80, 0.80, 0.80, 0.80, 0.80, 0.80, 0.80,
      0.93, 0.93, 0.93, 0.93, 0.93, 0.93, 0.93, 0.93, 0.93, 0.93, 0.93, 0.93,
      1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 0.93, 0.93, 0.93, 0.93, 0.93, 0.93,
      0.93, 0.93, 0.93, 0.93, 0.93, 0.93, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00,
      0.80, 0.86, 0.80, 0.80, 0.86, 0.80, 0.80, 0.86, 0.80, 0.80, 0.86, 0.80,
      1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 0.00, 0.86, 0.00, 0.21, 0.86, 0.21,
      0.00, 0.86, 0.00, 0.21, 0.86, 0.21, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00,
      0.83, 0.83, 0.83, 0.83, 0.83, 0.83, 0.83, 0.83, 0.83, 0.83, 0.83, 0.83,
      1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 0.65, 0.06, 0.06, 0.65, 0.27, 0.27,
      0.65, 0.06, 0.06, 0.65, 0.27, 0.27, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00,
      1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00,
      1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00,
      1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00,
      0.35, 0.36, 0.35, 0.89, 0.89, 0.89, 0.35, 0.36, 0.35, 0.89, 0.89, 0.89,
      1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 0.24, 0.36, 0.24, 0.89, 0.89, 0.89,
      0.24, 0.36, 0.24, 0.89, 0.89, 0.89, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00,
      1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00,
      1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00,
      1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00,
      1.00, 0.20, 0.20, 1.00, 0.78, 0.78, 1.00, 0.20, 0.20, 1.00, 0.78, 0.78,
      1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 0.96, 0.96, 1.00, 0.96, 0.96,
      1.00, 0.96, 0.96, 1.00, 0.96, 0.96, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00,
      1.00, 0.46, 0.46, 1.00, 0.78, 0.78, 1.00, 0.46, 0.46, 1.00, 0.78, 0.78,
      1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 0.96, 0.96, 1.00, 0.96, 0.96,
      1.00, 0.96, 0.96, 1.00, 0.96, 0.96, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00,
  };
  std::vector<std::string> labels;
  for (int k = 1; k <= 72; ++k) labels.push_back("€" + std::to_string(k));
  return detail::sample_set(std::move(labels), cells);
}

/// Printed comparison table, row-major over sample_ids().
inline std::span<const int> printed_comparison() {
  static constexpr int cells[] = {
      72, 36, 48, 48, 48, 42, 36, 43, 46, 40,
      48, 72, 36, 32, 30, 64, 28, 32, 32, 28,
      24, 36, 72, 12, 12, 63, 24, 12, 10, 12,
      60, 60, 60, 72, 60, 60, 60, 60, 62, 60,
      48, 54, 60, 48, 72, 62, 36, 52, 48, 44,
      30, 8, 9, 12, 11, 72, 8, 6, 12, 8,
      48, 53, 48, 36, 48, 64, 72, 48, 48, 40,
      65, 56, 60, 60, 64, 66, 48, 72, 56, 56,
      62, 56, 62, 60, 64, 60, 48, 64, 72, 56,
      52, 52, 62, 48, 48, 64, 56, 48, 48, 72,
  };
  return cells;
}

inline constexpr std::size_t printed_comparison_parameters = 72;

struct ScoreRow {
  int row_sum;
  int column_sum;
  int score;
};

/// Printed score table, in sample_ids() order.
inline std::span<const ScoreRow> printed_scores() {
  static constexpr ScoreRow rows[] = {
      {459, 509, -50},
      {402, 483, -81},
      {277, 517, -240},
      {614, 428, 186},
      {524, 457, 67},
      {176, 617, -441},
      {505, 416, 89},
      {603, 437, 166},
      {604, 434, 170},
      {550, 416, 134},
  };
  return rows;
}

/// Objects the published model got right and wrong.
inline const std::vector<std::string>& published_correct() {
  static const std::vector<std::string> ids{"μ_3", "μ_11", "μ_19", "μ_71", "μ_82", "μ_91", "μ_104"};
  return ids;
}

inline const std::vector<std::string>& published_wrong() {
  static const std::vector<std::string> ids{"μ_31", "μ_45", "μ_60"};
  return ids;
}

inline constexpr double published_accuracy = 0.70;

}  // namespace fss::reference
