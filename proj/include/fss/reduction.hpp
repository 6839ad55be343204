#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fss/error.hpp"
#include "fss/softset.hpp"

namespace fss {

/// Absolute tolerance for ties in choice values.
inline constexpr double choice_tie_epsilon = 1e-9;

/// Default upper bound on parameter count for exhaustive reduction search.
inline constexpr std::size_t default_reduction_cap = 20;

struct ReductionResult {
  std::vector<std::string> reduct;           // kept parameters, in set order
  std::vector<std::string> optimal_objects;  // in universe order
  std::vector<std::string> dispensable;      // removed parameters, in set order

  friend bool operator==(const ReductionResult&, const ReductionResult&) = default;
};

/// Row sums f(h_i).
inline std::vector<double> choice_values(const FuzzySoftSet& s) {
  std::vector<double> out(s.object_count(), 0.0);
  for (std::size_t o = 0; o < s.object_count(); ++o)
    for (double d : s.row(o)) out[o] += d;
  return out;
}

namespace detail {

inline std::vector<std::size_t> argmax_set(std::span<const double> values) {
  if (values.empty()) throw DataError("optimal objects of an empty universe");
  const double best = *std::max_element(values.begin(), values.end());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] >= best - choice_tie_epsilon) out.push_back(i);
  return out;
}

// Optimal objects when only the columns in `mask` are counted.
inline std::vector<std::size_t> optimal_for_mask(const FuzzySoftSet& s, std::uint32_t mask) {
  std::vector<double> f(s.object_count(), 0.0);
  for (std::size_t o = 0; o < s.object_count(); ++o) {
    const auto row = s.row(o);
    for (std::size_t j = 0; j < row.size(); ++j)
      if (mask >> j & 1u) f[o] += row[j];
  }
  return argmax_set(f);
}

inline std::vector<std::string> labels_for_mask(const FuzzySoftSet& s, std::uint32_t mask, bool inside) {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < s.parameter_count(); ++j)
    if (((mask >> j & 1u) != 0) == inside) out.push_back(s.parameters()[j]);
  return out;
}

}  // namespace detail

/// Objects attaining the maximum choice value (ties within choice_tie_epsilon).
inline std::vector<std::string> optimal_objects(const FuzzySoftSet& s) {
  const auto idx = detail::argmax_set(choice_values(s));
  std::vector<std::string> out;
  for (auto i : idx) out.push_back(s.universe()[i]);
  return out;
}

/// True iff dropping `removed` leaves the optimal-object set unchanged.
inline bool is_dispensable(const FuzzySoftSet& s, std::span<const std::string> removed) {
  std::vector<bool> drop(s.parameter_count(), false);
  for (const auto& label : removed) drop[s.parameter_index(label)] = true;
  std::vector<std::string> keep;
  for (std::size_t j = 0; j < s.parameter_count(); ++j)
    if (!drop[j]) keep.push_back(s.parameters()[j]);
  if (keep.empty()) throw DataError("dispensability is undefined for the full parameter set");
  if (keep.size() == s.parameter_count()) return true;
  return optimal_objects(restrict(s, keep)) == optimal_objects(s);
}

/// Every inclusion-minimal non-empty parameter subset whose optimal-object set
/// equals that of the full set. Sorted by size, then by the parameter-order
/// lexicographic sequence of member indices.
inline std::vector<ReductionResult> find_reductions(const FuzzySoftSet& s, std::size_t cap = default_reduction_cap) {
  const std::size_t m = s.parameter_count();
  if (m > cap || m > 31)
    throw DataError("reduction search refused: " + std::to_string(m) + " parameters exceeds the cap of " +
                    std::to_string(std::min<std::size_t>(cap, 31)));
  if (m == 0) throw DataError("reduction of a set without parameters");
  const auto target = detail::argmax_set(choice_values(s));

  std::vector<std::uint32_t> found;
  const std::uint32_t full = (1u << m) - 1u;
  // Masks grouped by popcount; within a size, ascending index sequences.
  std::vector<std::vector<std::uint32_t>> by_size(m + 1);
  for (std::uint32_t mask = 1; mask <= full; ++mask) by_size[std::popcount(mask)].push_back(mask);
  auto lex_less = [](std::uint32_t a, std::uint32_t b) {
    // Compare member index sequences lexicographically.
    while (a && b) {
      const int ia = std::countr_zero(a);
      const int ib = std::countr_zero(b);
      if (ia != ib) return ia < ib;
      a &= a - 1;
      b &= b - 1;
    }
    return b != 0;
  };
  for (std::size_t k = 1; k <= m; ++k) {
    auto& masks = by_size[k];
    std::sort(masks.begin(), masks.end(), lex_less);
    for (std::uint32_t mask : masks) {
      const bool contains_found =
          std::any_of(found.begin(), found.end(), [mask](std::uint32_t f) { return (mask & f) == f; });
      if (contains_found) continue;
      if (detail::optimal_for_mask(s, mask) == target) found.push_back(mask);
    }
  }

  std::vector<std::string> target_ids;
  for (auto i : target) target_ids.push_back(s.universe()[i]);
  std::vector<ReductionResult> out;
  for (std::uint32_t mask : found)
    out.push_back({detail::labels_for_mask(s, mask, true), target_ids, detail::labels_for_mask(s, mask, false)});
  return out;
}

/// Plain-text listing of kept and dropped labels.
inline std::string reductions_to_text(const std::string& variable, std::span<const ReductionResult> results) {
  std::string out = variable + ": " + std::to_string(results.size()) + " reduction(s)\n";
  for (std::size_t i = 0; i < results.size(); ++i) {
    auto join = [](const std::vector<std::string>& v) {
      std::string s = "{";
      for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + v[k];
      return s + "}";
    };
    out += "  [" + std::to_string(i + 1) + "] keep " + join(results[i].reduct) + " drop " + join(results[i].dispensable) +
           " optimal " + join(results[i].optimal_objects) + "\n";
  }
  return out;
}

}  // namespace fss
