#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "fss/detail/text.hpp"
#include "fss/error.hpp"
#include "fss/membership.hpp"

namespace fss {

/// Objects x parameters matrix of membership degrees.
///
/// Invariants (checked on construction): unique object ids, unique parameter
/// labels, |universe| * |parameters| degrees, every degree in [0,1].
class FuzzySoftSet {
 public:
  FuzzySoftSet() = default;

  FuzzySoftSet(std::vector<std::string> universe, std::vector<std::string> parameters, std::vector<double> degrees)
      : universe_(std::move(universe)), parameters_(std::move(parameters)), degrees_(std::move(degrees)) {
    check_unique(universe_, "object id");
    check_unique(parameters_, "parameter label");
    if (degrees_.size() != universe_.size() * parameters_.size())
      throw DataError("degree matrix is " + std::to_string(degrees_.size()) + " cells, expected " +
                      std::to_string(universe_.size()) + " x " + std::to_string(parameters_.size()));
    for (std::size_t k = 0; k < degrees_.size(); ++k) {
      if (!detail::is_degree(degrees_[k]))
        throw DataError("degree outside [0,1] at object '" + universe_[k / parameters_.size()] + "', parameter '" +
                        parameters_[k % parameters_.size()] + "'");
    }
  }

  const std::vector<std::string>& universe() const noexcept { return universe_; }
  const std::vector<std::string>& parameters() const noexcept { return parameters_; }
  const std::vector<double>& degrees() const noexcept { return degrees_; }

  std::size_t object_count() const noexcept { return universe_.size(); }
  std::size_t parameter_count() const noexcept { return parameters_.size(); }

  double at(std::size_t object, std::size_t parameter) const { return degrees_[object * parameters_.size() + parameter]; }

  std::span<const double> row(std::size_t object) const {
    return std::span<const double>(degrees_).subspan(object * parameters_.size(), parameters_.size());
  }

  std::size_t parameter_index(std::string_view label) const {
    const auto it = std::find(parameters_.begin(), parameters_.end(), label);
    if (it == parameters_.end()) throw DataError("unknown parameter label '" + std::string(label) + "'");
    return static_cast<std::size_t>(it - parameters_.begin());
  }

  std::size_t object_index(std::string_view id) const {
    const auto it = std::find(universe_.begin(), universe_.end(), id);
    if (it == universe_.end()) throw DataError("unknown object id '" + std::string(id) + "'");
    return static_cast<std::size_t>(it - universe_.begin());
  }

  double at(std::string_view id, std::string_view label) const { return at(object_index(id), parameter_index(label)); }

  friend bool operator==(const FuzzySoftSet&, const FuzzySoftSet&) = default;

 private:
  static void check_unique(const std::vector<std::string>& names, const char* what) {
    std::unordered_set<std::string_view> seen;
    for (const auto& n : names)
      if (!seen.insert(n).second) throw DataError(std::string("duplicate ") + what + " '" + n + "'");
  }

  std::vector<std::string> universe_;
  std::vector<std::string> parameters_;
  std::vector<double> degrees_;
};

enum class Combiner { min, max };

inline std::string_view to_string(Combiner c) { return c == Combiner::min ? "min" : "max"; }

/// Separator used in product parameter labels, e.g. "(AGE)_O×(BMI)_OII".
inline constexpr std::string_view product_separator = "×";

/// Product over the Cartesian product of parameters; a's label varies slower.
/// Combiner::max reproduces the published age x BMI table, Combiner::min is the
/// classical AND-product.
inline FuzzySoftSet product(const FuzzySoftSet& a, const FuzzySoftSet& b, Combiner combiner) {
  if (a.universe() != b.universe()) throw DataError("product requires identical universes in identical order");
  const std::size_t n = a.object_count();
  const std::size_t pa = a.parameter_count();
  const std::size_t pb = b.parameter_count();
  std::vector<std::string> labels;
  labels.reserve(pa * pb);
  for (const auto& p : a.parameters())
    for (const auto& q : b.parameters()) labels.push_back(p + std::string(product_separator) + q);
  std::vector<double> degrees;
  degrees.reserve(n * pa * pb);
  for (std::size_t o = 0; o < n; ++o)
    for (std::size_t p = 0; p < pa; ++p)
      for (std::size_t q = 0; q < pb; ++q)
        degrees.push_back(combiner == Combiner::max ? std::max(a.at(o, p), b.at(o, q)) : std::min(a.at(o, p), b.at(o, q)));
  return FuzzySoftSet(a.universe(), std::move(labels), std::move(degrees));
}

/// Left fold of product().
inline FuzzySoftSet product_n(std::span<const FuzzySoftSet> sets, Combiner combiner) {
  if (sets.empty()) throw DataError("product_n needs at least one set");
  FuzzySoftSet acc = sets.front();
  for (std::size_t i = 1; i < sets.size(); ++i) acc = product(acc, sets[i], combiner);
  return acc;
}

/// Positional alias of a product column, e.g. "4,2" for (AGE)_O×(BMI)_OII.
/// `factor_sizes` are the parameter counts of the product's inputs.
inline std::string positional_label(std::span<const std::size_t> factor_sizes, std::size_t column) {
  std::vector<std::size_t> digits(factor_sizes.size());
  for (std::size_t i = factor_sizes.size(); i-- > 0;) {
    digits[i] = column % factor_sizes[i];
    column /= factor_sizes[i];
  }
  if (column != 0) throw InputError("product column index out of range");
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(digits[i] + 1);
  }
  return out;
}

/// Column subset; kept labels stay in their original relative order.
inline FuzzySoftSet restrict(const FuzzySoftSet& s, std::span<const std::string> keep) {
  if (keep.empty()) throw DataError("restrict needs at least one parameter to keep");
  std::vector<bool> wanted(s.parameter_count(), false);
  for (const auto& label : keep) wanted[s.parameter_index(label)] = true;
  std::vector<std::size_t> cols;
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < s.parameter_count(); ++j) {
    if (!wanted[j]) continue;
    cols.push_back(j);
    labels.push_back(s.parameters()[j]);
  }
  std::vector<double> degrees;
  degrees.reserve(s.object_count() * cols.size());
  for (std::size_t o = 0; o < s.object_count(); ++o)
    for (std::size_t j : cols) degrees.push_back(s.at(o, j));
  return FuzzySoftSet(s.universe(), std::move(labels), std::move(degrees));
}

inline FuzzySoftSet restrict(const FuzzySoftSet& s, std::initializer_list<std::string> keep) {
  return restrict(s, std::span<const std::string>(keep.begin(), keep.size()));
}

/// CSV: header `object,<labels...>`, one row per object. With decimals < 0
/// degrees are written in shortest round-trip form.
inline std::string to_table(const FuzzySoftSet& s, int decimals = -1) {
  std::string out = "object";
  for (const auto& p : s.parameters()) {
    out += ',';
    out += detail::csv_escape(p);
  }
  out += '\n';
  for (std::size_t o = 0; o < s.object_count(); ++o) {
    out += detail::csv_escape(s.universe()[o]);
    for (double d : s.row(o)) {
      out += ',';
      out += decimals < 0 ? detail::format_exact(d) : detail::format_fixed(d, decimals);
    }
    out += '\n';
  }
  return out;
}

/// Inverse of to_table(). Blank lines and lines starting with '#' are skipped.
inline FuzzySoftSet from_table(std::string_view text) {
  const auto lines = detail::split_lines(text);
  std::vector<std::string> header;
  std::vector<std::string> universe;
  std::vector<double> degrees;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto line = detail::trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    auto fields = detail::split_csv_line(lines[i], line_no);
    if (header.empty()) {
      if (fields.size() < 1 || detail::trim(fields[0]) != "object")
        throw DataError("line " + std::to_string(line_no) + ": header must start with 'object'");
      header = std::move(fields);
      continue;
    }
    if (fields.size() != header.size())
      throw DataError("line " + std::to_string(line_no) + ": expected " + std::to_string(header.size()) +
                      " fields, found " + std::to_string(fields.size()));
    universe.push_back(std::string(detail::trim(fields[0])));
    for (std::size_t j = 1; j < fields.size(); ++j) {
      const auto v = detail::parse_double(fields[j]);
      if (!v)
        throw DataError("line " + std::to_string(line_no) + ", column '" + header[j] + "': non-numeric cell '" +
                        fields[j] + "'");
      degrees.push_back(*v);
    }
  }
  if (header.empty()) throw DataError("table has no header row");
  std::vector<std::string> labels;
  for (std::size_t j = 1; j < header.size(); ++j) labels.push_back(std::string(detail::trim(header[j])));
  return FuzzySoftSet(std::move(universe), std::move(labels), std::move(degrees));
}

}  // namespace fss
