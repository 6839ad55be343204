#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fss/detail/text.hpp"
#include "fss/error.hpp"

namespace fss {

/// One breakpoint of a piecewise-linear membership curve.
struct Node {
  double x = 0.0;
  double degree = 0.0;

  friend bool operator==(const Node&, const Node&) = default;
};

/// Piecewise-linear membership function: linear between nodes, constant tails
/// outside them. Triangles, trapezoids and shoulders are all node lists.
///
/// Construct through make_piecewise(); a constructed value always satisfies
/// strictly increasing node x, degrees in [0,1] and at least one node.
class MembershipFunction {
 public:
  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  double left_tail() const noexcept { return left_tail_; }
  double right_tail() const noexcept { return right_tail_; }

  /// Degree of membership of x. Exact node y at a node x.
  double operator()(double x) const {
    if (!std::isfinite(x)) throw InputError("membership evaluated at non-finite x");
    if (x < nodes_.front().x) return left_tail_;
    if (x > nodes_.back().x) return right_tail_;
    // First node with node.x >= x.
    std::size_t hi = 0;
    while (nodes_[hi].x < x) ++hi;
    if (nodes_[hi].x == x) return nodes_[hi].degree;
    const Node& a = nodes_[hi - 1];
    const Node& b = nodes_[hi];
    const double t = (x - a.x) / (b.x - a.x);
    return a.degree + t * (b.degree - a.degree);
  }

  friend bool operator==(const MembershipFunction&, const MembershipFunction&) = default;

 private:
  friend MembershipFunction make_piecewise(std::vector<Node>, double, double);
  MembershipFunction(std::vector<Node> nodes, double left_tail, double right_tail)
      : nodes_(std::move(nodes)), left_tail_(left_tail), right_tail_(right_tail) {}

  std::vector<Node> nodes_;
  double left_tail_;
  double right_tail_;
};

namespace detail {
inline bool is_degree(double d) { return std::isfinite(d) && d >= 0.0 && d <= 1.0; }
}  // namespace detail

inline MembershipFunction make_piecewise(std::vector<Node> nodes, double left_tail, double right_tail) {
  if (nodes.empty()) throw ConfigError("membership function needs at least one node");
  if (!detail::is_degree(left_tail) || !detail::is_degree(right_tail))
    throw ConfigError("membership tail degree outside [0,1]");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!std::isfinite(nodes[i].x)) throw ConfigError("membership node x is not finite");
    if (!detail::is_degree(nodes[i].degree))
      throw ConfigError("membership node " + std::to_string(i) + " has degree outside [0,1]");
    if (i > 0 && !(nodes[i - 1].x < nodes[i].x))
      throw ConfigError("membership node x values must be strictly increasing (node " + std::to_string(i) + ")");
  }
  return MembershipFunction(std::move(nodes), left_tail, right_tail);
}

inline double eval_membership(const MembershipFunction& mf, double x) { return mf(x); }

struct CurveSample {
  double x = 0.0;
  double degree = 0.0;
};

/// n evenly spaced samples over [lo, hi], both ends included.
inline std::vector<CurveSample> sample_curve(const MembershipFunction& mf, double lo, double hi, std::size_t n) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) throw InputError("sample_curve needs lo < hi");
  if (n < 2) throw InputError("sample_curve needs at least 2 samples");
  std::vector<CurveSample> out;
  out.reserve(n);
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = (i + 1 == n) ? hi : lo + step * static_cast<double>(i);
    out.push_back({x, mf(x)});
  }
  return out;
}

/// `x,degree` CSV for external plotting.
inline std::string curve_to_csv(std::span<const CurveSample> samples, int decimals = 6) {
  std::string out = "x,degree\n";
  for (const auto& s : samples) {
    out += detail::format_fixed(s.x, decimals);
    out += ',';
    out += detail::format_fixed(s.degree, decimals);
    out += '\n';
  }
  return out;
}

}  // namespace fss
