#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "fss/membership.hpp"
#include "fss/variables.hpp"

namespace {

const fss::MembershipFunction& partition(const char* variable, const char* label) {
  static const auto specs = fss::default_variable_specs();
  for (const auto& s : specs)
    if (s.name == variable)
      for (const auto& p : s.partitions)
        if (p.label == label) return p.mf;
  throw std::logic_error("no such partition");
}

TEST(Membership, EvaluatesPublishedSamplePoints) {
  EXPECT_DOUBLE_EQ(partition("AGE", "O")(82), 1.0);
  EXPECT_NEAR(partition("AGE", "M")(49), 11.0 / 15.0, 1e-12);
  EXPECT_DOUBLE_EQ(partition("LPN", "H")(10), 0.0);
  EXPECT_NEAR(partition("INS", "M")(5.66), 0.76, 1e-12);
}

TEST(Membership, NodeReturnsExactDegree) {
  EXPECT_EQ(partition("AGE", "Y")(25), 1.0);
  EXPECT_EQ(partition("AGE", "Y")(40), 0.0);
  EXPECT_EQ(partition("AGE", "C")(5), 1.0);
}

TEST(Membership, TailsOutsideNodeRange) {
  const auto mf = fss::make_piecewise({{50, 0}, {65, 1}}, 0, 1);
  EXPECT_EQ(mf(-1e9), 0.0);
  EXPECT_EQ(mf(1e9), 1.0);
  EXPECT_DOUBLE_EQ(mf(57.5), 0.5);
}

TEST(Membership, SingleNodeIsAStep) {
  const auto mf = fss::make_piecewise({{3, 0.4}}, 0.1, 0.9);
  EXPECT_EQ(mf(2.9), 0.1);
  EXPECT_EQ(mf(3), 0.4);
  EXPECT_EQ(mf(3.1), 0.9);
}

TEST(Membership, RejectsInvalidNodes) {
  EXPECT_THROW(fss::make_piecewise({{5, 1}, {5, 0}}, 0, 0), fss::ConfigError);
  EXPECT_THROW(fss::make_piecewise({{6, 1}, {5, 0}}, 0, 0), fss::ConfigError);
  EXPECT_THROW(fss::make_piecewise({{0, 1.5}}, 0, 0), fss::ConfigError);
  EXPECT_THROW(fss::make_piecewise({}, 0, 0), fss::ConfigError);
  EXPECT_THROW(fss::make_piecewise({{0, 1}}, -0.1, 0), fss::ConfigError);
  EXPECT_THROW(fss::make_piecewise({{0, 1}}, 0, 2), fss::ConfigError);
  EXPECT_THROW(fss::make_piecewise({{NAN, 1}}, 0, 0), fss::ConfigError);
}

TEST(Membership, RejectsNonFiniteInput) {
  const auto& mf = partition("AGE", "O");
  EXPECT_THROW(mf(std::numeric_limits<double>::quiet_NaN()), fss::InputError);
  EXPECT_THROW(mf(std::numeric_limits<double>::infinity()), fss::InputError);
}

TEST(SampleCurve, EndpointsAreNodes) {
  const auto s = fss::sample_curve(partition("AGE", "O"), 50, 65, 2);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].x, 50);
  EXPECT_EQ(s[0].degree, 0.0);
  EXPECT_EQ(s[1].x, 65);
  EXPECT_EQ(s[1].degree, 1.0);
}

TEST(SampleCurve, MatchesDirectEvaluation) {
  const auto& child = partition("AGE", "C");
  const auto s = fss::sample_curve(child, 0, 20, 5);
  ASSERT_EQ(s.size(), 5u);
  const double xs[] = {0, 5, 10, 15, 20};
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(s[i].x, xs[i]);
    EXPECT_EQ(s[i].degree, fss::eval_membership(child, xs[i]));
  }
  EXPECT_EQ(s[2].degree, 0.5);
}

TEST(SampleCurve, RejectsBadRanges) {
  const auto& mf = partition("AGE", "O");
  EXPECT_THROW(fss::sample_curve(mf, 5, 5, 2), fss::InputError);
  EXPECT_THROW(fss::sample_curve(mf, 6, 5, 2), fss::InputError);
  EXPECT_THROW(fss::sample_curve(mf, 0, 5, 1), fss::InputError);
}

TEST(SampleCurve, CsvHasHeaderAndOneLinePerSample) {
  const auto csv = fss::curve_to_csv(fss::sample_curve(partition("AGE", "O"), 50, 65, 2));
  EXPECT_EQ(csv, "x,degree\n50.000000,0.000000\n65.000000,1.000000\n");
}

// Random node lists: range, continuity and monotonicity of the interpolant.
TEST(MembershipProperty, BoundedContinuousMonotone) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 2000; ++trial) {
    const int k = 1 + static_cast<int>(u(rng) * 5);
    const bool monotone = trial % 2 == 0;
    std::vector<fss::Node> nodes;
    double x = -50 + 100 * u(rng);
    double y = u(rng);
    for (int i = 0; i < k; ++i) {
      nodes.push_back({x, y});
      x += 0.1 + 10 * u(rng);
      y = monotone ? std::min(1.0, y + 0.3 * u(rng)) : u(rng);
    }
    const auto mf = fss::make_piecewise(nodes, u(rng), u(rng));
    const double lo = nodes.front().x, hi = nodes.back().x;
    double prev = mf(lo);
    for (int i = 0; i <= 200; ++i) {
      const double xi = lo - 5 + (hi - lo + 10) * i / 200.0;
      const double d = mf(xi);
      ASSERT_GE(d, 0.0);
      ASSERT_LE(d, 1.0);
      if (xi > lo && xi + 1e-7 < hi) {
        const double h = 1e-7;
        ASSERT_NEAR(mf(xi + h), d, 1e-7 * 1e3) << "discontinuity near " << xi;
        if (monotone) ASSERT_GE(d, prev - 1e-12);
        prev = d;
      }
    }
  }
}

}  // namespace
