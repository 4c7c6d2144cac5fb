#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "cartan/error.hpp"
#include "cartan/quadrature.hpp"

namespace cartan {
namespace {

TEST(CompositeNodes, WeightsSumToLength) {
  for (QuadratureRule r : {QuadratureRule::Trapezoid, QuadratureRule::Simpson}) {
    const NodeSet n = composite_nodes(r, 16, -1.0, 2.0);
    ASSERT_EQ(n.nodes.size(), 17u);
    EXPECT_DOUBLE_EQ(n.nodes.front(), -1.0);
    EXPECT_DOUBLE_EQ(n.nodes.back(), 2.0);
    EXPECT_NEAR(std::accumulate(n.weights.begin(), n.weights.end(), 0.0), 3.0, 1e-14);
  }
  const NodeSet s = composite_nodes(QuadratureRule::Simpson, 8, 0, 8);
  EXPECT_NEAR(s.weights[0], 1.0 / 3, 1e-15);
  EXPECT_NEAR(s.weights[1], 4.0 / 3, 1e-15);
  EXPECT_NEAR(s.weights[2], 2.0 / 3, 1e-15);
}

TEST(Integrate, ExactForLowDegree) {
  QuadratureSpec q;
  q.panels = 8;
  EXPECT_NEAR(integrate([](double x) { return x * x * x - x; }, 0, 2, q).value, 2.0, 1e-14);
  q.rule = QuadratureRule::Trapezoid;
  EXPECT_NEAR(integrate([](double x) { return 3 * x + 1; }, 0, 2, q).value, 8.0, 1e-14);
}

TEST(Integrate, ObservedOrder) {
  auto f = [](double x) { return std::exp(x) * std::sin(3 * x); };
  const double exact = (std::exp(1.0) * (std::sin(3.0) - 3 * std::cos(3.0)) + 3) / 10;
  for (auto [rule, order] : {std::pair{QuadratureRule::Trapezoid, 2}, std::pair{QuadratureRule::Simpson, 4}}) {
    QuadratureSpec q;
    q.rule = rule;
    q.panels = 16;
    const double e1 = std::abs(integrate(f, 0, 1, q).value - exact);
    q.panels = 32;
    const double e2 = std::abs(integrate(f, 0, 1, q).value - exact);
    EXPECT_NEAR(std::log2(e1 / e2), order, 0.1);
  }
}

TEST(Refine, RichardsonImprovesAndReportsTable) {
  auto f = [](double x) { return 1.0 / (1.0 + x * x); };
  QuadratureSpec q;
  q.rule = QuadratureRule::Trapezoid;
  q.panels = 8;
  q.refinements = 3;
  q.tol = 0.0;
  const QuadratureResult r = integrate(f, 0, 1, q);
  ASSERT_EQ(r.table.size(), 4u);
  EXPECT_FALSE(r.table[0].extrapolated.has_value());
  EXPECT_EQ(r.table[3].panels, 64u);
  const double exact = std::numbers::pi / 4;
  EXPECT_LT(std::abs(r.value - exact), std::abs(r.table.back().value - exact) / 100);
  ASSERT_TRUE(r.error.has_value());
  EXPECT_FALSE(r.converged);
}

TEST(Refine, ConvergedReturnsFinestRawValue) {
  QuadratureSpec q;
  q.panels = 8;
  q.refinements = 2;
  q.tol = 1e-12;
  const QuadratureResult r = integrate([](double x) { return x * x; }, 0, 3, q);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.value, r.table.back().value);
  EXPECT_LE(*r.error, 1e-12);
}

TEST(Refine, NoRefinementHasNoErrorEstimate) {
  const QuadratureResult r = integrate([](double x) { return x; }, 0, 1, {});
  EXPECT_FALSE(r.error.has_value());
  EXPECT_EQ(r.table.size(), 1u);
}

TEST(Spec, Validation) {
  QuadratureSpec q;
  q.panels = 4;
  EXPECT_THROW(q.validate(), ContextError);
  q.panels = 9;
  EXPECT_THROW(q.validate(), ContextError);
  q.rule = QuadratureRule::Trapezoid;
  EXPECT_NO_THROW(q.validate());
  q.tol = -1;
  EXPECT_THROW(q.validate(), ContextError);
  EXPECT_STREQ(to_string(QuadratureRule::Simpson), "simpson");
  EXPECT_EQ(QuadratureSpec{}.order(), 4);
}

}  // namespace
}  // namespace cartan
