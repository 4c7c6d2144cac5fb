#include <gtest/gtest.h>

#include "cartan/error.hpp"
#include "cartan/pfaff.hpp"
#include "generators.hpp"

namespace cartan {
namespace {

using testing::Gen;
using testing::xyz;
using testing::xyzt;

Form one_form(const Variables& v, std::vector<std::string> coeffs) {
  std::vector<Expr> c;
  for (const auto& s : coeffs) c.push_back(parse_expr(s, v));
  return Form::one_form(v, c);
}

const SampleBox& box3() {
  static const SampleBox b = SampleBox::cube(3, -1, 1, 64, 4);
  return b;
}
const SampleBox& box4() {
  static const SampleBox b = SampleBox::cube(4, -1, 1, 64, 4);
  return b;
}

TEST(PfaffSequence, ExactForm) {
  const PfaffSequence s = pfaff_sequence(one_form(xyz(), {"0", "0", "1"}), box3(), {});
  ASSERT_EQ(s.elements.size(), 2u);
  EXPECT_TRUE(s.elements[0].nonvanishing);
  EXPECT_FALSE(s.elements[1].nonvanishing);
  EXPECT_EQ(s.elements[1].label, "F");
  EXPECT_EQ(s.dimension(), 1);
}

TEST(PfaffSequence, FrobeniusWithExclusion) {
  const Variables v = xyz();
  TolerancePolicy pol;
  pol.exclusion = Exclusion{parse_expr("x", v), 0.05};
  const PfaffSequence s = pfaff_sequence(one_form(v, {"0", "x", "0"}), box3(), pol);
  ASSERT_EQ(s.elements.size(), 3u);
  EXPECT_EQ(to_string(s.elements[1].form.pruned()), "dx∧dy");
  EXPECT_FALSE(s.elements[2].nonvanishing);
  EXPECT_EQ(s.dimension(), 2);
}

TEST(PfaffSequence, Contact) {
  const PfaffSequence s = pfaff_sequence(one_form(xyz(), {"0", "x", "1"}), box3(), {});
  ASSERT_EQ(s.elements.size(), 3u);
  EXPECT_EQ(to_string(s.elements[2].form.pruned()), "dx∧dy∧dz");
  EXPECT_EQ(s.dimension(), 3);
}

TEST(PfaffSequence, Spacetime) {
  const PfaffSequence s = pfaff_sequence(one_form(xyzt(), {"0", "x", "0", "z"}), box4(), {});
  ASSERT_EQ(s.elements.size(), 4u);
  EXPECT_EQ(s.elements[3].label, "K");
  EXPECT_EQ(s.elements[3].form.degree(), 4);
  EXPECT_EQ(to_string(s.elements[3].form.pruned()), "2 dx∧dy∧dz∧dt");
  EXPECT_EQ(s.dimension(), 4);
}

TEST(PfaffSequence, ContinuesPastK) {
  const Variables v{"x", "y", "z", "t", "w"};
  const PfaffSequence s = pfaff_sequence(one_form(v, {"0", "x", "0", "z", "1"}), SampleBox::cube(5, -1, 1, 32), {});
  ASSERT_EQ(s.elements.size(), 5u);
  EXPECT_EQ(s.elements[4].label, "E5");
  EXPECT_EQ(s.elements[4].form.degree(), 5);
  EXPECT_EQ(s.dimension(), 5);
  for (std::size_t k = 0; k < s.elements.size(); ++k) {
    EXPECT_EQ(s.elements[k].form.degree(), static_cast<int>(k) + 1);
  }
}

TEST(PfaffSequence, RejectsNonOneForms) {
  EXPECT_THROW(pfaff_sequence(Form::monomial(xyz(), {0, 1}), box3(), {}), ContextError);
}

TEST(PfaffSequence, InconclusivePropagates) {
  const Variables v = xyz();
  TolerancePolicy pol;
  pol.exclusion = Exclusion{parse_expr("0", v), 1.0};
  EXPECT_THROW(pfaff_sequence(one_form(v, {"0", "x", "0"}), box3(), pol), InconclusiveError);
}

TEST(PointwiseDimension, UndefinedWhereExcluded) {
  const Variables v = xyz();
  TolerancePolicy pol;
  pol.exclusion = Exclusion{parse_expr("x", v), 0.3};
  const SampleBox box = SampleBox::cube(3, -1, 1, 200, 11);
  const PfaffSequence s = pfaff_sequence(one_form(v, {"0", "x", "0"}), box, pol);
  const auto dims = pointwise_dimension(s, box, pol);
  ASSERT_EQ(dims.size(), box.samples());
  std::size_t undefined = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (std::abs(box.points()[i][0]) <= 0.3) {
      EXPECT_FALSE(dims[i].has_value());
      ++undefined;
    } else {
      EXPECT_EQ(dims[i], 2);
    }
  }
  EXPECT_GT(undefined, 0u);
}

TEST(PointwiseDimension, UndefinedWhereSingular) {
  const Variables v = xyz();
  const SampleBox box(std::vector<Interval>{{-1, 1}, {-1, 1}, {-1, 1}}, 50, 3);
  const PfaffSequence s = pfaff_sequence(one_form(v, {"0", "log(x)", "0"}), box, {});
  const auto dims = pointwise_dimension(s, box, {});
  for (std::size_t i = 0; i < dims.size(); ++i) {
    EXPECT_EQ(dims[i].has_value(), box.points()[i][0] > 0);
  }
}

TEST(Torsion, Examples) {
  const Variables v = xyzt();
  const TorsionCurrent a = torsion_current(one_form(v, {"-y", "x", "z", "0"}));
  const std::vector<double> p{0.3, -0.4, 0.7, 0.1};
  for (const Expr& c : a.T) EXPECT_DOUBLE_EQ(c.eval(p), 0.0);
  EXPECT_DOUBLE_EQ(a.h.eval(p), 1.4);

  const TorsionCurrent g =
      torsion_current(ext_d(Form::scalar(v, parse_expr("x^2*y + sin(z) - t^2/2", v))));
  for (const Expr& c : g.T) EXPECT_NEAR(c.eval(p), 0.0, 1e-15);
  EXPECT_NEAR(g.h.eval(p), 0.0, 1e-15);

  const TorsionCurrent r = torsion_current(one_form(v, {"-y", "x", "0", "-1"}));
  EXPECT_DOUBLE_EQ(r.T[0].eval(p), 0.0);
  EXPECT_DOUBLE_EQ(r.T[1].eval(p), 0.0);
  EXPECT_DOUBLE_EQ(r.T[2].eval(p), 2.0);
  EXPECT_DOUBLE_EQ(r.h.eval(p), 0.0);

  EXPECT_THROW(torsion_current(one_form(xyz(), {"x", "y", "z"})), ContextError);
}

TEST(Torsion, MatchesThreeFormProperty) {
  const Variables v = xyzt();
  Gen g(77);
  for (int i = 0; i < 30; ++i) {
    const Form a = g.form(v, 1);
    const TorsionCurrent direct = torsion_current(a);
    const TorsionCurrent fromform = torsion_from_three_form(wedge(a, ext_d(a)));
    for (const auto& p : box4().points()) {
      for (int k = 0; k < 3; ++k) {
        ASSERT_NEAR(direct.T[static_cast<std::size_t>(k)].eval(p),
                    fromform.T[static_cast<std::size_t>(k)].eval(p), 1e-9);
      }
      ASSERT_NEAR(direct.h.eval(p), fromform.h.eval(p), 1e-9);
    }
  }
}

TEST(AnalyzePfaff, ConnectednessFollowsTorsion) {
  const Variables v = xyz();
  EXPECT_TRUE(analyze_pfaff(one_form(v, {"0", "0", "1"}), box3(), {}).connected);
  EXPECT_TRUE(analyze_pfaff(one_form(v, {"0", "x", "0"}), box3(), {}).connected);
  EXPECT_FALSE(analyze_pfaff(one_form(v, {"0", "x", "1"}), box3(), {}).connected);
  const PfaffReport r4 = analyze_pfaff(one_form(xyzt(), {"0", "x", "0", "z"}), box4(), {});
  EXPECT_FALSE(r4.connected);
  ASSERT_TRUE(r4.parity.has_value());
  EXPECT_DOUBLE_EQ(r4.parity->eval(std::vector<double>{0, 0, 0, 0}), 2.0);
  ASSERT_TRUE(r4.torsion.has_value());
  EXPECT_FALSE(analyze_pfaff(one_form(v, {"0", "x", "1"}), box3(), {}).torsion.has_value());
}

TEST(AnalyzePfaff, CriterionPropertyAndFrobeniusBound) {
  Gen g(90);
  for (int i = 0; i < 30; ++i) {
    const Variables v = g.coin() ? xyz() : xyzt();
    const SampleBox& box = v.size() == 3 ? box3() : box4();
    Form a = g.form(v, 1);
    // Half the cases are made integrable: f dg.
    if (g.coin()) {
      const Form dg = ext_d(Form::scalar(v, g.polynomial(v.size())));
      a = g.polynomial(v.size()) * dg;
    }
    if (form_is_zero(a, box, {})) continue;
    const PfaffReport r = analyze_pfaff(a, box, {});
    const bool h_zero = r.sequence.elements.size() < 3 || !r.sequence.elements[2].nonvanishing;
    ASSERT_EQ(r.connected, h_zero);
    ASSERT_EQ(is_connected(build_cartan_topology(r.sequence)), h_zero);
    ASSERT_TRUE(verify_d_is_limit_operator(build_cartan_topology(r.sequence)));
    if (form_is_zero(wedge(a, ext_d(a)), box, {})) ASSERT_LE(r.dimension, 2);
    ASSERT_GE(r.dimension, 1);
    ASSERT_LE(r.dimension, static_cast<int>(v.size()));
  }
}

TEST(BuildTopology, RequiresNonvanishingElement) {
  const PfaffSequence s = pfaff_sequence(one_form(xyz(), {"0", "0", "0"}), box3(), {});
  EXPECT_EQ(s.dimension(), 0);
  EXPECT_THROW(build_cartan_topology(s), ContextError);
  const PfaffSequence two = pfaff_sequence(one_form(xyz(), {"0", "x", "0"}), box3(), {});
  const FiniteTopology t = build_cartan_topology(two);
  EXPECT_EQ(t.labels(), (std::vector<std::string>{"A", "F"}));
  EXPECT_EQ(t.opens().size(), 3u);
}

}  // namespace
}  // namespace cartan
