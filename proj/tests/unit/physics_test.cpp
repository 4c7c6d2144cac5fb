#include <gtest/gtest.h>

#include <cmath>

#include "cartan/error.hpp"
#include "cartan/physics.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace cartan {
namespace {

using testing::Gen;
using testing::xyzt;

const Variables kV = xyzt();

Expr P(const char* s) { return parse_expr(s, kV); }
Vec3 P3(const char* a, const char* b, const char* c) { return {P(a), P(b), P(c)}; }

const SampleBox& box() {
  static const SampleBox b = SampleBox::cube(4, -1, 1, 100, 21);
  return b;
}

double max_abs(const Expr& e) { return sampled_max_abs(Form::scalar(kV, e), box()); }
double max_abs(const Vec3& v) {
  return std::max({max_abs(v[0]), max_abs(v[1]), max_abs(v[2])});
}

EMPotentials em(Vec3 a, Expr phi) { return {kV, std::move(a), std::move(phi)}; }
FluidState fluid(Vec3 v, Expr psi, double nu = 0.0) { return {kV, std::move(v), std::move(psi), nu}; }

const char* kAbc[3] = {"sin(z) + cos(y)", "sin(x) + cos(z)", "sin(y) + cos(x)"};
FluidState abc(double nu) {
  return fluid(P3(kAbc[0], kAbc[1], kAbc[2]),
               P("-((sin(z) + cos(y))^2 + (sin(x) + cos(z))^2 + (sin(y) + cos(x))^2)/2"), nu);
}

void expect_vec(const Vec3& v, std::array<double, 3> want, const std::vector<double>& p) {
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(v[i].eval(p), want[i], 1e-12) << i;
}

const std::vector<double> kP{0.3, -0.6, 0.8, 0.25};

TEST(EmFields, Examples) {
  EMFields f = em_fields(em(P3("-y", "x", "0"), P("0")));
  expect_vec(f.B, {0, 0, 2}, kP);
  expect_vec(f.E, {0, 0, 0}, kP);
  f = em_fields(em(P3("0", "0", "0"), P("x")));
  expect_vec(f.E, {-1, 0, 0}, kP);
  expect_vec(f.B, {0, 0, 0}, kP);
  f = em_fields(em(P3("t", "0", "0"), P("0")));
  expect_vec(f.E, {-1, 0, 0}, kP);
}

TEST(EmFields, AgreeWithGibbsFormulas) {
  Gen g(3);
  for (int i = 0; i < 10; ++i) {
    const EMPotentials p = em(g.poly3(4), g.polynomial(4));
    const EMFields f = em_fields(p);
    const Vec3 e = Vec3{Expr(0.0), Expr(0.0), Expr(0.0)} - d_dt(p.A) - grad(p.phi);
    ASSERT_LE(max_abs(f.E - e), 1e-9);
    ASSERT_LE(max_abs(f.B - curl(p.A)), 1e-9);
  }
}

TEST(Faraday, VanishesForPotentials) {
  Gen g(5);
  for (int i = 0; i < 20; ++i) {
    std::vector<Expr> c;
    const Vec3 a{g.coefficient(4), g.coefficient(4), g.coefficient(4)};
    const FaradayResidual r = maxwell_faraday_residual(em(a, g.coefficient(4)));
    ASSERT_LE(max_abs(r.curl_e_plus_db_dt), 1e-9);
    ASSERT_LE(max_abs(r.div_b), 1e-9);
  }
  for (const EMPotentials& p : {em(P3("-y", "x", "0"), P("0")), em(P3("0", "0", "0"), P("x")),
                                em(P3("t", "0", "0"), P("0"))}) {
    const FaradayResidual r = maxwell_faraday_residual(p);
    EXPECT_EQ(max_abs(r.curl_e_plus_db_dt), 0.0);
    EXPECT_EQ(max_abs(r.div_b), 0.0);
  }
  EMFields bad = em_fields(em(P3("-y", "x", "0"), P("0")));
  bad.B[0] = bad.B[0] + P("x");
  EXPECT_DOUBLE_EQ(maxwell_faraday_residual(bad).div_b.eval(kP), 1.0);
}

TEST(ChargeCurrent, Examples) {
  const ChargeCurrent c = charge_current(excitation_form(kV, P3("x", "y", "z"), P3("0", "0", "0")));
  EXPECT_DOUBLE_EQ(c.rho.eval(kP), 3.0);
  expect_vec(c.current, {0, 0, 0}, kP);
  const ChargeCurrent z = charge_current(Form(kV, 2));
  EXPECT_EQ(sampled_max_abs(z.J, box()), 0.0);
  EXPECT_THROW(charge_current(Form(kV, 1)), ContextError);
  EXPECT_THROW(charge_current(Form(Variables{"x", "y", "z"}, 2)), ContextError);
}

TEST(ChargeCurrent, MaxwellAmpereAndGaussProperty) {
  Gen g(8);
  for (int i = 0; i < 15; ++i) {
    const Vec3 d = g.poly3(4);
    const Vec3 h = g.poly3(4);
    const ChargeCurrent c = charge_current(excitation_form(kV, d, h));
    ASSERT_LE(max_abs(c.current - (curl(h) - d_dt(d))), 1e-9);
    ASSERT_LE(max_abs(c.rho - div(d)), 1e-9);
    ASSERT_TRUE(ext_d(c.J).exceeds_top() || sampled_max_abs(ext_d(c.J), box()) <= 1e-9);
    const Form g2 = g.form(kV, 2);
    ASSERT_LE(sampled_max_abs(ext_d(charge_current(g2).J), box()), 1e-9);
  }
}

TEST(Continuity, Examples) {
  EXPECT_EQ(max_abs(continuity_anomaly(kV, P("1"), P3("2", "-1", "3"))), 0.0);
  EXPECT_DOUBLE_EQ(continuity_anomaly(kV, P("1"), P3("x", "0", "0")).eval(kP), 1.0);
  EXPECT_LE(max_abs(continuity_anomaly(kV, P("exp(-t)"), P3("x", "0", "0"))), 1e-12);
}

TEST(Continuity, MatchesGibbsProperty) {
  Gen g(10);
  for (int i = 0; i < 15; ++i) {
    const Expr rho = g.coefficient(4);
    const Vec3 v = g.poly3(4);
    const Expr want = div(rho * v) + partial(rho, kTime);
    ASSERT_LE(max_abs(continuity_anomaly(kV, rho, v) - want), 1e-9);
  }
}

TEST(Classify, Examples) {
  const FluidState rigid = fluid(P3("-y", "x", "0"), P("(x^2 + y^2)/2"));
  EXPECT_EQ(classify_process(rigid.flow(), rigid.action(), box(), {}), ProcessClass::Extremal);

  const FluidState free = fluid(P3("-y", "x", "0"), P("0"));
  EXPECT_EQ(classify_process(free.flow(), free.action(), box(), {}, P("-(x^2 + y^2)/2")),
            ProcessClass::BernoulliCasimir);
  EXPECT_EQ(classify_process(free.flow(), free.action(), box(), {}, P("(x^2 + y^2)/2")),
            ProcessClass::SymplecticClosed);
  EXPECT_EQ(classify_process(free.flow(), free.action(), box(), {}), ProcessClass::SymplecticClosed);

  const VectorField dt(kV, {P("0"), P("0"), P("0"), P("1")});
  const Form a = Form::one_form(kV, {P("0"), P("t*x"), P("0"), P("0")});
  EXPECT_EQ(classify_process(dt, a, box(), {}), ProcessClass::NonUniform);
  EXPECT_THROW(classify_process(dt, Form(kV, 2), box(), {}), ContextError);
}

TEST(Classify, KelvinClosednessForBernoulliCasimir) {
  Gen g(12);
  for (int i = 0; i < 10; ++i) {
    // A = v·dr − Ψ dt with i(V)dA = dΘ by construction: A = dχ + Θ-shift.
    const Expr chi = g.polynomial(4);
    const Expr theta = g.polynomial(4);
    const Form a = ext_d(Form::scalar(kV, chi)) + Form::one_form(kV, {P("0"), P("0"), P("0"), theta});
    const VectorField v(kV, {P("0"), P("0"), P("0"), P("1")});
    const Form w = interior(v, ext_d(a));
    // With V = ∂t, i(V)d(θ dt) = −dθ + ∂θ/∂t dt; supply the matching Θ.
    if (!form_is_zero(w - ext_d(Form::scalar(kV, -theta)), box(), {})) continue;
    ASSERT_EQ(classify_process(v, a, box(), {}, -theta), ProcessClass::BernoulliCasimir);
    ASSERT_LE(sampled_max_abs(ext_d(lie(v, a)), box()), 1e-9);
  }
  const FluidState free = fluid(P3("-y", "x", "0"), P("0"));
  ASSERT_EQ(classify_process(free.flow(), free.action(), box(), {}, P("-(x^2 + y^2)/2")),
            ProcessClass::BernoulliCasimir);
  EXPECT_LE(sampled_max_abs(ext_d(lie(free.flow(), free.action())), box()), 1e-9);
}

TEST(Master, Examples) {
  const EMPotentials b2 = em(P3("-y", "x", "0"), P("0"));
  MasterResiduals r = master_residuals(b2, P3("-y", "x", "0"));
  EXPECT_EQ(max_abs(r.r1), 0.0);
  EXPECT_EQ(max_abs(r.r2), 0.0);
  r = master_residuals(b2, P3("1", "0", "0"));
  EXPECT_EQ(max_abs(r.r1), 0.0);
  r = master_residuals(em(P3("0", "0", "0"), P("0")), P3("x*y", "z", "t"));
  EXPECT_EQ(max_abs(r.r1), 0.0);
  EXPECT_EQ(max_abs(r.r2), 0.0);
}

TEST(Master, MatchesFiniteDifferenceCurl) {
  Gen g(14);
  using testing::Field3;
  for (int i = 0; i < 5; ++i) {
    const EMPotentials p = em(g.poly3(4), g.polynomial(4));
    const Vec3 v = g.poly3(4);
    const EMFields f = em_fields(p);
    const Vec3 u = f.E + cross(v, f.B);
    const Field3 uf{testing::as_field(u[0]), testing::as_field(u[1]), testing::as_field(u[2])};
    const Field3 c = testing::fd_curl(uf);
    const MasterResiduals r = master_residuals(p, v);
    const SampleBox grid = SampleBox::cube(4, -1, 1, 10, 3);
    for (const auto& pt : grid.points()) {
      for (std::size_t k = 0; k < 3; ++k) {
        ASSERT_NEAR(r.r1[k].eval(pt), c[k](pt), 1e-6 * (1 + std::abs(c[k](pt))));
      }
    }
  }
}

TEST(Euler, Examples) {
  EXPECT_LE(max_abs(euler_residual(fluid(P3("-y", "x", "0"), P("(x^2 + y^2)/2")))), 1e-12);
  EXPECT_EQ(max_abs(euler_residual(fluid(P3("0", "0", "0"), P("3")))), 0.0);
  const Vec3 r = euler_residual(fluid(P3("-y", "x", "0"), P("0")));
  expect_vec(r, {-kP[0], -kP[1], 0}, kP);
  EXPECT_LE(max_abs(euler_residual(abc(0))), 1e-12);
}

TEST(Euler, MatchesGibbsFormProperty) {
  Gen g(16);
  for (int i = 0; i < 10; ++i) {
    const FluidState f = fluid(g.poly3(4), g.polynomial(4));
    const Vec3 omega = curl(f.v);
    const Vec3 want = d_dt(f.v) + grad(dot(f.v, f.v) / Expr(2.0)) - cross(f.v, omega) + grad(f.psi);
    ASSERT_LE(max_abs(euler_residual(f) - want), 1e-9);
    ASSERT_LE(max_abs(ns_residual(f).momentum - want), 1e-9);
  }
}

TEST(Euler, ZeroIffExtremal) {
  const std::vector<FluidState> family{
      fluid(P3("-y", "x", "0"), P("(x^2 + y^2)/2")), fluid(P3("-y", "x", "0"), P("0")),
      abc(0), fluid(P3(kAbc[0], kAbc[1], kAbc[2]), P("0")), fluid(P3("y", "0", "0"), P("0")),
      fluid(P3("1", "2", "3"), P("x*t"))};
  for (const FluidState& f : family) {
    const bool zero = max_abs(euler_residual(f)) <= 1e-9;
    EXPECT_EQ(zero, classify_process(f.flow(), f.action(), box(), {}) == ProcessClass::Extremal);
  }
}

TEST(Helmholtz, Examples) {
  EXPECT_EQ(max_abs(helmholtz_residual(fluid(P3("-y", "x", "0"), P("0")))), 0.0);
  EXPECT_LE(max_abs(helmholtz_residual(fluid(grad(P("x^2*y + sin(z)*t")), P("0")))), 1e-12);
  const FluidState shear = fluid(P3("z", "0", "0"), P("0"));
  const Vec3 r = helmholtz_residual(shear);
  // Oracle: curl(v×ω) by finite differences with ω read off by hand.
  const testing::Field3 vxw{[](const std::vector<double>&) { return 0.0; },
                            [](const std::vector<double>&) { return 0.0; },
                            [](const std::vector<double>& p) { return p[2]; }};
  const testing::Field3 c = testing::fd_curl(vxw);
  for (std::size_t k = 0; k < 3; ++k) EXPECT_NEAR(r[k].eval(kP), c[k](kP), 1e-9);
}

TEST(Helmholtz, FiniteDifferenceProperty) {
  Gen g(18);
  for (int i = 0; i < 5; ++i) {
    const FluidState f = fluid(g.poly3(4), P("0"));
    const Vec3 w = curl(f.v);
    const Vec3 vxw = cross(f.v, w);
    const testing::Field3 c = testing::fd_curl(
        {testing::as_field(vxw[0]), testing::as_field(vxw[1]), testing::as_field(vxw[2])});
    const Vec3 r = helmholtz_residual(f);
    const SampleBox grid = SampleBox::cube(4, -1, 1, 10, 5);
    for (const auto& pt : grid.points()) {
      for (std::size_t k = 0; k < 3; ++k) {
        const double want = c[k](pt) - testing::fd(testing::as_field(w[k]), pt, 3);
        ASSERT_NEAR(r[k].eval(pt), want, 1e-6 * (1 + std::abs(want)));
      }
    }
  }
}

TEST(Parity, Examples) {
  const std::vector<double> origin{0, 0, 0, 0};
  for (double nu : {0.01, 1.0}) {
    EXPECT_NEAR(ns_parity(abc(nu)).eval(origin), -6 * nu, 1e-12);
    EXPECT_NEAR(ns_parity_from_forms(abc(nu)).eval(origin), -6 * nu, 1e-12);
  }
  EXPECT_TRUE(ns_parity(abc(0)).is_constant(0.0));
  EXPECT_LE(max_abs(ns_parity_from_forms(abc(0))), 1e-12);
  EXPECT_LE(max_abs(ns_parity(fluid(grad(P("x*y*z + t*x^2")), P("0"), 0.3))), 1e-12);
  // Beltrami: ω = v, so the coefficient is −2ν|v|².
  const FluidState f = abc(0.5);
  const Expr want = Expr(-1.0) * dot(f.v, f.v);
  EXPECT_LE(max_abs(ns_parity(f) - want), 1e-12);
}

TEST(Parity, FormsAgreeWithFormulaProperty) {
  Gen g(20);
  for (int i = 0; i < 10; ++i) {
    const FluidState f = fluid(g.poly3(4), g.polynomial(4), g.real(0.0, 2.0));
    ASSERT_LE(max_abs(ns_parity(f) - ns_parity_from_forms(f)), 1e-8);
  }
}

TEST(Parity, FiniteDifferenceOracle) {
  const double nu = 0.01;
  const FluidState f = abc(nu);
  testing::Field3 v{testing::as_field(f.v[0]), testing::as_field(f.v[1]), testing::as_field(f.v[2])};
  const testing::Field3 w = testing::fd_curl(v);
  const testing::Field3 cw = testing::fd_curl(w);
  const Expr k = ns_parity(f);
  const SampleBox grid = SampleBox::cube(4, -2, 2, 25, 8);
  for (const auto& p : grid.points()) {
    double dotp = 0;
    for (std::size_t i = 0; i < 3; ++i) dotp += w[i](p) * cw[i](p);
    EXPECT_NEAR(k.eval(p), -2 * nu * dotp, 1e-6);
  }
}

TEST(NavierStokes, Examples) {
  const FluidState rigid = fluid(P3("-y", "x", "0"), P("(x^2 + y^2)/2"));
  for (double nu : {0.0, 0.1, 3.0}) {
    FluidState f = rigid;
    f.nu = nu;
    EXPECT_LE(max_abs(ns_residual(f).momentum), 1e-12);
  }
  const NavierStokesResidual shear = ns_residual(fluid(P3("y^2", "0", "0"), P("0"), 0.25));
  expect_vec(shear.momentum, {-0.5, 0, 0}, kP);
  EXPECT_EQ(max_abs(shear.divergence), 0.0);
  EXPECT_DOUBLE_EQ(ns_residual(fluid(P3("x", "0", "0"), P("0"))).divergence.eval(kP), 1.0);
  const FluidState e = fluid(P3("-y", "x*t", "z"), P("x"));
  EXPECT_LE(max_abs(ns_residual(e).momentum - euler_residual(e)), 1e-12);
}

TEST(Helicity, Examples) {
  const HelicityDiagnostics irr =
      helicity_diagnostics(fluid(grad(P("x*y - z^2")), P("x")), box(), {});
  EXPECT_EQ(max_abs(irr.h), 0.0);
  EXPECT_LE(max_abs(irr.T), 1e-12);
  EXPECT_LE(max_abs(irr.conservation), 1e-12);

  const HelicityDiagnostics a = helicity_diagnostics(abc(0.1), box(), {});
  EXPECT_LE(max_abs(a.h - dot(abc(0).v, abc(0).v)), 1e-12);
  EXPECT_FALSE(a.dH_zero.zero);
  EXPECT_TRUE(helicity_diagnostics(abc(0), box(), {}).dH_zero.zero);

  const HelicityDiagnostics rigid =
      helicity_diagnostics(fluid(P3("-y", "x", "0"), P("(x^2 + y^2)/2")), box(), {});
  EXPECT_LE(max_abs(rigid.conservation), 1e-12);
  EXPECT_TRUE(rigid.dH_zero.zero);
}

TEST(Helicity, TorsionCurrentAgreesOnEulerFlows) {
  for (const FluidState& f : {fluid(P3("-y", "x", "0"), P("(x^2 + y^2)/2")), abc(0),
                              fluid(P3("sin(z)", "cos(z)", "0"), P("-1/2"))}) {
    ASSERT_LE(max_abs(euler_residual(f)), 1e-9);
    const HelicityDiagnostics d = helicity_diagnostics(f, box(), {});
    const TorsionCurrent tc = torsion_current(f.action());
    EXPECT_LE(max_abs(tc.T - d.T), 1e-9);
    EXPECT_LE(max_abs(tc.h - d.h), 1e-9);
    EXPECT_LE(max_abs(d.conservation), 1e-9);
  }
}

TEST(Physics, RejectsWrongContext) {
  const Variables v3{"x", "y", "z"};
  EXPECT_THROW(FluidState({v3, {Expr(0.0), Expr(0.0), Expr(0.0)}, Expr(0.0), 0.0}).action(), ContextError);
  EXPECT_THROW(excitation_form(v3, P3("0", "0", "0"), P3("0", "0", "0")), ContextError);
}

}  // namespace
}  // namespace cartan
