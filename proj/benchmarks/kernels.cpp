#include <benchmark/benchmark.h>

#include <numbers>
#include <vector>

#include "cartan/expr.hpp"
#include "cartan/form.hpp"
#include "cartan/periods.hpp"
#include "cartan/pfaff.hpp"

namespace {

using namespace cartan;

const Variables kVars{"x", "y", "z", "t"};

void BM_Eval(benchmark::State& state) {
  const Expr e = parse_expr("sin(x*y) + exp(-z^2)*cos(t) + x^3/(1 + y^2)", kVars);
  std::vector<double> p{0.3, -0.7, 0.2, 1.1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(e.eval(p));
    p[0] += 1e-9;
  }
}
BENCHMARK(BM_Eval);

void BM_Partial(benchmark::State& state) {
  const Expr e = parse_expr("sin(x*y) + exp(-z^2)*cos(t) + x^3/(1 + y^2)", kVars);
  for (auto _ : state) benchmark::DoNotOptimize(simplify(partial(e, 0)));
}
BENCHMARK(BM_Partial);

void BM_PfaffSequence(benchmark::State& state) {
  const Form a = Form::one_form(
      kVars, {parse_expr("y*z", kVars), parse_expr("x*t", kVars),
              parse_expr("sin(x)", kVars), parse_expr("-(x^2 + y^2)/2", kVars)});
  const SampleBox box = SampleBox::cube(4, -1, 1, static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(pfaff_sequence(a, box, {}).dimension());
}
BENCHMARK(BM_PfaffSequence)->Arg(16)->Arg(64)->Arg(256);

void BM_GaussLinking(benchmark::State& state) {
  const Variables s{"s"};
  const Variables t{"t"};
  const ClosedCurve c1("s", 2 * std::numbers::pi,
                       {parse_expr("cos(s)", s), parse_expr("sin(s)", s), Expr(0.0)});
  const ClosedCurve c2("t", 2 * std::numbers::pi,
                       {parse_expr("1 + cos(t)", t), Expr(0.0), parse_expr("sin(t)", t)});
  QuadratureSpec q;
  q.panels = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gauss_linking(c1, c2, q).value);
}
BENCHMARK(BM_GaussLinking)->Arg(64)->Arg(256);

}  // namespace
BENCHMARK_MAIN();
