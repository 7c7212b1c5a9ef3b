#include <benchmark/benchmark.h>

#include "mufold/cli.hpp"
#include "mufold/mapgerm.hpp"
#include "mufold/milnor.hpp"
#include "mufold/parser.hpp"
#include "mufold/unfolding.hpp"

using namespace mufold;

namespace {

void bm_resultant_dense(benchmark::State& state) {
    Polynomial f = parse_polynomial("y^5+x*y^3+x^3");
    Polynomial g = parse_polynomial("y^4+x^2*y+x^5");
    for (auto _ : state) benchmark::DoNotOptimize(resultant(f, g, Var::y));
}
BENCHMARK(bm_resultant_dense);

void bm_implicitize(benchmark::State& state) {
    PuiseuxBranch b = parse_branch_spec("8:u^10+u^11");
    for (auto _ : state) benchmark::DoNotOptimize(implicitize(b));
}
BENCHMARK(bm_implicitize);

void bm_milnor_oracle(benchmark::State& state) {
    Polynomial h = parse_polynomial("(x^2-y^3)*(y^2-x^3)");
    for (auto _ : state) benchmark::DoNotOptimize(milnor_implicit_oracle(h));
}
BENCHMARK(bm_milnor_oracle);

void bm_milnor_oracle_deep(benchmark::State& state) {
    Polynomial h = implicitize(parse_branch_spec("8:u^10+u^11"));
    for (auto _ : state) benchmark::DoNotOptimize(milnor_implicit_oracle(h));
}
BENCHMARK(bm_milnor_oracle_deep);

void bm_double_point_curve(benchmark::State& state) {
    CorankOneGerm f = parse_germ_spec("y^16+x*y^15|y^18+x*y^17+x^17*y");
    for (auto _ : state) benchmark::DoNotOptimize(double_point_curve(f));
}
BENCHMARK(bm_double_point_curve);

void bm_finite_determinacy(benchmark::State& state) {
    CorankOneGerm f = parse_germ_spec("y^16+x*y^15|y^18+x*y^17+x^17*y");
    for (auto _ : state) benchmark::DoNotOptimize(is_finitely_determined(f));
}
BENCHMARK(bm_finite_determinacy);

void bm_whitney_verdict(benchmark::State& state) {
    CorankOneGerm f = parse_germ_spec("y^16+x*y^15|y^18+x*y^17+x^17*y");
    auto type = detect_qh_type(f);
    CounterexampleResult ce = counterexample_unfolding(f, *type);
    for (auto _ : state) benchmark::DoNotOptimize(whitney_verdict(ce.unfolding));
}
BENCHMARK(bm_whitney_verdict);

void bm_gcd_bivariate(benchmark::State& state) {
    Polynomial f = parse_polynomial("(y^2-x^3)^2*(y+x^2)");
    for (auto _ : state) benchmark::DoNotOptimize(squarefree_part(f, Var::y));
}
BENCHMARK(bm_gcd_bivariate);

} // namespace

BENCHMARK_MAIN();
