// Serial reference against the OpenMP kernels. Arg 0 = serial, 1 = parallel.

#include <benchmark/benchmark.h>

#include "lyk/cohomology.hpp"
#include "lyk/extension.hpp"
#include "lyk/fixtures.hpp"
#include "lyk/mc.hpp"
#include "lyk/wells.hpp"

using namespace lyk;
namespace fx = lyk::fixtures;

namespace {

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::parallel : Exec::serial; }

void BM_verify_ly_sl3(benchmark::State& s) {
  const LYAlgebra a = fx::sl3_reductive(Field::rationals());
  for (auto _ : s) benchmark::DoNotOptimize(verify_ly(a, {exec_of(s)}).ok());
}
BENCHMARK(BM_verify_ly_sl3)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_validate_cocycle(benchmark::State& s) {
  Field q = Field::rationals();
  const NonAbCocycle c = fx::semidirect_cocycle(adjoint(fx::sl2(q)));
  for (auto _ : s) benchmark::DoNotOptimize(validate_cocycle(c, {exec_of(s)}).ok());
}
BENCHMARK(BM_validate_cocycle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_delta_matrix(benchmark::State& s) {
  const Representation r = adjoint(fx::sl2_triple_system(Field::rationals()));
  for (auto _ : s) benchmark::DoNotOptimize(delta_matrix(r, 1, exec_of(s)));
}
BENCHMARK(BM_delta_matrix)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_is_mc(benchmark::State& s) {
  const GradedElement pi = GradedElement::of_algebra(fx::sl3_reductive(Field::prime(5)));
  for (auto _ : s) benchmark::DoNotOptimize(is_mc(pi, exec_of(s)));
}
BENCHMARK(BM_is_mc)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_enumerate_aut_h(benchmark::State& s) {
  const ExtensionSpec e = fx::quotient_extension(fx::heisenberg(Field::prime(3)), {2});
  for (auto _ : s) benchmark::DoNotOptimize(enumerate_aut_h(e, kDefaultBudget, exec_of(s)).size());
}
BENCHMARK(BM_enumerate_aut_h)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
