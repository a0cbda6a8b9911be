// Serial reference kernels against their OpenMP counterparts on the hot loops
// of the check suites: homomorphism search, pointwise order, law refutation.

#include <benchmark/benchmark.h>

#include "replete/algebra.hpp"
#include "replete/kernels.hpp"

namespace {

using namespace replete;

// Bound-preserving homomorphisms src -> dst as a constraint problem.
kernels::MapProblem hom_problem(const Algebra& src, const Algebra& dst) {
  kernels::MapProblem p = kernels::monotone_problem(src.carrier(), dst.carrier());
  p.allowed.assign(src.size(), {});
  p.allowed[*src.carrier().bottom()] = {*dst.carrier().bottom()};
  p.allowed[*src.carrier().top()] = {*dst.carrier().top()};
  p.cod_ops.push_back(dst.table(0));
  p.cod_arity.push_back(2);
  for (Index a = 0; a < src.size(); ++a)
    for (Index b = 0; b < src.size(); ++b) p.equations.push_back({0, {a, b}, src.op(a, b)});
  return p;
}

const kernels::MapProblem& repletion_problem() {
  static const kernels::MapProblem p = [] {
    const Algebra a = make_prototype(Prototype::A);
    return hom_problem(power_algebra(a, Poset::antichain(3)).algebra, a);
  }();
  return p;
}

const kernels::MapProblem& transformer_problem() {
  static const kernels::MapProblem p = [] {
    const Algebra a = make_prototype(Prototype::A);
    return hom_problem(power_algebra(a, Poset::antichain(2)).algebra, power_algebra(a, Poset::chain(3)).algebra);
  }();
  return p;
}

const std::vector<Table>& order_maps() {
  static const std::vector<Table> maps = enumerate_monotone_tables(Poset::antichain(4), Poset::chain(3));
  return maps;
}

bool associative_a(std::span<const Index> v) {
  static const Algebra a = power_algebra(make_prototype(Prototype::A), Poset::antichain(3)).algebra;
  return a.op(v[0], a.op(v[1], v[2])) == a.op(a.op(v[0], v[1]), v[2]);
}

void BM_SolveRepletionSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::solve(repletion_problem()));
}
void BM_SolveRepletionOmp(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::solve(repletion_problem()));
}
void BM_SolveTransformersSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::solve(transformer_problem()));
}
void BM_SolveTransformersOmp(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::solve(transformer_problem()));
}
void BM_PointwiseOrderSerial(benchmark::State& state) {
  const Poset cod = Poset::chain(3);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::pointwise_order(order_maps(), cod));
}
void BM_PointwiseOrderOmp(benchmark::State& state) {
  const Poset cod = Poset::chain(3);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::pointwise_order(order_maps(), cod));
}
void BM_LawScanSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::first_failure(3, 27, associative_a));
}
void BM_LawScanOmp(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::first_failure(3, 27, associative_a));
}

}  // namespace

BENCHMARK(BM_SolveRepletionSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveRepletionOmp)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveTransformersSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveTransformersOmp)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PointwiseOrderSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PointwiseOrderOmp)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LawScanSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LawScanOmp)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
