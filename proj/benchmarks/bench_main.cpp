#include <benchmark/benchmark.h>

#include <typent/typent.hpp>

namespace {

using namespace typent;

void BM_HaarUnitary(benchmark::State& state) {
  Rng rng = make_stream(1, 0);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(haar_unitary(n, rng));
  }
}
BENCHMARK(BM_HaarUnitary)->Arg(2)->Arg(4)->Arg(16);

void BM_LazyConjugation(benchmark::State& state) {
  Rng rng = make_stream(2, 0);
  const StateSpace q = build_quantum(static_cast<int>(state.range(0)));
  const Transformation t = sample_haar_unitary(q.shared_basis(), rng);
  const Vector w = q.sample_pure(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(t.apply(w));
  }
}
BENCHMARK(BM_LazyConjugation)->Arg(4)->Arg(16);

void BM_EstimateLocalPurity(benchmark::State& state) {
  const Composite comp = compose(build_quantum(2), build_quantum(static_cast<int>(state.range(0))));
  const Gram ga = analytic_gram(comp.a());
  const Gram gab = analytic_gram(comp.joint());
  const int samples = 1000;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        estimate_expected_local_purity(comp, ga, gab, 1.0, EstimateOptions{samples, seed++, 1, false}));
  }
  state.SetItemsProcessed(state.iterations() * samples);
}
BENCHMARK(BM_EstimateLocalPurity)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_AnalyticGram(benchmark::State& state) {
  const StateSpace q = build_quantum(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(analytic_gram(q));
  }
}
BENCHMARK(BM_AnalyticGram)->Arg(4)->Arg(8);

void BM_AveragedGram(benchmark::State& state) {
  const StateSpace q = build_quantum(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(invariant_gram(q, GramOptions{static_cast<int>(state.range(0)), 1, std::nullopt, 500}));
  }
}
BENCHMARK(BM_AveragedGram)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_BoxworldGroupOrbit(benchmark::State& state) {
  const StateSpace box = build_boxworld_bipartite();
  const Vector pr = pr_box();
  for (auto _ : state) {
    double s = 0.0;
    for (const auto& t : *box.group().elements) {
      s += boxworld_form(t.apply(pr));
    }
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_BoxworldGroupOrbit);

}  // namespace

BENCHMARK_MAIN();
