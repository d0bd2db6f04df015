#include <benchmark/benchmark.h>

#include <umbral/families.hpp>
#include <umbral/kailath_segall.hpp>
#include <umbral/multivar.hpp>
#include <umbral/simulate.hpp>
#include <umbral/tsh.hpp>

using namespace umbral;

namespace {

void bm_partitions(benchmark::State& state)
{
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    // bypass the memo so the enumeration itself is timed
    std::vector<IntPartition> out;
    for (const auto& p : partitions(n))
      out.push_back(p);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(bm_partitions)->Arg(12)->Arg(20);

void bm_partial_bell(benchmark::State& state)
{
  const int n = static_cast<int>(state.range(0));
  std::vector<Poly> a(n);
  for (int i = 0; i < n; ++i)
    a[i] = Poly::var("a" + std::to_string(i + 1));
  for (auto _ : state) {
    Poly p = partial_bell(n, n / 2, a);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(bm_partial_bell)->Arg(8)->Arg(12);

void bm_q_poly(benchmark::State& state)
{
  const int k = static_cast<int>(state.range(0));
  Umbra ub = boolean_unity();
  for (auto _ : state) {
    TshPoly q = q_poly(ub, k);
    benchmark::DoNotOptimize(q.value);
  }
}
BENCHMARK(bm_q_poly)->Arg(6)->Arg(10);

void bm_series_revert(benchmark::State& state)
{
  const int n = static_cast<int>(state.range(0));
  Series f = unity().egf(n);
  for (auto _ : state) {
    Series h = f.revert();
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(bm_series_revert)->Arg(8)->Arg(12);

void bm_family_equivalence(benchmark::State& state)
{
  const int k = static_cast<int>(state.range(0));
  FamilyParams sp;
  sp.lambda = Poly::var("lambda");
  for (auto _ : state) {
    Poly u = umbral_construction(Family::actuarial, k, sp);
    Poly c = classical(Family::actuarial, k, sp);
    benchmark::DoNotOptimize(u == c);
  }
}
BENCHMARK(bm_family_equivalence)->Arg(6)->Arg(8);

void bm_dot_multi(benchmark::State& state)
{
  MultiUmbra mu(2, [](const MultiIndex& i) {
    return Poly(static_cast<long>(1 + i.total()));
  });
  Poly t = Poly::var("t");
  MultiIndex target{{2, 2}};
  for (auto _ : state) {
    MultiUmbra d = dot(t, mu);
    benchmark::DoNotOptimize(d.moment(target));
  }
}
BENCHMARK(bm_dot_multi);

void bm_gamma_sampling(benchmark::State& state)
{
  ProcessSpec spec;
  spec.kind = ProcessSpec::Kind::gamma;
  Philox rng(1, 0);
  for (auto _ : state) {
    double x = spec.sample_increment(1.0, rng);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(bm_gamma_sampling);

void bm_ks_umbral(benchmark::State& state)
{
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Poly p = ks_umbral(n);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(bm_ks_umbral)->Arg(8)->Arg(10);

} // namespace

BENCHMARK_MAIN();
