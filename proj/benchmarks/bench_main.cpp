#include <benchmark/benchmark.h>

#include <birack/braid.hpp>
#include <birack/enumerate.hpp>
#include <birack/fixtures.hpp>
#include <birack/plat.hpp>

using namespace birack;

static void BM_Enumerate(benchmark::State& state) {
  SearchOptions o;
  o.size = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_biracks(o).entries.size());
}
BENCHMARK(BM_Enumerate)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_EnumerateJobs(benchmark::State& state) {
  SearchOptions o;
  o.size = 4;
  o.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_biracks(o).entries.size());
}
BENCHMARK(BM_EnumerateJobs)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_QuandleRelated(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_quandle_related(n, EquivalenceMode::isomorphism_and_symmetry).entries.size());
}
BENCHMARK(BM_QuandleRelated)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_EssentialPairs(benchmark::State& state) {
  SearchOptions o;
  o.size = 4;
  Catalog c = search_order(enumerate_biracks(o));
  std::erase_if(c.entries, [](const CatalogEntry& e) {
    return e.kind != ClassKind::quandle && e.kind != ClassKind::biquandle;
  });
  for (auto _ : state) benchmark::DoNotOptimize(find_essential_pairs(c).raw.size());
}
BENCHMARK(BM_EssentialPairs)->Unit(benchmark::kMillisecond);

static void BM_Bigelow(benchmark::State& state) {
  const Switch s = *named_switch(kBigelowPair.s_name), t = *named_switch(kBigelowPair.t_name);
  const BraidWord w = bigelow(state.range(0) == 1 ? Bigelow::b1 : Bigelow::b2);
  for (auto _ : state) benchmark::DoNotOptimize(fixed_points(w, s, t).count);
}
BENCHMARK(BM_Bigelow)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_BBB(benchmark::State& state) {
  const BraidWord w = fixture_word("bbb");
  const Switch s = *named_switch("BQ_3^3"), t = *named_switch("BQ_5^3");
  for (auto _ : state) benchmark::DoNotOptimize(fixed_points(w, s, t).count);
}
BENCHMARK(BM_BBB)->Unit(benchmark::kMillisecond);

static void BM_UnknotSeries(benchmark::State& state) {
  SearchOptions o;
  o.size = 4;
  const Catalog c = enumerate_biracks(o);
  const BraidWord empty = parse_braid("", 1);
  for (auto _ : state)
    for (const auto& e : c.entries) benchmark::DoNotOptimize(series(e.sw, empty, 6).cycle.size());
}
BENCHMARK(BM_UnknotSeries)->Unit(benchmark::kMillisecond);

static void BM_TrefoilSeries(benchmark::State& state) {
  const Switch s = *named_switch("BQ_3^3");
  const BraidWord w = fixture_word("trefoil");
  for (auto _ : state) benchmark::DoNotOptimize(series(s, w, 6).coefficients.size());
}
BENCHMARK(BM_TrefoilSeries);
BENCHMARK_MAIN();
