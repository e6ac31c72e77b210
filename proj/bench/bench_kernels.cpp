#include <benchmark/benchmark.h>

#include "posetlab/gallery.hpp"
#include "posetlab/oracle.hpp"
#include "posetlab/search.hpp"

using namespace posetlab;

namespace {

const LadderPresentation& p2() {
  static const auto p = ladder_fixture("P2");
  return p;
}

template <bool Parallel>
void BM_oracle_wwb(benchmark::State& state) {
  const auto& p = p2();
  const Index depth = state.range(0);
  SymSet g = p.parse_set("{Y1(0), Y2(0)}");
  Elem top = p.parse_elem("top");
  for (auto _ : state) {
    bool r = Parallel ? oracle_wwb(p, g, top, depth) : oracle_wwb_serial(p, g, top, depth);
    benchmark::DoNotOptimize(r);
  }
}

template <bool Parallel>
void BM_scan(benchmark::State& state) {
  GenConfig cfg;
  auto q = PropertyQuery::parse("quasiexact & !exact");
  const auto count = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto s = Parallel ? scan(cfg, count, q) : scan_serial(cfg, count, q);
    benchmark::DoNotOptimize(s.matches.size());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_oracle_wwb<false>)->Name("oracle_wwb/serial")->Arg(4)->Arg(8)->Arg(12);
BENCHMARK(BM_oracle_wwb<true>)->Name("oracle_wwb/parallel")->Arg(4)->Arg(8)->Arg(12);
BENCHMARK(BM_scan<false>)->Name("scan/serial")->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_scan<true>)->Name("scan/parallel")->Arg(100)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
