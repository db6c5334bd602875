#include <benchmark/benchmark.h>

#include "hyperbernardi/bernardi.hpp"
#include "hyperbernardi/harness.hpp"
#include "hyperbernardi/jaeger.hpp"
#include "hyperbernardi/polytope.hpp"

using namespace hb;

namespace {

// the seed with the most hypertrees among the first few; fixed so runs are comparable
const RibbonGraph& instance() {
  static RibbonGraph g = [] {
    RibbonGraph best = generate_random_instance(1, {7, 7, 18});
    size_t most = enumerate_hypertrees(best, Color::Emerald).size();
    for (std::uint64_t s = 2; s <= 60; ++s) {
      RibbonGraph c = generate_random_instance(s, {7, 7, 18});
      size_t n = enumerate_hypertrees(c, Color::Emerald).size();
      if (n > most) best = c, most = n;
    }
    return best;
  }();
  return g;
}

Exec mode(const benchmark::State& st) { return st.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_all_bernardi(benchmark::State& st) {
  const RibbonGraph& g = instance();
  auto fs = enumerate_hypertrees(g, Color::Emerald);
  for (auto _ : st) benchmark::DoNotOptimize(run_all_bernardi(g, fs, Variant::HtE_CutV, mode(st)));
  st.counters["hypertrees"] = static_cast<double>(fs.size());
}

void BM_dissection(benchmark::State& st) {
  const RibbonGraph& g = instance();
  auto trees = enumerate_jaeger_trees(g, Color::Violet);
  for (auto _ : st) benchmark::DoNotOptimize(verify_dissection(g, trees, mode(st), 0));
  st.counters["simplices"] = static_cast<double>(trees.size());
}

void BM_incompatible_pairs(benchmark::State& st) {
  const RibbonGraph& g = instance();
  auto trees = enumerate_jaeger_trees(g, Color::Violet);
  for (auto _ : st) benchmark::DoNotOptimize(incompatible_pairs(g, trees, mode(st)));
}

}  // namespace

BENCHMARK(BM_all_bernardi)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_dissection)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_incompatible_pairs)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
