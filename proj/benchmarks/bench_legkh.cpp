#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <string>

#include "legkh/bound.hpp"
#include "legkh/khovanov.hpp"
#include "legkh/spanning.hpp"

namespace {

legkh::FrontDiagram load(const std::string& name) {
  std::ifstream in(std::string(LEGKH_CORPUS_DIR) + "/" + name + ".front");
  std::string line;
  std::ostringstream word;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') word << line << ' ';
  return legkh::parse_front(word.str());
}

const char* const kFronts[] = {"trefoil_right", "figure_eight", "knot_6_2", "torus_3_4", "braid_12", "alternating_12"};

void BM_SpanningTrees(benchmark::State& state) {
  const legkh::FrontDiagram f = load(kFronts[state.range(0)]);
  const legkh::TaitGraph g = legkh::front_tait_graph(f, false);
  for (auto _ : state) {
    long n = 0;
    legkh::for_each_spanning_tree(g, [&](const legkh::EdgeSet& t) {
      n += legkh::classify_activities(g, t).u;
    });
    benchmark::DoNotOptimize(n);
  }
  state.SetLabel(kFronts[state.range(0)]);
}
BENCHMARK(BM_SpanningTrees)->DenseRange(0, 5);

void BM_KhovanovHomology(benchmark::State& state) {
  const legkh::LinkDiagram d = legkh::desingularize(load(kFronts[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(legkh::khovanov_homology(d));
  state.SetLabel(kFronts[state.range(0)]);
}
BENCHMARK(BM_KhovanovHomology)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_KauffmanJones(benchmark::State& state) {
  const legkh::LinkDiagram d = legkh::desingularize(load(kFronts[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(legkh::kauffman_jones(d));
  state.SetLabel(kFronts[state.range(0)]);
}
BENCHMARK(BM_KauffmanJones)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
