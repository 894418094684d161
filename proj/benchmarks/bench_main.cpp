#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

#include "trapset/canonical.hpp"
#include "trapset/lss.hpp"
#include "trapset/random_code.hpp"
#include "trapset/search.hpp"
#include "trapset/structgen.hpp"

namespace {

using namespace trapset;

// A fixed catalog gives the canonical-form benchmark realistic inputs.
const Catalog& sample_catalog() {
  static const Catalog c = generate_structures({4, 6, 8, 6});
  return c;
}

NormalGraph shuffled(const NormalGraph& n, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n.node_count()));
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<NormalEdge> edges;
  for (const auto& [u, v] : n.edges()) edges.push_back({perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]});
  return NormalGraph(n.node_count(), std::move(edges));
}

void BM_CanonicalForm(benchmark::State& state) {
  std::mt19937_64 rng(5);
  std::vector<NormalGraph> inputs;
  for (const auto& e : sample_catalog().entries) inputs.push_back(shuffled(e.form.decode(), rng));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_form(inputs[i]));
    i = (i + 1) % inputs.size();
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_CanonicalForm);

void BM_GenerateStructures(benchmark::State& state) {
  const ClassSpec spec{static_cast<int>(state.range(0)), 6, static_cast<int>(state.range(1)), 4};
  for (auto _ : state) benchmark::DoNotOptimize(generate_structures(spec));
}
BENCHMARK(BM_GenerateStructures)->Args({3, 8})->Args({4, 8})->Args({5, 8})->Unit(benchmark::kMillisecond);

void BM_LabelCatalog(benchmark::State& state) {
  for (auto _ : state) {
    Catalog c = sample_catalog();
    label_catalog(c);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_LabelCatalog)->Unit(benchmark::kMillisecond);

void BM_FindEtss(benchmark::State& state) {
  RandomCodeParams p;
  p.num_vars = static_cast<std::size_t>(state.range(0));
  p.num_checks = p.num_vars / 2;
  p.seed = 3;
  const TannerGraph g = random_code(p);
  const std::size_t k = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(find_etss(g, {k, g.girth() + 2, 1, "bench"}));
}
BENCHMARK(BM_FindEtss)->Args({200, 6})->Args({500, 6})->Args({500, 8})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
