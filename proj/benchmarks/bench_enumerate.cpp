#include <benchmark/benchmark.h>

#include <random>

#include "ltvcl/context.hpp"
#include "ltvcl/galois.hpp"
#include "ltvcl/lia.hpp"
#include "ltvcl/tacit.hpp"

namespace {

const char* kTable2 =
    "algebra product 3 2\n"
    "alias a=SlT b=SlF I=AbT O=AbF\n"
    "attributes m1 m2 m3\n"
    "g1 a b I\n"
    "g2 b O a\n";

ltvcl::FuzzyContext random_context(std::size_t rows, std::size_t cols, unsigned seed) {
  const auto L = ltvcl::Algebra::l6();
  const auto elements = L.elements();
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);
  std::vector<std::string> objects, attributes;
  std::vector<std::vector<ltvcl::TruthValue>> matrix(rows);
  for (std::size_t g = 0; g < rows; ++g) objects.push_back("g" + std::to_string(g + 1));
  for (std::size_t m = 0; m < cols; ++m) attributes.push_back("m" + std::to_string(m + 1));
  for (auto& row : matrix)
    for (std::size_t m = 0; m < cols; ++m) row.push_back(elements[pick(rng)]);
  return ltvcl::FuzzyContext(L, objects, attributes, matrix);
}

void BM_EnumerateTable2(benchmark::State& state) {
  const auto K = ltvcl::parse_context(kTable2);
  ltvcl::EnumerationOptions opts;
  opts.engine = state.range(0) ? ltvcl::ScanEngine::IntentScan : ltvcl::ScanEngine::ExtentScan;
  for (auto _ : state) benchmark::DoNotOptimize(ltvcl::enumerate_concepts(K, opts).size());
}
BENCHMARK(BM_EnumerateTable2)->Arg(0)->Arg(1);

void BM_EnumerateRandom(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto K = random_context(n, 3, 11);
  for (auto _ : state) benchmark::DoNotOptimize(ltvcl::enumerate_concepts(K).size());
}
BENCHMARK(BM_EnumerateRandom)->DenseRange(1, 5);

void BM_MineRandom3x3(benchmark::State& state) {
  const auto K = random_context(3, 3, 5);
  ltvcl::MiningConfig cfg;
  cfg.extension.max_meet_arity = 3;
  for (auto _ : state) benchmark::DoNotOptimize(ltvcl::mine(K, cfg).report.congener.is_congener);
}
BENCHMARK(BM_MineRandom3x3);

void BM_CheckAxioms(benchmark::State& state) {
  const auto L = ltvcl::Algebra::product({static_cast<int>(state.range(0)), 2});
  for (auto _ : state) benchmark::DoNotOptimize(ltvcl::check_axioms(L).passed);
}
BENCHMARK(BM_CheckAxioms)->DenseRange(2, 5);

}  // namespace

BENCHMARK_MAIN();
