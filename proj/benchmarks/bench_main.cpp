#include <benchmark/benchmark.h>

#include <random>

#include "locdelta/analysis.hpp"
#include "locdelta/catalog.hpp"
#include "locdelta/cayley.hpp"
#include "locdelta/cosetenum.hpp"
#include "locdelta/kneser.hpp"

namespace {

using namespace locdelta;

void BM_Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  BitMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.set(r, c, rng() & 1u);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(64)->Arg(256)->Arg(512);

void BM_Quotient(benchmark::State& state) {
  const PartialLinearSpace space = kneser_space(4);
  for (auto _ : state) benchmark::DoNotOptimize(build_quotient(space).dimension());
}
BENCHMARK(BM_Quotient)->Unit(benchmark::kMillisecond);

void BM_Refinement(benchmark::State& state) {
  const CayleyGamma gamma = build_gamma(QuotientData(state.range(0) == 0 ? hamming_space(3) : split_cayley_hexagon()));
  for (auto _ : state) benchmark::DoNotOptimize(equitable_refinement(gamma, 0).cell_count());
}
BENCHMARK(BM_Refinement)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CosetEnumeration(benchmark::State& state) {
  const Presentation p = Presentation::from_space(state.range(0) == 3 ? kneser_space(3) : kneser_space(4));
  const Strategy strategy = state.range(1) == 0 ? Strategy::Felsch : Strategy::Hlt;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(p, {1'000'000, strategy}).order);
}
BENCHMARK(BM_CosetEnumeration)->Args({3, 0})->Args({3, 1})->Args({4, 0})->Args({4, 1})->Unit(benchmark::kMillisecond);

void BM_Isomorphism(benchmark::State& state) {
  const Graph g = kneser(8, 3);
  std::vector<Vertex> perm(g.vertex_count());
  for (Vertex v = 0; v < perm.size(); ++v) perm[v] = (v * 17 + 5) % perm.size();
  const Graph h = relabel(g, perm);
  for (auto _ : state) benchmark::DoNotOptimize(isomorphic(g, h).has_value());
}
BENCHMARK(BM_Isomorphism)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
