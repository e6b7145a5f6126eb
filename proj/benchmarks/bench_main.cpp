#include <benchmark/benchmark.h>

#include "ifsembed/bounds.hpp"
#include "ifsembed/chains.hpp"
#include "ifsembed/commensurability.hpp"
#include "ifsembed/embedding.hpp"
#include "ifsembed/figure.hpp"
#include "ifsembed/fixtures.hpp"
#include "ifsembed/openness.hpp"
#include "ifsembed/symmetry1d.hpp"

namespace {

using namespace ifsembed;

void BM_Cover(benchmark::State& state) {
  const Ifs ifs = fixtures::example25();
  const auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cover(ifs, depth));
}
BENCHMARK(BM_Cover)->DenseRange(1, 4);

void BM_CheckSsc(benchmark::State& state) {
  const Ifs ifs = fixtures::near_touching();
  const auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_ssc(ifs, depth));
}
BENCHMARK(BM_CheckSsc)->Arg(4)->Arg(12);

void BM_DiameterBounds(benchmark::State& state) {
  const Ifs ifs = fixtures::example25();
  const auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(diameter_bounds(ifs, depth));
}
BENCHMARK(BM_DiameterBounds)->Arg(2)->Arg(6);

void BM_ChainDecomposition(benchmark::State& state) {
  const Ifs ifs = fixtures::example25();
  for (auto _ : state) benchmark::DoNotOptimize(chain_decomposition(ifs, 2, 6));
}
BENCHMARK(BM_ChainDecomposition);

void BM_CertifyEmbedding(benchmark::State& state) {
  const Ifs ifs = fixtures::example25();
  const Similitude f = fixtures::example25_map();
  for (auto _ : state) benchmark::DoNotOptimize(certify_embedding(f, ifs, {}, {}));
}
BENCHMARK(BM_CertifyEmbedding);

void BM_OpennessCantor(benchmark::State& state) {
  const Ifs ifs = fixtures::cantor();
  const Similitude f = fixtures::cantor_map();
  const auto evidence = certify_embedding(f, ifs, {}, {});
  for (auto _ : state) benchmark::DoNotOptimize(openness_decision(f, ifs, *evidence));
}
BENCHMARK(BM_OpennessCantor);

void BM_LogCommensurability(benchmark::State& state) {
  const Rational r(8, 243);
  const Rational r_f(4096, 59049);
  for (auto _ : state) benchmark::DoNotOptimize(log_commensurability(r, r_f));
}
BENCHMARK(BM_LogCommensurability);

void BM_SymmetryDecision(benchmark::State& state) {
  const SymmetryProblem problem = fixtures::fifths_pair();
  for (auto _ : state) benchmark::DoNotOptimize(symmetry_decision(problem, {}));
}
BENCHMARK(BM_SymmetryDecision);

void BM_RenderPoints(benchmark::State& state) {
  const Ifs ifs = fixtures::example25();
  for (auto _ : state) benchmark::DoNotOptimize(export_figure(ifs, 3, FigureStyle::kPoints));
}
BENCHMARK(BM_RenderPoints);

}  // namespace
BENCHMARK_MAIN();
