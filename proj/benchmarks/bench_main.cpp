#include <benchmark/benchmark.h>

#include "socchoice/arrowcheck.hpp"
#include "socchoice/reversal.hpp"

using namespace socchoice;

namespace {

void BM_EnumerateWeakOrders4(benchmark::State& state) {
  std::vector<Alt> X{0, 1, 2, 3};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_weak_orders(X));
}
BENCHMARK(BM_EnumerateWeakOrders4);

void BM_SeqCodeRoundTrip(benchmark::State& state) {
  std::vector<Index> entries;
  for (int i = 0; i < 50; ++i) entries.push_back(Index(i * 37 + 5));
  for (auto _ : state) {
    Index code = seq_encode(entries);
    benchmark::DoNotOptimize(seq_decode(code));
  }
}
BENCHMARK(BM_SeqCodeRoundTrip);

void BM_MuConstruction(benchmark::State& state) {
  auto soc = canonical_society({0, 1, 2}, finite_cofinite_algebra());
  const Algebra& a = soc->algebra();
  auto perm = soc->perm_starting_with({3, 7, 1});
  std::uint64_t v = 0;
  for (auto _ : state) {
    // fresh cells each round so the mu cache cannot short-circuit
    Index n = soc->embed(perm, {a.atom_index(v), a.atom_index(v + 1)});
    benchmark::DoNotOptimize(soc->mu(n, 0, 1));
    ++v;
  }
}
BENCHMARK(BM_MuConstruction);

void BM_ArrowLinearSearch(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_arrovian_swfs(2, 3, ArrowDomain::linear));
}
BENCHMARK(BM_ArrowLinearSearch);

void BM_KsExtractTwoVoters(benchmark::State& state) {
  for (auto _ : state) {
    auto soc = finite_society({0, 1}, {0, 1, 2});
    benchmark::DoNotOptimize(ks_extract(dictator_swf(soc, 0)));
  }
}
BENCHMARK(BM_KsExtractTwoVoters);

void BM_PhiToyEnumerator(benchmark::State& state) {
  GadgetSociety gs = build_gadget(toy_enumerator());
  Swf sigma = gadget_swf(gs, 1000);
  std::uint64_t n = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(phi(gs, sigma, n % 20, 1000));
    ++n;
  }
}
BENCHMARK(BM_PhiToyEnumerator);

}  // namespace

BENCHMARK_MAIN();
