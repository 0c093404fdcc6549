#include <benchmark/benchmark.h>

#include <random>

#include "dsa/sa_index.hpp"

using namespace dsa;

namespace {

Text repetitive_text(pos_t n) {
  std::string s;
  std::mt19937 rng(99);
  for (pos_t i = 0; i + 1 < n; ++i) {
    char c = i % 2 ? 'b' : 'a';
    if (rng() % 64 == 0) c = char('a' + rng() % 2);
    s.push_back(c);
  }
  return Text(s).with_appended_sentinel();
}

Text random_text(pos_t n) {
  std::string s;
  std::mt19937 rng(7);
  for (pos_t i = 0; i + 1 < n; ++i) s.push_back(char('a' + rng() % 2));
  return Text(s).with_appended_sentinel();
}

const DeltaSaIndex& shared_index(pos_t n, bool repetitive) {
  static std::map<std::pair<pos_t, bool>, DeltaSaIndex> cache;
  auto key = std::make_pair(n, repetitive);
  auto it = cache.find(key);
  if (it == cache.end()) {
    Text t = repetitive ? repetitive_text(n) : random_text(n);
    it = cache.emplace(key, DeltaSaIndex::build(t)).first;
  }
  return it->second;
}

}  // namespace

static void BM_Build(benchmark::State& state) {
  pos_t n = state.range(0);
  Text t = repetitive_text(n);
  for (auto _ : state) {
    auto idx = DeltaSaIndex::build(t);
    benchmark::DoNotOptimize(idx.n());
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_Build)->Range(1 << 10, 1 << 14)->Complexity();

static void BM_QuerySa(benchmark::State& state) {
  const auto& idx = shared_index(state.range(0), true);
  std::mt19937 rng(3);
  for (auto _ : state)
    benchmark::DoNotOptimize(idx.query_sa(1 + pos_t(rng() % idx.n())));
}
BENCHMARK(BM_QuerySa)->Range(1 << 12, 1 << 18);

static void BM_QueryIsa(benchmark::State& state) {
  const auto& idx = shared_index(state.range(0), true);
  std::mt19937 rng(5);
  for (auto _ : state)
    benchmark::DoNotOptimize(idx.query_isa(1 + pos_t(rng() % idx.n())));
}
BENCHMARK(BM_QueryIsa)->Range(1 << 12, 1 << 18);

static void BM_Access(benchmark::State& state) {
  const auto& idx = shared_index(1 << 16, false);
  std::mt19937 rng(9);
  for (auto _ : state)
    benchmark::DoNotOptimize(idx.access(1 + pos_t(rng() % idx.n())));
}
BENCHMARK(BM_Access);

static void BM_Lce(benchmark::State& state) {
  const auto& idx = shared_index(1 << 16, false);
  std::mt19937 rng(11);
  for (auto _ : state) {
    pos_t a = 1 + pos_t(rng() % idx.n());
    pos_t b = 1 + pos_t(rng() % idx.n());
    benchmark::DoNotOptimize(idx.lce(a, b, Direction::Forward));
  }
}
BENCHMARK(BM_Lce);

BENCHMARK_MAIN();
