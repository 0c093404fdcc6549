#include "doctest.h"

#include <memory>
#include <random>
#include <set>

#include "dsa/sync_sets.hpp"

using namespace dsa;

namespace {

Text random_sentinel_text(std::mt19937& rng, pos_t n, int sigma) {
  std::vector<std::uint8_t> b(static_cast<size_t>(n));
  std::uniform_int_distribution<int> d(0, sigma - 1);
  for (auto& c : b) c = std::uint8_t('a' + d(rng));
  return Text(std::move(b)).with_appended_sentinel();
}

// Self-referential (oracles point at the owned text): heap-pinned.
struct Built {
  Text t;
  ConstructionOracles oracles;
  CoverHierarchy hierarchy;
  Rlslp grammar;
  Built(Text text, const Parsing& parsing, RecompressionResult rec)
      : t(std::move(text)),
        oracles(t),
        hierarchy(t, oracles, parsing.phrase_starts()),
        grammar(std::move(rec.grammar)) {}
};

std::unique_ptr<Built> build(Text text) {
  ConstructionOracles oracles(text);
  auto parsing = greedy_lz77(text, oracles);
  CoverHierarchy hier(text, oracles, parsing.phrase_starts());
  auto rec = restricted_recompression(text, hier);
  return std::make_unique<Built>(std::move(text), parsing, std::move(rec));
}

pos_t per_of(const Text& t, pos_t i, pos_t j) {  // per(T[i..j])
  std::vector<std::uint8_t> s;
  for (pos_t k = i; k <= j; ++k) s.push_back(t.at(k));
  return shortest_period_naive(s);
}

std::vector<TauRun> brute_runs(const Text& t, pos_t tau) {
  std::vector<TauRun> out;
  const pos_t n = t.n();
  for (pos_t i = 1; i <= n; ++i) {
    for (pos_t j = i + tau - 1; j <= n; ++j) {
      pos_t p = per_of(t, i, j);
      if (p > tau / 3) continue;
      bool left_ext = i > 1 && per_of(t, i - 1, j) == p;
      bool right_ext = j < n && per_of(t, i, j + 1) == p;
      if (!left_ext && !right_ext) out.push_back(TauRun{i, j, p});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::set<pos_t> brute_r_set(const Text& t, pos_t tau) {
  std::set<pos_t> r;
  for (pos_t i = 1; i <= t.n() - 3 * tau + 2; ++i)
    if (per_of(t, i, i + 3 * tau - 2) <= tau / 3) r.insert(i);
  return r;
}

}  // namespace

TEST_CASE("tau runs match brute enumeration") {
  std::mt19937 rng(3);
  std::vector<Text> texts;
  texts.push_back(Text("aaaaabbbbbaaaaa").with_appended_sentinel());
  {
    std::string s;
    for (int i = 0; i < 10; ++i) s += "ab";
    texts.push_back(Text(s).with_appended_sentinel());
  }
  for (int i = 0; i < 8; ++i)
    texts.push_back(random_sentinel_text(rng, 20 + pos_t(rng() % 30), 2));
  for (const auto& t : texts) {
    ConstructionOracles oracles(t);
    IntervalSet full(std::vector<Interval>{Interval{1, t.n()}});
    for (pos_t tau : {3, 4, 6, 9}) {
      if (tau > t.n() / 2) continue;
      auto got = compute_tau_runs(oracles, full, tau);
      auto want = brute_runs(t, tau);
      CHECK(got == want);
    }
  }
}

TEST_CASE("square-free texts have no runs") {
  // ternary square-free prefix (Thue-Morse based)
  std::string sf = "abcacbabcbacabcacbacabcb";
  Text t = Text(sf).with_appended_sentinel();
  ConstructionOracles oracles(t);
  IntervalSet full(std::vector<Interval>{Interval{1, t.n()}});
  for (pos_t tau : {3, 6, 9})
    CHECK(compute_tau_runs(oracles, full, tau).empty());
}

TEST_CASE("(ab)^10 has a single run of period 2") {
  std::string s;
  for (int i = 0; i < 10; ++i) s += "ab";
  Text t(s);  // no sentinel: the run must span the whole text
  ConstructionOracles oracles(t);
  IntervalSet full(std::vector<Interval>{Interval{1, t.n()}});
  auto runs = compute_tau_runs(oracles, full, 6);
  REQUIRE(runs.size() == 1);
  CHECK(runs[0] == TauRun{1, 20, 2});
}

TEST_CASE("runs overlap bound") {
  std::mt19937 rng(7);
  for (int rep = 0; rep < 10; ++rep) {
    Text t = random_sentinel_text(rng, 60, 2);
    ConstructionOracles oracles(t);
    IntervalSet full(std::vector<Interval>{Interval{1, t.n()}});
    for (pos_t tau : {3, 6}) {
      auto runs = compute_tau_runs(oracles, full, tau);
      for (size_t a = 0; a + 1 < runs.size(); ++a) {
        const auto& r1 = runs[a];
        const auto& r2 = runs[a + 1];
        pos_t overlap = std::max<pos_t>(0, r1.end - r2.start + 1);
        CHECK(overlap < r1.period + r2.period);
      }
    }
  }
}

TEST_CASE("synchronizing sets satisfy consistency and density") {
  std::mt19937 rng(11);
  std::vector<std::unique_ptr<Built>> texts;
  texts.push_back(build(random_sentinel_text(rng, 50, 2)));
  texts.push_back(build(random_sentinel_text(rng, 80, 2)));
  {
    std::string s;
    for (int i = 0; i < 30; ++i) s += "ab";
    texts.push_back(build(Text(s).with_appended_sentinel()));
  }
  {
    std::string s(70, 'a');
    texts.push_back(build(Text(s).with_appended_sentinel()));
  }
  for (auto& btp : texts) {
    auto& bt = *btp;
    const Text& t = bt.t;
    const pos_t n = t.n();
    for (pos_t tau = 1; tau <= n / 2; tau = tau * 2 + 1) {
      auto s = build_sync_set(t, bt.oracles, bt.grammar, tau);
      std::set<pos_t> sset(s.begin(), s.end());
      for (pos_t p : s) {
        CHECK(p >= 1);
        CHECK(p <= n - 2 * tau + 1);
      }
      // consistency: equal 2tau contexts agree on membership
      for (pos_t i = 1; i + 2 * tau - 1 <= n; ++i)
        for (pos_t j = i + 1; j + 2 * tau - 1 <= n; ++j) {
          if (naive_lce(t, i, j, Direction::Forward) >= 2 * tau)
            CHECK(sset.count(i) == sset.count(j));
        }
      // density: window empty iff i in R(tau, T)
      auto r = brute_r_set(t, tau);
      for (pos_t i = 1; i <= n - 3 * tau + 2; ++i) {
        bool empty = true;
        for (pos_t p = i; p < i + tau; ++p)
          if (sset.count(p)) { empty = false; break; }
        CHECK(empty == (r.count(i) > 0));
      }
    }
  }
}

TEST_CASE("sync set size stays within the linear-density regime") {
  Text t = Text("bbabaababababaababa").with_appended_sentinel();
  auto bt = build(t);
  auto s = build_sync_set(bt->t, bt->oracles, bt->grammar, 5);
  CHECK(pos_t(s.size()) <= 24 * bt->t.n() / 5);
}

TEST_CASE("compressed collection equals brute intersection") {
  std::mt19937 rng(13);
  std::vector<std::unique_ptr<Built>> texts;
  texts.push_back(build(random_sentinel_text(rng, 90, 2)));
  {
    std::string s(100, 'a');
    for (size_t i = 0; i < s.size(); i += 17) s[i] = 'b';
    texts.push_back(build(Text(s).with_appended_sentinel()));
  }
  for (auto& btp : texts) {
    auto& bt = *btp;
    auto collection = build_compressed_sync_collection(
        bt.t, bt.oracles, bt.hierarchy, bt.grammar, 14);
    pos_t levels = 0;
    while ((pos_t(1) << levels) < bt.t.n()) ++levels;
    CHECK(pos_t(collection.size()) == std::max<pos_t>(0, levels - 4));
    for (const auto& cs : collection) {
      CHECK(cs.tau == (pos_t(1) << cs.k) / 3);
      auto s = build_sync_set(bt.t, bt.oracles, bt.grammar, cs.tau);
      const auto& cover = bt.hierarchy.cover(14 * cs.tau);
      std::vector<pos_t> want;
      for (pos_t p : s)
        if (cover.contains(p)) want.push_back(p);
      CHECK(cs.positions == want);
    }
  }
}

TEST_CASE("collection is empty for tiny texts") {
  auto bt = build(Text("abacabaabacaba!").with_appended_sentinel());
  REQUIRE(bt->t.n() == 16);
  auto collection = build_compressed_sync_collection(
      bt->t, bt->oracles, bt->hierarchy, bt->grammar, 14);
  CHECK(collection.empty());
}

TEST_CASE("tau bounds are enforced") {
  auto bt = build(Text("abaababaabaababaabab").with_appended_sentinel());
  CHECK_THROWS(build_sync_set(bt->t, bt->oracles, bt->grammar, 0));
  CHECK_THROWS(
      build_sync_set(bt->t, bt->oracles, bt->grammar, bt->t.n() / 2 + 1));
}
