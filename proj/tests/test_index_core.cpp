#include "doctest.h"

#include <memory>
#include <random>
#include <set>

#include "dsa/index_core.hpp"

using namespace dsa;

namespace {

Text random_sentinel_text(std::mt19937& rng, pos_t n, int sigma) {
  std::vector<std::uint8_t> b(static_cast<size_t>(n));
  std::uniform_int_distribution<int> d(0, sigma - 1);
  for (auto& c : b) c = std::uint8_t('a' + d(rng));
  return Text(std::move(b)).with_appended_sentinel();
}

struct World {
  Text t;
  Text tr;
  ConstructionOracles oracles;
  ConstructionOracles rev_oracles;
  CoverHierarchy hierarchy;
  CoreIndex core;
  World(Text text, const Parsing& parsing, Rlslp f, Rlslp r)
      : t(std::move(text)),
        tr(t.reversed()),
        oracles(t),
        rev_oracles(tr),
        hierarchy(t, oracles, parsing.phrase_starts()),
        core(build_core(t, oracles, rev_oracles, hierarchy, std::move(f),
                        std::move(r))) {}
};

std::unique_ptr<World> build_world(Text text) {
  ConstructionOracles oracles(text);
  auto parsing = greedy_lz77(text, oracles);
  CoverHierarchy hier(text, oracles, parsing.phrase_starts());
  auto fwd = restricted_recompression(text, hier).grammar;
  Text tr = text.reversed();
  ConstructionOracles ro(tr);
  CoverHierarchy hr(tr, ro, greedy_lz77(tr, ro).phrase_starts());
  auto rev = restricted_recompression(tr, hr).grammar;
  return std::make_unique<World>(std::move(text), parsing, std::move(fwd),
                                 std::move(rev));
}

pos_t per_of(const Text& t, pos_t i, pos_t j) {
  std::vector<std::uint8_t> s;
  for (pos_t k = i; k <= j; ++k) s.push_back(t.at(k));
  return shortest_period_naive(s);
}

std::set<pos_t> brute_r_set(const Text& t, pos_t tau) {
  std::set<pos_t> r;
  for (pos_t i = 1; i <= t.n() - 3 * tau + 2; ++i)
    if (per_of(t, i, i + 3 * tau - 2) <= tau / 3) r.insert(i);
  return r;
}

}  // namespace

TEST_CASE("ArrRuns equals brute R intersect cover on every level") {
  std::mt19937 rng(3);
  std::vector<std::unique_ptr<World>> worlds;
  worlds.push_back(build_world(
      Text("bbabaababababaababa").with_appended_sentinel()));
  {
    std::string s;
    for (int i = 0; i < 64; ++i) s += "ab";
    worlds.push_back(build_world(Text(s).with_appended_sentinel()));
  }
  {
    std::string sf = "abcacbabcbacabcacbacabcbabcacbabcbacabcacbacabcb";
    worlds.push_back(build_world(Text(sf).with_appended_sentinel()));
  }
  for (int i = 0; i < 4; ++i)
    worlds.push_back(
        build_world(random_sentinel_text(rng, 60 + pos_t(rng() % 120), 2)));
  for (auto& wp : worlds) {
    auto& w = *wp;
    const pos_t n = w.t.n();
    CHECK(w.core.levels() == CoreIndex::level_count(n));
    for (pos_t k = 4; k < 4 + w.core.levels(); ++k) {
      pos_t tau = CoreIndex::tau_for(k);
      auto r = brute_r_set(w.t, tau);
      const auto& cover = w.hierarchy.cover(14 * tau);
      std::vector<pos_t> want;
      for (pos_t p : r)
        if (cover.contains(p)) want.push_back(p);
      auto want_ir = interval_representation(want);
      CHECK(w.core.runs(k) == want_ir);
      // domain and size bound
      auto prof = delta_complexity(w.t);
      auto d_at = [&](pos_t l) {
        return l <= n ? prof.d[size_t(l - 1)] : pos_t(0);
      };
      for (const auto& iv : w.core.runs(k).intervals()) {
        CHECK(iv.start >= 1);
        CHECK(iv.start + iv.len - 1 <= n - 3 * tau + 2);
      }
      CHECK(2 * tau * w.core.runs(k).num_intervals() <=
            5 * (d_at(8 * 14 * tau) + 8 * 14 * tau));
      // gap property: consecutive R-blocks in a cover block >= 2 tau apart
      std::vector<pos_t> rv(r.begin(), r.end());
      auto rir = interval_representation(rv);
      for (pos_t a = 1; a < rir.num_intervals(); ++a) {
        // blocks of R anywhere in the text
        CHECK(rir.intervals()[size_t(a)].start -
                  rir.intervals()[size_t(a - 1)].start >=
              2 * tau);
      }
    }
  }
}

TEST_CASE("membership test agrees with brute R for valid witnesses") {
  std::mt19937 rng(7);
  auto wp = build_world(random_sentinel_text(rng, 150, 2));
  auto& w = *wp;
  const pos_t n = w.t.n();
  for (pos_t k = 4; k < 4 + w.core.levels(); ++k) {
    pos_t ell = pos_t(1) << k;
    pos_t tau = CoreIndex::tau_for(k);
    auto r = brute_r_set(w.t, tau);
    for (pos_t j = 1; j <= n; ++j) {
      // witness: leftmost occurrence of T^inf[j..j+2l)
      // (valid: j' in Occ_l(j), j' = min Occ_{2l}(j'))
      pos_t witness = j;
      if (j + 2 * ell - 1 <= n) witness = w.oracles.leftmost_occ(j, 2 * ell);
      bool got = is_periodic_position(w.core, k, j, witness);
      CHECK(got == (r.count(j) > 0));
    }
  }
}

TEST_CASE("square-free text has empty run arrays") {
  std::string sf;
  // ternary square-free morphism iterate
  std::string cur = "a";
  while (cur.size() < 100) {
    std::string next;
    for (char c : cur) {
      if (c == 'a') next += "abc";
      else if (c == 'b') next += "ac";
      else next += "b";
    }
    cur = next;
  }
  auto wp = build_world(Text(cur.substr(0, 100)).with_appended_sentinel());
  for (pos_t k = 4; k < 4 + wp->core.levels(); ++k)
    CHECK(wp->core.runs(k).num_intervals() == 0);
}

TEST_CASE("core serialization round trip") {
  std::mt19937 rng(11);
  auto wp = build_world(random_sentinel_text(rng, 100, 2));
  Writer w;
  wp->core.save(w);
  auto data = w.take();
  Reader r(data.data(), data.size());
  auto core2 = CoreIndex::load(r);
  CHECK(core2.n == wp->core.n);
  CHECK(core2.levels() == wp->core.levels());
  for (pos_t k = 4; k < 4 + core2.levels(); ++k)
    CHECK(core2.runs(k) == wp->core.runs(k));
  for (pos_t i = 1; i <= core2.n; ++i)
    CHECK(core2.fwd.access(i) == wp->t.at(i));
}
