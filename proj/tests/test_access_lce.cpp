#include "doctest.h"

#include <random>

#include "dsa/access_lce.hpp"

using namespace dsa;

namespace {
const char* kT0 = "bbabaababababaababa";

Text random_text(std::mt19937& rng, pos_t n, int sigma) {
  std::vector<std::uint8_t> b(static_cast<size_t>(n));
  std::uniform_int_distribution<int> d(0, sigma - 1);
  for (auto& c : b) c = std::uint8_t('a' + d(rng));
  return Text(std::move(b));
}

Rlslp build_grammar(const Text& t) {
  ConstructionOracles oracles(t);
  CoverHierarchy hier(t, oracles, greedy_lz77(t, oracles).phrase_starts());
  return restricted_recompression(t, hier).grammar;
}
}  // namespace

TEST_CASE("access agrees with the text everywhere") {
  std::mt19937 rng(3);
  std::vector<Text> texts{Text(kT0), Text("a"), Text(std::string(64, 'a'))};
  for (int i = 0; i < 6; ++i)
    texts.push_back(random_text(rng, 5 + pos_t(rng() % 300), 3));
  for (const auto& t : texts) {
    auto g = build_grammar(t);
    for (pos_t i = 1; i <= t.n(); ++i)
      CHECK(grammar_access(g, i) == t.at(i));
    CHECK_THROWS(grammar_access(g, 0));
    CHECK_THROWS(grammar_access(g, t.n() + 1));
  }
  Text t0(kT0);
  auto g0 = build_grammar(t0);
  CHECK(grammar_access(g0, 1) == 'b');
  CHECK(grammar_access(g0, 19) == 'a');
}

TEST_CASE("lce agrees with naive on all pairs (small texts)") {
  std::mt19937 rng(5);
  std::vector<Text> texts{Text(kT0), Text(std::string(64, 'a'))};
  for (int i = 0; i < 6; ++i)
    texts.push_back(random_text(rng, 4 + pos_t(rng() % 120), 2));
  for (const auto& t : texts) {
    auto g = build_grammar(t);
    for (pos_t i = 1; i <= t.n(); ++i)
      for (pos_t j = 1; j <= t.n(); ++j)
        CHECK(grammar_lce(g, i, j) ==
              naive_lce(t, i, j, Direction::Forward));
  }
}

TEST_CASE("spec fixtures") {
  Text t0(kT0);
  auto g = build_grammar(t0);
  CHECK(grammar_lce(g, 3, 17) == 3);
  CHECK(grammar_lce(g, 7, 7) == 13);
  Text ua(std::string(64, 'a'));
  auto gu = build_grammar(ua);
  CHECK(grammar_lce(gu, 1, 2) == 63);  // exercises the run jump
}

TEST_CASE("step count stays within the height budget") {
  std::mt19937 rng(7);
  std::vector<Text> texts{Text(std::string(512, 'a')), Text(kT0)};
  for (int i = 0; i < 4; ++i)
    texts.push_back(random_text(rng, 200 + pos_t(rng() % 200), 2));
  for (const auto& t : texts) {
    auto g = build_grammar(t);
    pos_t h = g.height(g.start());
    for (int rep = 0; rep < 300; ++rep) {
      pos_t i = 1 + pos_t(rng() % t.n());
      pos_t j = 1 + pos_t(rng() % t.n());
      if (i == j) continue;
      LceStats stats;
      grammar_lce(g, i, j, &stats);
      CHECK(stats.frames <= 16 * std::max<pos_t>(h, 1));
    }
  }
}

TEST_CASE("grammar text view: both directions and T-infinity helpers") {
  std::mt19937 rng(11);
  for (int rep = 0; rep < 6; ++rep) {
    Text t = random_text(rng, 20 + pos_t(rng() % 120), 2)
                 .with_appended_sentinel();
    Text tr = t.reversed();
    auto gf = build_grammar(t);
    auto gr = build_grammar(tr);
    GrammarTextView view(&gf, &gr);
    for (int q = 0; q < 200; ++q) {
      pos_t i = 1 + pos_t(rng() % t.n());
      pos_t j = 1 + pos_t(rng() % t.n());
      CHECK(view.lce(i, j, Direction::Forward) ==
            naive_lce(t, i, j, Direction::Forward));
      CHECK(view.lce(i, j, Direction::Backward) ==
            naive_lce(t, i, j, Direction::Backward));
    }
    ConstructionOracles o(t);
    std::uniform_int_distribution<pos_t> d(-40, 2 * t.n());
    for (int q = 0; q < 200; ++q) {
      pos_t x = d(rng), y = d(rng);
      CHECK(view.lce_inf(x, y, 75) == o.lce_inf(x, y, 75));
    }
    // cmp_inf matches direct comparison of materialized slices
    for (int q = 0; q < 200; ++q) {
      pos_t x = d(rng), y = d(rng);
      pos_t lx = pos_t(rng() % 30), ly = pos_t(rng() % 30);
      for (OrderMode mode : {OrderMode::Standard, OrderMode::Inverted}) {
        std::vector<std::uint8_t> sx, sy;
        for (pos_t k = 0; k < lx; ++k) sx.push_back(t.tinf(x + k));
        for (pos_t k = 0; k < ly; ++k) sy.push_back(t.tinf(y + k));
        int want = 0;
        for (size_t k = 0;; ++k) {
          if (k == sx.size() && k == sy.size()) { want = 0; break; }
          if (k == sx.size()) { want = -1; break; }
          if (k == sy.size()) { want = 1; break; }
          int c = cmp_sym(sx[k], sy[k], mode);
          if (c != 0) { want = c; break; }
        }
        CHECK(view.cmp_inf(x, lx, y, ly, mode) == want);
      }
    }
    // cmp_rev_inf matches reversed-slice comparison
    for (int q = 0; q < 200; ++q) {
      pos_t x = d(rng), y = d(rng);
      pos_t lx = pos_t(rng() % 30), ly = pos_t(rng() % 30);
      for (OrderMode mode : {OrderMode::Standard, OrderMode::Inverted}) {
        std::vector<std::uint8_t> sx, sy;
        for (pos_t k = 1; k <= lx; ++k) sx.push_back(t.tinf(x - k));
        for (pos_t k = 1; k <= ly; ++k) sy.push_back(t.tinf(y - k));
        int want = 0;
        for (size_t k = 0;; ++k) {
          if (k == sx.size() && k == sy.size()) { want = 0; break; }
          if (k == sx.size()) { want = -1; break; }
          if (k == sy.size()) { want = 1; break; }
          int c = cmp_sym(sx[k], sy[k], mode);
          if (c != 0) { want = c; break; }
        }
        CHECK(view.cmp_rev_inf(x, lx, y, ly, mode) == want);
      }
    }
  }
}
