#include "dsa/index_core.hpp"

#include <algorithm>

namespace dsa {

pos_t CoreIndex::level_count(pos_t n) {
  pos_t levels = 0;
  while ((pos_t(1) << levels) < n) ++levels;
  return std::max<pos_t>(0, levels - 4);
}

namespace {

void save_interval_set(Writer& w, const IntervalSet& s) {
  w.u64(std::uint64_t(s.num_intervals()));
  for (const auto& iv : s.intervals()) {
    w.i64(iv.start);
    w.i64(iv.len);
  }
}

IntervalSet load_interval_set(Reader& r) {
  std::uint64_t m = r.u64();
  r.check_remaining(m * 16);
  std::vector<Interval> ivs(static_cast<size_t>(m));
  for (auto& iv : ivs) {
    iv.start = r.i64();
    iv.len = r.i64();
  }
  return IntervalSet(std::move(ivs));
}

void save_rlslp(Writer& w, const Rlslp& g) {
  w.u64(g.size());
  for (sym_t s = 0; s < g.size(); ++s) {
    const auto& e = g.entries()[s];
    w.u8(std::uint8_t(e.kind));
    w.i64(e.level);
    w.u32(e.a);
    w.i64(e.b);
  }
  w.u32(g.start());
}

Rlslp load_rlslp(Reader& r) {
  Rlslp g;
  std::uint64_t m = r.u64();
  for (std::uint64_t s = 0; s < m; ++s) {
    auto kind = Rlslp::Kind(r.u8());
    pos_t level = r.i64();
    sym_t a = r.u32();
    pos_t b = r.i64();
    sym_t id;
    switch (kind) {
      case Rlslp::Kind::Terminal:
        id = g.terminal(std::uint8_t(a), level);
        break;
      case Rlslp::Kind::Pair:
        id = g.make_pair(a, sym_t(b), level);
        break;
      case Rlslp::Kind::Power:
        id = g.make_power(a, b, level);
        break;
      default:
        throw std::runtime_error("Rlslp: bad kind");
    }
    if (id != sym_t(s)) throw std::runtime_error("Rlslp: non-canonical table");
  }
  sym_t start = r.u32();
  if (start != kNoSym && start >= g.size())
    throw std::runtime_error("Rlslp: bad start");
  g.set_start(start);
  return g;
}

}  // namespace

void CoreIndex::save(Writer& w) const {
  w.i64(n);
  save_rlslp(w, fwd);
  save_rlslp(w, rev);
  w.u64(arr_runs.size());
  for (const auto& s : arr_runs) save_interval_set(w, s);
}

CoreIndex CoreIndex::load(Reader& r) {
  CoreIndex c;
  c.n = r.i64();
  c.fwd = load_rlslp(r);
  c.rev = load_rlslp(r);
  std::uint64_t m = r.u64();
  for (std::uint64_t i = 0; i < m; ++i)
    c.arr_runs.push_back(load_interval_set(r));
  if (pos_t(c.arr_runs.size()) != level_count(c.n))
    throw std::runtime_error("CoreIndex: level count mismatch");
  return c;
}

CoreIndex build_core(const Text& t, const ConstructionOracles& oracles,
                     const ConstructionOracles& rev_oracles,
                     const CoverHierarchy& hierarchy, Rlslp fwd_grammar,
                     Rlslp rev_grammar) {
  CoreIndex core;
  core.n = t.n();
  core.fwd = std::move(fwd_grammar);
  core.rev = std::move(rev_grammar);
  const pos_t n = t.n();
  const pos_t levels = CoreIndex::level_count(n);
  for (pos_t k = 4; k < 4 + levels; ++k) {
    const pos_t tau = CoreIndex::tau_for(k);
    const auto& cover = hierarchy.cover(14 * tau);
    std::vector<Interval> acc;
    auto emit = [&](pos_t x, pos_t y_incl) {
      if (y_incl < x) return;
      if (!acc.empty() && acc.back().start + acc.back().len >= x) {
        acc.back().len =
            std::max(acc.back().len, y_incl + 1 - acc.back().start);
      } else {
        acc.push_back(Interval{x, y_incl - x + 1});
      }
    };
    for (const auto& block : cover.intervals()) {
      pos_t bend = std::min(block.start + block.len, n - 3 * tau + 3);
      for (pos_t j = block.start; j < bend; j += 2 * tau) {
        pos_t b = std::min<pos_t>(2 * tau, bend - j);
        // p = per(T[j+b .. j+3tau-1)); reject if p > tau/3
        pos_t seg_start = j + b, seg_len = 3 * tau - 1 - b;
        auto p = oracles.two_period(seg_start, seg_len);
        if (!p || *p > tau / 3) continue;
        // extend leftwards (cap b) and rightwards (cap b-1)
        pos_t dl = 0;
        if (j + b - 1 >= 1 && j + b - 1 + *p <= n) {
          pos_t r1 = n - (j + b - 1) + 1, r2 = n - (j + b - 1 + *p) + 1;
          dl = std::min<pos_t>(b, rev_oracles.lce(r1, r2));
        }
        pos_t dr = 0;
        if (j + 3 * tau - 1 <= n) {
          dr = std::min<pos_t>(b - 1,
                               oracles.lce(j + 3 * tau - 1, j + 3 * tau - 1 - *p));
        }
        pos_t x = j + b - dl;
        pos_t y = j + 3 * tau - 1 + dr;  // exclusive end of the periodic part
        if (y - x < 3 * tau - 1) continue;
        emit(x, y - 3 * tau + 1);
      }
    }
    core.arr_runs.push_back(IntervalSet(std::move(acc)));
  }
  return core;
}

bool is_periodic_position(const CoreIndex& core, pos_t k, pos_t j,
                          pos_t witness) {
  const pos_t tau = CoreIndex::tau_for(k);
  if (j > core.n - 3 * tau + 2) return false;
  return core.runs(k).contains(witness);
}

}  // namespace dsa
