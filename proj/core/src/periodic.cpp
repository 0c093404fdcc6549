#include "dsa/periodic.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dsa {

std::vector<std::uint8_t> min_rotation(std::vector<std::uint8_t> x) {
  const size_t m = x.size();
  if (m == 0) throw std::invalid_argument("min_rotation: empty");
  std::vector<std::uint8_t> d(x);
  d.insert(d.end(), x.begin(), x.end());
  size_t best = 0;
  for (size_t i = 1; i < m; ++i) {
    for (size_t k = 0; k < m; ++k) {
      if (d[best + k] != d[i + k]) {
        if (d[i + k] < d[best + k]) best = i;
        break;
      }
    }
  }
  return std::vector<std::uint8_t>(d.begin() + pos_t(best),
                                   d.begin() + pos_t(best + m));
}

namespace {

// T' of the canonical-function definition: chunks T[a..a+2tau-1) T[n]
// over the given block starts.
std::vector<std::uint8_t> build_tprime(const Text& t,
                                       const std::vector<pos_t>& starts,
                                       pos_t tau) {
  std::vector<std::uint8_t> out;
  for (pos_t a : starts) {
    for (pos_t i = a; i < a + 2 * tau - 1; ++i) out.push_back(t.at(i));
    out.push_back(t.at(t.n()));
  }
  return out;
}

// In Q iff x is a period root of some R-position window; the evaluators
// below detect membership by searching X^inf[1..tau] in T'.
std::vector<std::uint8_t> eval_h(const std::vector<std::uint8_t>& tprime,
                                 const std::vector<std::uint8_t>& x,
                                 pos_t tau) {
  // leftmost occurrence of X^inf[1..tau] in T'
  std::vector<std::uint8_t> probe;
  for (pos_t i = 0; i < tau; ++i)
    probe.push_back(x[size_t(i % pos_t(x.size()))]);
  auto it = std::search(tprime.begin(), tprime.end(), probe.begin(),
                        probe.end());
  if (it == tprime.end()) return {};
  pos_t s = pos_t(it - tprime.begin()) + 1;
  pos_t g = 1 + 2 * tau * ((s - 1) / (2 * tau));
  std::vector<std::uint8_t> out;
  for (pos_t i = 0; i < pos_t(x.size()); ++i)
    out.push_back(tprime[size_t(g - 1 + i)]);
  return out;
}

}  // namespace

std::vector<std::uint8_t> canonical_function_brute(
    const Text& t, pos_t tau, const std::vector<std::uint8_t>& x) {
  // R'(tau, T): starts of maximal R-blocks, computed directly.
  const pos_t n = t.n();
  std::vector<pos_t> rprim;
  bool prev = false;
  for (pos_t i = 1; i <= n - 3 * tau + 2; ++i) {
    std::vector<std::uint8_t> w;
    for (pos_t k = i; k <= i + 3 * tau - 2; ++k) w.push_back(t.at(k));
    bool cur = shortest_period_naive(w) <= tau / 3;
    if (cur && !prev) rprim.push_back(i);
    prev = cur;
  }
  auto tprime = build_tprime(t, rprim, tau);
  auto viah = eval_h(tprime, x, tau);
  if (!viah.empty()) return viah;
  return min_rotation(x);
}

std::vector<std::uint8_t> canonical_function_comp(
    const Text& t, const IntervalSet& comp_r, pos_t tau,
    const std::vector<std::uint8_t>& x) {
  std::vector<pos_t> starts;
  for (const auto& iv : comp_r.intervals()) starts.push_back(iv.start);
  auto tprime = build_tprime(t, starts, tau);
  auto viah = eval_h(tprime, x, tau);
  if (!viah.empty()) return viah;
  return min_rotation(x);
}

RunDecomposition pattern_run_decomposition(
    const std::vector<std::uint8_t>& pattern, pos_t tau,
    const std::function<std::vector<std::uint8_t>(
        const std::vector<std::uint8_t>&)>& f) {
  const pos_t m = pos_t(pattern.size());
  if (m < 3 * tau - 1)
    throw std::invalid_argument("pattern_run_decomposition: not periodic");
  std::vector<std::uint8_t> prefix(pattern.begin(),
                                   pattern.begin() + (3 * tau - 1));
  pos_t p = shortest_period_naive(prefix);
  if (p > tau / 3)
    throw std::invalid_argument("pattern_run_decomposition: not periodic");
  RunDecomposition rd;
  rd.period = p;
  // e = 1 + p + lcp(P, P[1+p..])
  pos_t lcp = 0;
  while (1 + p + lcp <= m && pattern[size_t(lcp)] == pattern[size_t(p + lcp)])
    ++lcp;
  rd.run_end = 1 + p + lcp;
  // head: align the canonical root inside the first period
  std::vector<std::uint8_t> root0(pattern.begin(), pattern.begin() + p);
  auto h = f(root0);
  pos_t s = -1;
  for (pos_t cand = 0; cand < p; ++cand) {
    bool ok = true;
    for (pos_t i = 0; i < p; ++i)
      if (pattern[size_t(cand + i)] != h[size_t(i)]) { ok = false; break; }
    if (ok) { s = cand; break; }
  }
  if (s < 0) throw std::logic_error("pattern_run_decomposition: root miss");
  rd.head = s;
  rd.exponent = (rd.run_end - 1 - s) / p;
  rd.tail = (rd.run_end - 1 - s) % p;
  rd.run_end_full = rd.run_end - rd.tail;
  rd.type = (rd.run_end <= m &&
             pattern[size_t(rd.run_end - 1)] > pattern[size_t(rd.run_end - 1 - p)])
                ? +1
                : -1;
  return rd;
}

pos_t exp_cut(const RunDecomposition& rd, pos_t t) {
  return std::min(rd.exponent, (t - rd.head) / rd.period);
}

pos_t run_end_cut(const RunDecomposition& rd, pos_t t) {
  return 1 + rd.head + exp_cut(rd, t) * rd.period;
}

// ---------------------------------------------------------------------------

PeriodicIndex::PeriodicIndex(const Text& t,
                             const ConstructionOracles& oracles,
                             const ConstructionOracles& rev_oracles,
                             const CoreIndex& core)
    : n_(t.n()) {
  const pos_t n = t.n();
  auto view = core.view();
  for (pos_t k = 4; k < 4 + core.levels(); ++k) {
    Level lvl;
    lvl.k = k;
    const auto& ir = core.runs(k);
    const pos_t m = ir.num_intervals();
    lvl.head.assign(size_t(m), 0);
    lvl.root_len.assign(size_t(m), 0);
    lvl.ptr_minus.assign(size_t(m), -1);
    lvl.ptr_plus.assign(size_t(m), -1);
    if (m > 0) {
      const pos_t tau = CoreIndex::tau_for(k);
      const pos_t q = 7 * tau;
      // T''_comp: the run chunks in reverse order, sentinel-separated.
      // Every tau-probe occurs inside a chunk, so the rightmost
      // occurrence in T . T''_comp always lies in this part alone.
      std::vector<std::uint8_t> aux_bytes;
      for (pos_t j = m; j-- > 0;) {
        pos_t a = ir.intervals()[size_t(j)].start;
        for (pos_t i = a; i < a + 2 * tau - 1; ++i)
          aux_bytes.push_back(t.at(i));
        aux_bytes.push_back(t.at(n));
      }
      Text aux_text(std::move(aux_bytes));
      ConstructionOracles aux(aux_text);

      struct GroupData {
        pos_t root_len = 0;
        std::vector<std::pair<pos_t, pos_t>> minus, plus;
      };
      std::map<pos_t, GroupData> groups;
      std::vector<pos_t> group_of(static_cast<size_t>(m));
      std::vector<int> type_of(static_cast<size_t>(m));
      for (pos_t j = 0; j < m; ++j) {
        pos_t pj = ir.intervals()[size_t(j)].start;
        auto per = oracles.two_period(pj, 3 * tau - 1);
        if (!per || *per > tau / 3)
          throw std::logic_error("periodic build: start not in R");
        pos_t p = *per;
        // this probe starts chunk m-1-j of T''_comp
        pos_t probe_at = 1 + 2 * tau * (m - 1 - j);
        pos_t off = aux.rightmost_occ(probe_at, tau);
        pos_t head = ((1 + 2 * tau * ((off - 1) / (2 * tau)) - off) % p + p) % p;
        pos_t gid = (off - 1) / (2 * tau) + 1;
        lvl.head[size_t(j)] = head;
        lvl.root_len[size_t(j)] = p;
        group_of[size_t(j)] = gid;

        pos_t e = pj + p + oracles.lce(pj, pj + p);
        pos_t expv = (e - pj - head) / p;
        pos_t efull = pj + head + expv * p;
        pos_t runbeg = pj;
        if (pj >= 2)
          runbeg = pj - rev_oracles.lce(n - pj + 2, n - pj - p + 2);
        int type = (e <= n && t.at(e) > t.at(e - p)) ? +1 : -1;
        type_of[size_t(j)] = type;
        auto& g = groups[gid];
        g.root_len = p;
        auto pair = std::make_pair(efull, std::min(q, efull - runbeg));
        if (type == -1)
          g.minus.push_back(pair);
        else
          g.plus.push_back(pair);
      }
      std::map<pos_t, std::pair<pos_t, pos_t>> built;  // gid -> (minus, plus)
      for (auto& [gid, g] : groups) {
        pos_t mi = -1, pi = -1;
        if (!g.minus.empty()) {
          mi = pos_t(lvl.pts_minus.size());
          lvl.pts_minus.emplace_back(view, oracles, g.minus, q,
                                     OrderMode::Standard);
          lvl.ints_minus.emplace_back(weighted_intervals(oracles, g.minus, q),
                                      g.root_len);
        }
        if (!g.plus.empty()) {
          pi = pos_t(lvl.pts_plus.size());
          lvl.pts_plus.emplace_back(view, oracles, g.plus, q,
                                    OrderMode::Inverted);
          lvl.ints_plus.emplace_back(weighted_intervals(oracles, g.plus, q),
                                     g.root_len);
        }
        built[gid] = {mi, pi};
      }
      for (pos_t j = 0; j < m; ++j) {
        auto [mi, pi] = built[group_of[size_t(j)]];
        lvl.ptr_minus[size_t(j)] = mi;
        lvl.ptr_plus[size_t(j)] = pi;
      }
    }
    levels_.push_back(std::move(lvl));
  }
}

const IntStrPoints* PeriodicIndex::pts_for(const Level& lvl, pos_t interval,
                                           OrderMode order) const {
  const auto& ptr = order == OrderMode::Standard ? lvl.ptr_minus : lvl.ptr_plus;
  pos_t idx = ptr[size_t(interval)];
  if (idx < 0) return nullptr;
  return order == OrderMode::Standard ? &lvl.pts_minus[size_t(idx)]
                                      : &lvl.pts_plus[size_t(idx)];
}

const ModStructure* PeriodicIndex::ints_for(const Level& lvl, pos_t interval,
                                            OrderMode order) const {
  const auto& ptr = order == OrderMode::Standard ? lvl.ptr_minus : lvl.ptr_plus;
  pos_t idx = ptr[size_t(interval)];
  if (idx < 0) return nullptr;
  return order == OrderMode::Standard ? &lvl.ints_minus[size_t(idx)]
                                      : &lvl.ints_plus[size_t(idx)];
}

PeriodicIndex::HeadRoot PeriodicIndex::head_root(const CoreIndex& core,
                                                 pos_t k, pos_t j,
                                                 pos_t witness) const {
  (void)j;
  const Level& lvl = level(k);
  pos_t idx = core.runs(k).find_containing(witness);
  if (idx < 0) throw std::logic_error("head_root: witness outside ArrRuns");
  pos_t p = lvl.root_len[size_t(idx)];
  pos_t start = core.runs(k).intervals()[size_t(idx)].start;
  pos_t s = ((lvl.head[size_t(idx)] - (witness - start)) % p + p) % p;
  return HeadRoot{s, p, idx};
}

PeriodicIndex::RunValues PeriodicIndex::run_values(const GrammarTextView& view,
                                                   pos_t k, pos_t j, pos_t s,
                                                   pos_t p) const {
  const pos_t ell = pos_t(1) << k;
  RunValues rv;
  rv.e = j + p + (j + p <= n_ ? view.lce(j, j + p, Direction::Forward) : 0);
  rv.exp = (rv.e - j - s) / p;
  rv.efull = j + s + rv.exp * p;
  rv.k1 = std::min(rv.exp, (ell - s) / p);
  rv.k2 = std::min(rv.exp, (2 * ell - s) / p);
  return rv;
}

std::uint64_t PeriodicIndex::count_low_high(const GrammarTextView& view,
                                            const CoreIndex& core, pos_t k,
                                            pos_t j_off, pos_t witness,
                                            pos_t s, pos_t p, pos_t kcut,
                                            pos_t d, OrderMode order) const {
  const Level& lvl = level(k);
  pos_t idx = core.runs(k).find_containing(witness);
  if (idx < 0) throw std::logic_error("count_low_high: bad witness");
  const IntStrPoints* pts = pts_for(lvl, idx, order);
  if (!pts) return 0;
  pos_t xl = s + kcut * p;
  pos_t ypos = j_off + xl;
  pos_t ylen = std::max<pos_t>(0, std::min(n_ + 1, j_off + d) - ypos);
  pos_t yr = pts->yrank(view, ypos, ylen, false);
  return pts->count2(xl) - pts->count3_ranks(xl, yr);
}

std::uint64_t PeriodicIndex::count_mid(const CoreIndex& core, pos_t k,
                                       pos_t witness, pos_t s, pos_t p,
                                       pos_t k1, pos_t k2,
                                       OrderMode order) const {
  const Level& lvl = level(k);
  pos_t idx = core.runs(k).find_containing(witness);
  if (idx < 0) throw std::logic_error("count_mid: bad witness");
  const ModStructure* ints = ints_for(lvl, idx, order);
  if (!ints) return 0;
  if (ints->modulus() != p) throw std::logic_error("count_mid: root mismatch");
  return ints->count_two(s, k1, k2);
}

pos_t PeriodicIndex::exponent(const CoreIndex& core, pos_t k, pos_t i,
                              pos_t b, std::uint64_t delta_low, pos_t k1,
                              pos_t witness, pos_t s, pos_t p,
                              OrderMode order) const {
  if (i <= b + pos_t(delta_low)) return k1;
  const Level& lvl = level(k);
  pos_t idx = core.runs(k).find_containing(witness);
  if (idx < 0) throw std::logic_error("exponent: bad witness");
  const ModStructure* ints = ints_for(lvl, idx, order);
  if (!ints) throw std::logic_error("exponent: missing structure");
  if (ints->modulus() != p) throw std::logic_error("exponent: root mismatch");
  std::uint64_t c = ints->count_one(s, k1);
  return ints->select(s, c + std::uint64_t(i - (b + pos_t(delta_low))));
}

std::uint64_t PeriodicIndex::count_occ_partial(
    const GrammarTextView& view, const CoreIndex& core, pos_t k, pos_t j,
    pos_t s, pos_t p, pos_t exp, pos_t witness, OrderMode order) const {
  const pos_t ell = pos_t(1) << k;
  const Level& lvl = level(k);
  pos_t idx = core.runs(k).find_containing(witness);
  if (idx < 0) throw std::logic_error("count_occ_partial: bad witness");
  const IntStrPoints* pts = pts_for(lvl, idx, order);
  if (!pts) throw std::logic_error("count_occ_partial: missing structure");
  pos_t xl = s + exp * p;
  pos_t ypos = j + xl;
  pos_t ylen = std::max<pos_t>(0, std::min(n_ + 1, j + 2 * ell) - ypos);
  pos_t yrlo = pts->yrank(view, ypos, ylen, false);
  pos_t yrhi = pts->yrank(view, ypos, ylen, true);
  return pts->count3_ranks(xl, yrhi) - pts->count3_ranks(xl, yrlo);
}

pos_t PeriodicIndex::select_occ_partial(const GrammarTextView& view,
                                        const CoreIndex& core, pos_t k,
                                        pos_t i, pos_t i_mid, pos_t witness,
                                        pos_t s, pos_t p, pos_t exp,
                                        OrderMode order) const {
  (void)view;
  const Level& lvl = level(k);
  pos_t idx = core.runs(k).find_containing(witness);
  if (idx < 0) throw std::logic_error("select_occ_partial: bad witness");
  const IntStrPoints* pts = pts_for(lvl, idx, order);
  if (!pts) throw std::logic_error("select_occ_partial: missing structure");
  pos_t x = s + exp * p;
  std::uint64_t c = pts->count2(x);
  pos_t sel = pts->select(x, c - std::uint64_t(i_mid - i));
  return sel - x;
}

pos_t PeriodicIndex::min_occ_partial(const GrammarTextView& view,
                                     const CoreIndex& core, pos_t k, pos_t j,
                                     pos_t s, pos_t p, pos_t exp,
                                     pos_t witness, OrderMode order) const {
  const pos_t ell = pos_t(1) << k;
  const Level& lvl = level(k);
  pos_t idx = core.runs(k).find_containing(witness);
  if (idx < 0) throw std::logic_error("min_occ_partial: bad witness");
  const IntStrPoints* pts = pts_for(lvl, idx, order);
  if (!pts) throw std::logic_error("min_occ_partial: missing structure");
  pos_t xl = s + exp * p;
  pos_t ypos = j + xl;
  pos_t ylen = std::max<pos_t>(0, std::min(n_ + 1, j + 2 * ell) - ypos);
  pos_t yrlo = pts->yrank(view, ypos, ylen, false);
  pos_t yrhi = pts->yrank(view, ypos, ylen, true);
  return pts->min4_ranks(xl, yrlo, yrhi) - xl;
}

pos_t PeriodicIndex::min_occ_full(const GrammarTextView& view,
                                  const CoreIndex& core, pos_t k, pos_t j,
                                  pos_t s, pos_t p, pos_t exp, pos_t witness,
                                  OrderMode order) const {
  const pos_t ell = pos_t(1) << k;
  const Level& lvl = level(k);
  pos_t idx = core.runs(k).find_containing(witness);
  if (idx < 0) throw std::logic_error("min_occ_full: bad witness");
  const IntStrPoints* pts = pts_for(lvl, idx, order);
  if (!pts) throw std::logic_error("min_occ_full: missing structure");
  pos_t k2 = (2 * ell - s) / p;
  if (exp == k2) {
    pos_t xl = s + exp * p;
    pos_t ypos = j + xl;
    pos_t ylen = std::max<pos_t>(0, std::min(n_ + 1, j + 2 * ell) - ypos);
    pos_t yrlo = pts->yrank(view, ypos, ylen, false);
    pos_t yrhi = pts->yrank(view, ypos, ylen, true);
    return pts->min4_ranks(xl, yrlo, yrhi) - xl;
  }
  pos_t x = s + (k2 + 1) * p;
  return pts->min2(x) - x;
}

pos_t PeriodicIndex::min_occ_dispatch(const GrammarTextView& view,
                                      const CoreIndex& core, pos_t k, pos_t j,
                                      pos_t witness) const {
  const pos_t ell = pos_t(1) << k;
  auto hr = head_root(core, k, j, witness);
  auto rv = run_values(view, k, j, hr.head, hr.p);
  int type = (rv.e <= n_ && view.access(rv.e) > view.access(rv.e - hr.p))
                 ? +1
                 : -1;
  OrderMode order = type == -1 ? OrderMode::Standard : OrderMode::Inverted;
  if (rv.e - j < 2 * ell)
    return min_occ_partial(view, core, k, j, hr.head, hr.p, rv.exp, witness,
                           order);
  return min_occ_full(view, core, k, j, hr.head, hr.p, rv.exp, witness,
                      order);
}

PeriodicIndex::RangeResult PeriodicIndex::fully_periodic_pattern_range(
    const GrammarTextView& view, const CoreIndex& core, pos_t k, pos_t j,
    pos_t s, pos_t p, pos_t b_l, pos_t e_l) const {
  const pos_t ell = pos_t(1) << k;
  const Level& lvl = level(k);
  pos_t idx = core.runs(k).find_containing(j);
  if (idx < 0)
    throw std::logic_error("fully_periodic_pattern_range: j outside runs");
  pos_t k1 = (ell - s) / p;
  pos_t k2 = (2 * ell - s) / p;

  auto family_counts = [&](OrderMode order, std::uint64_t& d1,
                           std::uint64_t& d2, std::uint64_t& d3) {
    d1 = d2 = d3 = 0;
    const IntStrPoints* pts = pts_for(lvl, idx, order);
    const ModStructure* ints = ints_for(lvl, idx, order);
    if (pts) {
      pos_t xl = s + k1 * p;
      pos_t yr = pts->yrank(view, j + s, ell - xl, false);
      d1 = pts->count2(xl) - pts->count3_ranks(xl, yr);
      pos_t xl2 = s + k2 * p;
      pos_t yr2 = pts->yrank(view, j + s, 2 * ell - xl2, false);
      d3 = pts->count2(xl2) - pts->count3_ranks(xl2, yr2);
    }
    if (ints) d2 = ints->count_two(s, k1, k2);
  };
  std::uint64_t dm1, dm2, dm3, dp1, dp2, dp3;
  family_counts(OrderMode::Standard, dm1, dm2, dm3);
  family_counts(OrderMode::Inverted, dp1, dp2, dp3);

  RangeResult out;
  out.b = b_l + pos_t(dm1) + pos_t(dm2) - pos_t(dm3);
  out.e = e_l - pos_t(dp1) - pos_t(dp2) + pos_t(dp3);
  if (out.b == out.e) return out;

  // a member of Occ(P): PosHigh or R_{s, k2+1, H} candidates, both orders
  pos_t candidate = -1;
  for (OrderMode order : {OrderMode::Standard, OrderMode::Inverted}) {
    const IntStrPoints* pts = pts_for(lvl, idx, order);
    if (!pts) continue;
    std::uint64_t dhigh = order == OrderMode::Standard ? dm3 : dp3;
    if (dhigh > 0 && candidate < 0) {
      pos_t x = s + k2 * p;
      std::uint64_t c = pts->count2(x);
      if (c >= 1) candidate = pts->select(x, c) - x;
    }
    if (candidate < 0) {
      pos_t x = s + (k2 + 1) * p;
      std::uint64_t h = pts->count2(x);
      if (h > 0) candidate = pts->select(x, 1) - x;
    }
  }
  if (candidate < 0)
    throw std::logic_error("fully_periodic_pattern_range: no candidate");
  out.witness = min_occ_dispatch(view, core, k, candidate, j);
  return out;
}

RefineResult PeriodicIndex::partial_isa(const GrammarTextView& view,
                                        const CoreIndex& core, pos_t k,
                                        pos_t j, pos_t b, pos_t /*e*/,
                                        pos_t witness, pos_t s, pos_t p,
                                        OrderMode order) const {
  const pos_t ell = pos_t(1) << k;
  auto rv = run_values(view, k, j, s, p);
  std::uint64_t d1 =
      count_low_high(view, core, k, j, witness, s, p, rv.k1, ell, order);
  std::uint64_t d3 =
      count_low_high(view, core, k, j, witness, s, p, rv.k2, 2 * ell, order);
  std::uint64_t d2 = count_mid(core, k, witness, s, p, rv.k1, rv.k2, order);
  std::uint64_t m =
      count_occ_partial(view, core, k, j, s, p, rv.exp, witness, order);
  RefineResult out;
  out.b = b + pos_t(d1) + pos_t(d2) - pos_t(d3);
  out.e = out.b + pos_t(m);
  out.witness =
      min_occ_partial(view, core, k, j, s, p, rv.exp, witness, order);
  return out;
}

RefineResult PeriodicIndex::partial_sa(const GrammarTextView& view,
                                       const CoreIndex& core, pos_t k,
                                       pos_t i, pos_t b, pos_t e,
                                       pos_t witness, pos_t s, pos_t p,
                                       OrderMode order) const {
  const pos_t ell = pos_t(1) << k;
  (void)e;
  auto rv = run_values(view, k, witness, s, p);
  pos_t k1 = rv.k1;
  std::uint64_t d1 =
      count_low_high(view, core, k, witness, witness, s, p, k1, ell, order);
  pos_t kexp =
      exponent(core, k, i, b, d1, k1, witness, s, p, order);
  std::uint64_t d2 = count_mid(core, k, witness, s, p, k1, kexp, order);
  pos_t j2 = select_occ_partial(view, core, k, i, b + pos_t(d1) + pos_t(d2),
                                witness, s, p, kexp, order);
  std::uint64_t d3 =
      count_low_high(view, core, k, j2, witness, s, p, kexp, 2 * ell, order);
  std::uint64_t q =
      count_occ_partial(view, core, k, j2, s, p, kexp, witness, order);
  RefineResult out;
  out.b = b + pos_t(d1) + pos_t(d2) - pos_t(d3);
  out.e = out.b + pos_t(q);
  out.witness = min_occ_dispatch(view, core, k, j2, witness);
  return out;
}

RefineResult PeriodicIndex::refine_isa_step(const GrammarTextView& view,
                                            const CoreIndex& core, pos_t k,
                                            pos_t j, pos_t b, pos_t e,
                                            pos_t witness) const {
  const pos_t ell = pos_t(1) << k;
  auto hr = head_root(core, k, j, witness);
  auto rv = run_values(view, k, j, hr.head, hr.p);
  if (rv.e - j >= 2 * ell) {
    // T[j..j+2l) equals the fully periodic pattern P
    auto rr = fully_periodic_pattern_range(view, core, k, witness, hr.head,
                                           hr.p, b, e);
    return RefineResult{rr.b, rr.e, rr.witness};
  }
  int type = (rv.e <= n_ && view.access(rv.e) > view.access(rv.e - hr.p))
                 ? +1
                 : -1;
  if (type == -1)
    return partial_isa(view, core, k, j, b, e, witness, hr.head, hr.p,
                       OrderMode::Standard);
  RefineResult inv = partial_isa(view, core, k, j, n_ - e, n_ - b, witness,
                                 hr.head, hr.p, OrderMode::Inverted);
  return RefineResult{n_ - inv.e, n_ - inv.b, inv.witness};
}

RefineResult PeriodicIndex::refine_sa_step(const GrammarTextView& view,
                                           const CoreIndex& core, pos_t k,
                                           pos_t i, pos_t b, pos_t e,
                                           pos_t witness) const {
  const pos_t ell = pos_t(1) << k;
  auto hr = head_root(core, k, witness, witness);
  auto rv = run_values(view, k, witness, hr.head, hr.p);

  auto dispatch_partial = [&](bool plus_side) -> RefineResult {
    if (!plus_side)
      return partial_sa(view, core, k, i, b, e, witness, hr.head, hr.p,
                        OrderMode::Standard);
    RefineResult inv =
        partial_sa(view, core, k, n_ + 1 - i, n_ - e, n_ - b, witness,
                   hr.head, hr.p, OrderMode::Inverted);
    return RefineResult{n_ - inv.e, n_ - inv.b, inv.witness};
  };

  if (rv.e - witness < ell) {
    // Every member of the range shares the witness's short run and type:
    // the fully periodic pattern cannot intersect the range.
    int type = (rv.e <= n_ &&
                view.access(rv.e) > view.access(rv.e - hr.p))
                   ? +1
                   : -1;
    return dispatch_partial(type == +1);
  }
  auto rr = fully_periodic_pattern_range(view, core, k, witness, hr.head,
                                         hr.p, b, e);
  if (i > rr.b && i <= rr.e) return RefineResult{rr.b, rr.e, rr.witness};
  if (i <= rr.b) return dispatch_partial(false);
  return dispatch_partial(true);
}

void PeriodicIndex::save(Writer& w) const {
  w.i64(n_);
  w.u64(levels_.size());
  for (const auto& lvl : levels_) {
    w.i64(lvl.k);
    w.vec_i64(lvl.head);
    w.vec_i64(lvl.root_len);
    w.vec_i64(lvl.ptr_minus);
    w.vec_i64(lvl.ptr_plus);
    w.u64(lvl.pts_minus.size());
    for (const auto& s : lvl.pts_minus) s.save(w);
    w.u64(lvl.ints_minus.size());
    for (const auto& s : lvl.ints_minus) s.save(w);
    w.u64(lvl.pts_plus.size());
    for (const auto& s : lvl.pts_plus) s.save(w);
    w.u64(lvl.ints_plus.size());
    for (const auto& s : lvl.ints_plus) s.save(w);
  }
}

PeriodicIndex PeriodicIndex::load(Reader& r) {
  PeriodicIndex idx;
  idx.n_ = r.i64();
  std::uint64_t m = r.u64();
  for (std::uint64_t i = 0; i < m; ++i) {
    Level lvl;
    lvl.k = r.i64();
    lvl.head = r.vec_i64<pos_t>();
    lvl.root_len = r.vec_i64<pos_t>();
    lvl.ptr_minus = r.vec_i64<pos_t>();
    lvl.ptr_plus = r.vec_i64<pos_t>();
    std::uint64_t c1 = r.u64();
    for (std::uint64_t x = 0; x < c1; ++x)
      lvl.pts_minus.push_back(IntStrPoints::load(r));
    std::uint64_t c2 = r.u64();
    for (std::uint64_t x = 0; x < c2; ++x)
      lvl.ints_minus.push_back(ModStructure::load(r));
    std::uint64_t c3 = r.u64();
    for (std::uint64_t x = 0; x < c3; ++x)
      lvl.pts_plus.push_back(IntStrPoints::load(r));
    std::uint64_t c4 = r.u64();
    for (std::uint64_t x = 0; x < c4; ++x)
      lvl.ints_plus.push_back(ModStructure::load(r));
    idx.levels_.push_back(std::move(lvl));
  }
  return idx;
}

}  // namespace dsa
