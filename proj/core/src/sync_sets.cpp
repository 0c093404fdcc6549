#include "dsa/sync_sets.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dsa {

namespace {
// How far the period p continues to the left of x (runs are short at
// desk scale, so a direct walk suffices).
pos_t extend_left(const ConstructionOracles& oracles, pos_t x, pos_t p) {
  const Text& t = oracles.text();
  pos_t j1 = x - 1, j2 = x - 1 + p;
  if (j1 < 1 || j2 > t.n()) return 0;
  pos_t l = 0;
  while (j1 - l >= 1 && j2 - l >= 1 && t.at(j1 - l) == t.at(j2 - l)) ++l;
  return l;
}
}  // namespace

std::vector<TauRun> compute_tau_runs(const ConstructionOracles& oracles,
                                     const IntervalSet& window, pos_t tau) {
  const Text& t = oracles.text();
  const pos_t n = t.n();
  const pos_t b = tau / 3;
  std::vector<TauRun> out;
  if (b < 1) return out;
  std::set<std::pair<pos_t, pos_t>> seen;
  for (const auto& iv : window.intervals()) {
    pos_t lo = iv.start;
    pos_t hi = std::min(n, iv.start + iv.len - 1 + 2 * tau);  // extension
    for (pos_t x = lo; x + 2 * b - 1 <= hi; x += b) {
      auto per = oracles.two_period(x, 2 * b);
      if (!per || *per > b) continue;
      pos_t p = *per;
      // maximal extension preserving the period
      pos_t left = 0;
      if (x > 1) left = extend_left(oracles, x, p);
      pos_t u = x - left;
      pos_t v = x + p + oracles.lce(x, x + p) - 1;
      // blocks fully inside [u..v] would rediscover the same run
      if (x + 2 * b - 1 <= v) x += ((v - (x + 2 * b - 1)) / b) * b;
      if (v - u + 1 < tau) continue;
      // must share >= tau symbols with the extended window
      pos_t ov = std::min(v, hi) - std::max(u, lo) + 1;
      if (ov < tau) continue;
      if (seen.emplace(u, v).second) out.push_back(TauRun{u, v, p});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const TauRun& a, const TauRun& b2) { return a.start < b2.start; });
  return out;
}

pos_t sync_level_selector(pos_t tau) {
  pos_t k = 0;
  for (pos_t h = 1;; ++h) {
    if (level_params(h).alpha > tau) break;
    k = h;
  }
  return k;
}

std::vector<pos_t> build_sync_set(const Text& t,
                                  const ConstructionOracles& oracles,
                                  const Rlslp& grammar, pos_t tau) {
  const pos_t n = t.n();
  if (tau < 1 || tau > n / 2)
    throw std::out_of_range("build_sync_set: tau");
  if (!t.sentinel_validated())
    throw std::invalid_argument("build_sync_set: sentinel required");

  IntervalSet full(std::vector<Interval>{Interval{1, n}});
  auto runs = compute_tau_runs(oracles, full, tau);
  std::vector<pos_t> run_starts;
  std::vector<pos_t> maxv_prefix;
  for (const auto& r : runs) {
    run_starts.push_back(r.start);
    pos_t prev = maxv_prefix.empty() ? -1 : maxv_prefix.back();
    maxv_prefix.push_back(std::max(prev, r.end));
  }
  auto inside_run = [&](pos_t i) {
    // is T[i..i+2tau) contained in some run?
    auto it = std::upper_bound(run_starts.begin(), run_starts.end(), i);
    if (it == run_starts.begin()) return false;
    size_t idx = size_t(it - run_starts.begin()) - 1;
    return maxv_prefix[idx] >= i + 2 * tau - 1;
  };

  std::vector<pos_t> s;
  // condition (1): grammar boundaries at the selected level
  pos_t k = sync_level_selector(tau);
  auto counts = grammar.phrase_counts(k);
  std::vector<pos_t> bnds;
  grammar.boundaries_in_range(k, tau, n - tau, counts, bnds);
  for (pos_t bpos : bnds) {
    pos_t i = bpos - tau + 1;
    if (i < 1 || i > n - 2 * tau + 1) continue;
    if (!inside_run(i)) s.push_back(i);
  }
  // conditions (2) and (3): run begin/end samples
  for (const auto& r : runs) {
    for (pos_t i : {r.start - 1, r.end - 2 * tau + 2}) {
      if (i >= 1 && i <= n - 2 * tau + 1) s.push_back(i);
    }
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::vector<CompressedSyncSet> build_compressed_sync_collection(
    const Text& t, const ConstructionOracles& oracles,
    const CoverHierarchy& hierarchy, const Rlslp& grammar, pos_t c) {
  if (c < 1) throw std::invalid_argument("collection: c >= 1");
  const pos_t n = t.n();
  pos_t levels = 0;
  while ((pos_t(1) << levels) < n) ++levels;  // ceil(log2 n)
  std::vector<CompressedSyncSet> out;
  for (pos_t k = 4; k < levels; ++k) {
    pos_t tau = (pos_t(1) << k) / 3;
    CompressedSyncSet cs;
    cs.k = k;
    cs.tau = tau;
    auto s = build_sync_set(t, oracles, grammar, tau);
    cs.positions = hierarchy.cover(c * tau).intersect_sorted(s).positions();
    out.push_back(std::move(cs));
  }
  return out;
}

}  // namespace dsa
