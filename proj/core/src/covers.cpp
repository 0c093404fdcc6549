#include "dsa/covers.hpp"

#include <algorithm>
#include <stdexcept>

namespace dsa {

IntervalSet::IntervalSet(std::vector<Interval> intervals)
    : intervals_(std::move(intervals)) {
  for (size_t i = 0; i < intervals_.size(); ++i) {
    if (intervals_[i].len <= 0 || intervals_[i].start <= 0)
      throw std::invalid_argument("IntervalSet: bad interval");
    if (i > 0 &&
        intervals_[i - 1].start + intervals_[i - 1].len >= intervals_[i].start)
      throw std::invalid_argument("IntervalSet: not strictly separated");
  }
}

IntervalSet IntervalSet::from_positions(std::vector<pos_t> sorted_positions) {
  return interval_representation(std::move(sorted_positions));
}

pos_t IntervalSet::total_size() const {
  pos_t s = 0;
  for (const auto& iv : intervals_) s += iv.len;
  return s;
}

bool IntervalSet::contains(pos_t p) const {
  auto it = std::upper_bound(
      intervals_.begin(), intervals_.end(), p,
      [](pos_t v, const Interval& iv) { return v < iv.start; });
  if (it == intervals_.begin()) return false;
  --it;
  return p < it->start + it->len;
}

pos_t IntervalSet::find_containing(pos_t p) const {
  auto it = std::upper_bound(
      intervals_.begin(), intervals_.end(), p,
      [](pos_t v, const Interval& iv) { return v < iv.start; });
  if (it == intervals_.begin()) return -1;
  --it;
  if (p >= it->start + it->len) return -1;
  return pos_t(it - intervals_.begin());
}

std::vector<pos_t> IntervalSet::positions() const {
  std::vector<pos_t> out;
  out.reserve(size_t(total_size()));
  for (const auto& iv : intervals_)
    for (pos_t p = iv.start; p < iv.start + iv.len; ++p) out.push_back(p);
  return out;
}

IntervalSet IntervalSet::intersect_sorted(
    const std::vector<pos_t>& sorted) const {
  std::vector<pos_t> kept;
  size_t i = 0;
  for (const auto& iv : intervals_) {
    while (i < sorted.size() && sorted[i] < iv.start) ++i;
    while (i < sorted.size() && sorted[i] < iv.start + iv.len)
      kept.push_back(sorted[i++]);
  }
  return interval_representation(std::move(kept));
}

IntervalSet interval_representation(std::vector<pos_t> positions) {
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()),
                  positions.end());
  std::vector<Interval> ivs;
  for (size_t i = 0; i < positions.size();) {
    size_t j = i + 1;
    while (j < positions.size() && positions[j] == positions[j - 1] + 1) ++j;
    ivs.push_back(Interval{positions[i], pos_t(j - i)});
    i = j;
  }
  return IntervalSet(std::move(ivs));
}

IntervalSet build_cover(const Text& t, pos_t ell,
                        const ConstructionOracles& oracles,
                        const std::vector<pos_t>& phrase_starts) {
  if (ell < 1) throw std::invalid_argument("build_cover: ell < 1");
  const pos_t n = t.n();
  pos_t k = 1;
  while (k < ell) k <<= 1;  // k = 2^ceil(log2 ell)

  std::vector<pos_t> accepted;   // candidate set I, in raw scan order
  pos_t last1 = -1, last2 = -1;  // duplicate suppression of candidates
  for (pos_t b : phrase_starts) {
    // Candidates i with i in (b-2k .. b), i = 1 (mod k); at most two.
    pos_t lo = b - 2 * k;  // exclusive lower end
    pos_t q = lo >= 0 ? lo / k : -((-lo + k - 1) / k);
    pos_t i1 = q * k + 1;
    while (i1 <= lo) i1 += k;
    for (pos_t i : {i1, i1 + k}) {
      if (i >= b) continue;
      if (i < 1 || i > n - 2 * k) continue;
      if (i == last1 || i == last2) continue;
      last2 = last1;
      last1 = i;
      if (oracles.leftmost_occ(i, 2 * k) == i) accepted.push_back(i);
    }
  }
  std::sort(accepted.begin(), accepted.end());
  accepted.erase(std::unique(accepted.begin(), accepted.end()),
                 accepted.end());

  // Union of [i..i+2k) plus the tail (max(0, n-2k)..n].
  std::vector<Interval> raw;
  for (pos_t i : accepted) raw.push_back(Interval{i, 2 * k});
  raw.push_back(
      Interval{std::max<pos_t>(0, n - 2 * k) + 1, std::min<pos_t>(2 * k, n)});
  std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) {
    return a.start < b.start;
  });
  std::vector<Interval> merged;
  for (const auto& iv : raw) {
    if (!merged.empty() &&
        merged.back().start + merged.back().len >= iv.start) {
      merged.back().len =
          std::max(merged.back().len, iv.start + iv.len - merged.back().start);
    } else {
      merged.push_back(iv);
    }
  }
  return IntervalSet(std::move(merged));
}

IntervalSet compress_set(const std::vector<pos_t>& sorted_positions,
                         const IntervalSet& cover) {
  return cover.intersect_sorted(sorted_positions);
}

CoverHierarchy::CoverHierarchy(const Text& t,
                               const ConstructionOracles& oracles,
                               std::vector<pos_t> phrase_starts)
    : t_(&t), oracles_(&oracles), phrase_starts_(std::move(phrase_starts)) {}

const IntervalSet& CoverHierarchy::cover(pos_t ell) const {
  pos_t k = 1;
  while (k < ell) k <<= 1;
  auto it = cache_.find(k);
  if (it == cache_.end())
    it = cache_.emplace(k, build_cover(*t_, k, *oracles_, phrase_starts_))
             .first;
  return it->second;
}

}  // namespace dsa
