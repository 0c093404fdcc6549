#include "dsa/mod_queries.hpp"

#include <algorithm>
#include <stdexcept>

namespace dsa {

ModStructure::ModStructure(std::vector<WeightedInterval> intervals, pos_t h)
    : h_(h) {
  if (h < 1) throw std::invalid_argument("ModStructure: modulus");
  std::sort(intervals.begin(), intervals.end(),
            [](const WeightedInterval& a, const WeightedInterval& b) {
              return a.e != b.e ? a.e < b.e : a.label < b.label;
            });
  for (const auto& iv : intervals) {
    e_.push_back(iv.e);
    w_.push_back(iv.w);
    labels_.push_back(iv.label);
  }
  {
    auto sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("ModStructure: duplicate labels");
  }
  build();
}

void ModStructure::build() {
  const size_t p = e_.size();
  // index 0 is the (e, w) = (0, 0) sentinel
  y_.assign(p + 1, 0);
  s_pref_.assign(p + 1, 0);
  s_suf_.assign(p + 2, 0);
  std::vector<WeightedPoint> pts;
  for (size_t i = 1; i <= p; ++i) {
    pos_t e = e_[i - 1];
    y_[i] = e / h_;
    s_pref_[i] = s_pref_[i - 1] + w_[i - 1] * std::uint64_t(y_[i]);
    pts.push_back(WeightedPoint{e % h_, e / h_, w_[i - 1], labels_[i - 1]});
  }
  for (size_t i = p; i-- > 0;) s_suf_[i] = s_suf_[i + 1] + w_[i];
  // shift: s_suf_[i] = sum of w_j for j > i (1-based interval indices)
  // recompute cleanly:
  s_suf_.assign(p + 1, 0);
  for (size_t i = p; i-- > 0;) s_suf_[i] = s_suf_[i + 1] + w_[i];
  points_ = PointStructure(std::move(pts));
}

std::uint64_t ModStructure::count_one(pos_t r, pos_t k) const {
  if (k < 0 || e_.empty()) return 0;
  // j = last index with quotient <= k  (y_ ascending with e_)
  size_t j = size_t(std::upper_bound(y_.begin() + 1, y_.end(), k) -
                    (y_.begin() + 1));
  // short intervals contribute w*y + the residue point; long ones w*(k+1)
  std::uint64_t res = s_pref_[j] + std::uint64_t(k + 1) * s_suf_[j];
  res += points_.count4(r, h_, 0, k + 1);
  return res;
}

std::uint64_t ModStructure::count_zero(pos_t r) const {
  if (e_.empty()) return 0;
  std::uint64_t res = s_pref_[e_.size()];
  res += points_.count4(r, h_, 0, y_[e_.size()] + 1);
  return res;
}

std::uint64_t ModStructure::count_two(pos_t r, pos_t k1, pos_t k2) const {
  if (k1 > k2) throw std::invalid_argument("ModStructure::count_two");
  return count_one(r, k2) - count_one(r, k1);
}

pos_t ModStructure::select(pos_t r, std::uint64_t c) const {
  if (c < 1 || c > count_zero(r))
    throw std::out_of_range("ModStructure::select: rank");
  pos_t lo = 0, hi = e_.empty() ? 0 : e_.back() / h_;
  while (lo < hi) {
    pos_t mid = lo + (hi - lo) / 2;
    if (count_one(r, mid) >= c)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

void ModStructure::save(Writer& w) const {
  w.i64(h_);
  w.vec_i64(e_);
  w.vec_u64(w_);
  w.vec_i64(labels_);
}

ModStructure ModStructure::load(Reader& r) {
  ModStructure s;
  s.h_ = r.i64();
  s.e_ = r.vec_i64<pos_t>();
  s.w_ = r.vec_u64<std::uint64_t>();
  s.labels_ = r.vec_i64<pos_t>();
  if (s.w_.size() != s.e_.size() || s.labels_.size() != s.e_.size())
    throw std::runtime_error("ModStructure: corrupt payload");
  s.build();
  return s;
}

std::vector<WeightedInterval> weighted_intervals(
    const ConstructionOracles& oracles,
    const std::vector<std::pair<pos_t, pos_t>>& pairs, pos_t q) {
  std::vector<WeightedInterval> out;
  for (const auto& [i, e] : pairs) {
    auto cw = context_weights(oracles, i, q);
    out.push_back(WeightedInterval{e, cw.c, cw.m});
  }
  std::sort(out.begin(), out.end(),
            [](const WeightedInterval& a, const WeightedInterval& b) {
              if (a.e != b.e) return a.e < b.e;
              if (a.label != b.label) return a.label < b.label;
              return a.w < b.w;
            });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ModStructure build_interval_structure(
    const ConstructionOracles& oracles,
    const std::vector<std::pair<pos_t, pos_t>>& pairs, pos_t q, pos_t h) {
  return ModStructure(weighted_intervals(oracles, pairs, q), h);
}

}  // namespace dsa
