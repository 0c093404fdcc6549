#include "dsa/oracles.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace dsa {

std::vector<pos_t> suffix_array_u32(const std::vector<std::uint32_t>& seq) {
  const pos_t n = static_cast<pos_t>(seq.size());
  if (n == 0) return {};
  // Rank-compress the alphabet so counting sort buckets stay O(n).
  std::vector<std::uint32_t> alpha(seq);
  std::sort(alpha.begin(), alpha.end());
  alpha.erase(std::unique(alpha.begin(), alpha.end()), alpha.end());
  std::vector<pos_t> rank(static_cast<size_t>(n)), sa(static_cast<size_t>(n)), tmp(static_cast<size_t>(n)), cnt;
  for (pos_t i = 0; i < n; ++i)
    rank[size_t(i)] = std::lower_bound(alpha.begin(), alpha.end(),
                                       seq[size_t(i)]) -
                      alpha.begin();

  const pos_t buckets = n + 2;
  std::vector<pos_t> order(static_cast<size_t>(n));
  auto counting_sort = [&](const std::vector<pos_t>& key) {
    cnt.assign(size_t(buckets + 1), 0);
    for (pos_t i : order) cnt[size_t(key[size_t(i)] + 1)]++;
    for (pos_t i = 1; i <= buckets; ++i) cnt[size_t(i)] += cnt[size_t(i - 1)];
    for (pos_t i : order) sa[size_t(cnt[size_t(key[size_t(i)])]++)] = i;
  };
  std::iota(order.begin(), order.end(), 0);
  counting_sort(rank);
  if (n > 1) {
    for (pos_t len = 1;; len <<= 1) {
      // Radix: stable sort by second key, then by first key.
      std::vector<pos_t> second(static_cast<size_t>(n));
      for (pos_t i = 0; i < n; ++i)
        second[size_t(i)] = i + len < n ? rank[size_t(i + len)] + 1 : 0;
      std::iota(order.begin(), order.end(), 0);
      counting_sort(second);
      order = sa;
      counting_sort(rank);

      tmp[size_t(sa[0])] = 0;
      for (pos_t i = 1; i < n; ++i) {
        bool same = rank[size_t(sa[size_t(i)])] ==
                        rank[size_t(sa[size_t(i - 1)])] &&
                    second[size_t(sa[size_t(i)])] ==
                        second[size_t(sa[size_t(i - 1)])];
        tmp[size_t(sa[size_t(i)])] = tmp[size_t(sa[size_t(i - 1)])] +
                                     (same ? 0 : 1);
      }
      rank = tmp;
      if (rank[size_t(sa[size_t(n - 1)])] == n - 1) break;
    }
  }
  std::vector<pos_t> out(static_cast<size_t>(n));
  for (pos_t i = 0; i < n; ++i) out[size_t(i)] = sa[size_t(i)] + 1;
  return out;
}

std::vector<pos_t> brute_suffix_array(const Text& t) {
  std::vector<std::uint32_t> seq(t.bytes().begin(), t.bytes().end());
  return suffix_array_u32(seq);
}

std::vector<pos_t> inverse_permutation(const std::vector<pos_t>& sa) {
  std::vector<pos_t> isa(sa.size());
  for (size_t i = 0; i < sa.size(); ++i) isa[size_t(sa[i] - 1)] = pos_t(i) + 1;
  return isa;
}

OccResult occ_oracle(const Text& t, const std::vector<std::uint8_t>& pattern,
                     pos_t ell) {
  const pos_t n = t.n();
  const pos_t m = static_cast<pos_t>(pattern.size());
  const pos_t need = std::min(m, ell);
  OccResult res;
  pos_t smaller_outside = 0;
  for (pos_t j = 1; j <= n; ++j) {
    pos_t lcp = 0;
    while (lcp < m && j + lcp <= n && t.at(j + lcp) == pattern[size_t(lcp)])
      ++lcp;
    bool in_occ = lcp >= need;
    if (in_occ) {
      res.occ.push_back(j);
    } else {
      // suffix < pattern?
      bool less;
      if (j + lcp > n)
        less = lcp < m;  // suffix is a proper prefix of the pattern
      else if (lcp == m)
        less = false;  // pattern is a prefix of the suffix
      else
        less = t.at(j + lcp) < pattern[size_t(lcp)];
      if (less) ++smaller_outside;
    }
  }
  res.range_beg = smaller_outside;
  res.range_end = smaller_outside + static_cast<pos_t>(res.occ.size());
  return res;
}

DeltaProfile delta_complexity(const Text& t) {
  const pos_t n = t.n();
  auto sa = brute_suffix_array(t);
  // Kasai LCP between consecutive SA entries.
  auto isa = inverse_permutation(sa);
  std::vector<pos_t> lcp(size_t(n), 0);
  pos_t h = 0;
  for (pos_t j = 1; j <= n; ++j) {
    if (isa[size_t(j - 1)] > 1) {
      pos_t k = sa[size_t(isa[size_t(j - 1)] - 2)];
      while (j + h <= n && k + h <= n && t.at(j + h) == t.at(k + h)) ++h;
      lcp[size_t(isa[size_t(j - 1)] - 1)] = h;
      if (h > 0) --h;
    } else {
      h = 0;
    }
  }
  std::vector<pos_t> ge(size_t(n) + 2, 0);
  for (pos_t i = 1; i < n; ++i)
    if (lcp[size_t(i)] > 0) ge[size_t(std::min(lcp[size_t(i)], n))]++;
  for (pos_t l = n - 1; l >= 1; --l) ge[size_t(l)] += ge[size_t(l + 1)];

  DeltaProfile prof;
  prof.d.resize(size_t(n));
  for (pos_t l = 1; l <= n; ++l)
    prof.d[size_t(l - 1)] = (n - l + 1) - ge[size_t(l)];
  prof.argmax_l = 1;
  for (pos_t l = 2; l <= n; ++l) {
    // d_l / l > d_best / best  <=>  d_l * best > d_best * l
    if (prof.d[size_t(l - 1)] * prof.argmax_l >
        prof.d[size_t(prof.argmax_l - 1)] * l)
      prof.argmax_l = l;
  }
  return prof;
}

pos_t naive_lce(const Text& t, pos_t j1, pos_t j2, Direction dir) {
  const pos_t n = t.n();
  if (j1 < 1 || j1 > n || j2 < 1 || j2 > n)
    throw std::out_of_range("naive_lce: position out of range");
  pos_t l = 0;
  if (dir == Direction::Forward) {
    while (j1 + l <= n && j2 + l <= n && t.at(j1 + l) == t.at(j2 + l)) ++l;
  } else {
    while (j1 - l >= 1 && j2 - l >= 1 && t.at(j1 - l) == t.at(j2 - l)) ++l;
  }
  return l;
}

pos_t shortest_period_naive(const std::vector<std::uint8_t>& s) {
  const pos_t m = static_cast<pos_t>(s.size());
  if (m == 0) throw std::invalid_argument("shortest_period_naive: empty");
  for (pos_t p = 1; p < m; ++p) {
    bool ok = true;
    for (pos_t i = 0; i + p < m; ++i)
      if (s[size_t(i)] != s[size_t(i + p)]) { ok = false; break; }
    if (ok) return p;
  }
  return m;
}

void ConstructionOracles::BlockRmq::build(const std::vector<pos_t>& v,
                                          bool maxv) {
  data = v;
  maximize = maxv;
  const pos_t n = static_cast<pos_t>(v.size());
  const pos_t nb = (n + (1 << shift) - 1) >> shift;
  auto better = [&](pos_t a, pos_t b) { return maximize ? std::max(a, b) : std::min(a, b); };
  block.assign(size_t(std::max<pos_t>(nb, 1)), maximize ? INT64_MIN : INT64_MAX);
  for (pos_t i = 0; i < n; ++i)
    block[size_t(i >> shift)] = better(block[size_t(i >> shift)], v[size_t(i)]);
  table.clear();
  table.push_back(block);
  for (pos_t len = 1; (len << 1) <= nb; len <<= 1) {
    const auto& prev = table.back();
    std::vector<pos_t> cur(prev.size());
    for (size_t i = 0; i + size_t(len) < prev.size(); ++i)
      cur[i] = better(prev[i], prev[i + size_t(len)]);
    for (size_t i = prev.size() - std::min<size_t>(prev.size(), size_t(len));
         i < prev.size(); ++i)
      cur[i] = prev[i];
    table.push_back(std::move(cur));
  }
}

pos_t ConstructionOracles::BlockRmq::query(pos_t lo, pos_t hi) const {
  auto better = [&](pos_t a, pos_t b) { return maximize ? std::max(a, b) : std::min(a, b); };
  pos_t best = maximize ? INT64_MIN : INT64_MAX;
  pos_t blo = lo >> shift, bhi = hi >> shift;
  if (blo == bhi) {
    for (pos_t i = lo; i <= hi; ++i) best = better(best, data[size_t(i)]);
    return best;
  }
  for (pos_t i = lo; i < (blo + 1) << shift; ++i)
    best = better(best, data[size_t(i)]);
  for (pos_t i = bhi << shift; i <= hi; ++i)
    best = better(best, data[size_t(i)]);
  if (blo + 1 <= bhi - 1) {
    pos_t l = blo + 1, r = bhi - 1;
    int k = 0;
    while ((pos_t(1) << (k + 1)) <= r - l + 1) ++k;
    best = better(best, table[size_t(k)][size_t(l)]);
    best = better(best, table[size_t(k)][size_t(r - (pos_t(1) << k) + 1)]);
  }
  return best;
}

ConstructionOracles::ConstructionOracles(const Text& t) : t_(&t) {
  sa_ = brute_suffix_array(t);
  isa_ = inverse_permutation(sa_);
  const pos_t n = t.n();
  lcp_.assign(size_t(n), 0);
  pos_t h = 0;
  for (pos_t j = 1; j <= n; ++j) {
    if (isa_[size_t(j - 1)] > 1) {
      pos_t k = sa_[size_t(isa_[size_t(j - 1)] - 2)];
      while (j + h <= n && k + h <= n && t.at(j + h) == t.at(k + h)) ++h;
      lcp_[size_t(isa_[size_t(j - 1)] - 1)] = h;
      if (h > 0) --h;
    } else {
      h = 0;
    }
  }
  lcp_min_.build(lcp_, false);
  sa_min_.build(sa_, false);
  sa_max_.build(sa_, true);

  tree_leaves_ = 1;
  while (tree_leaves_ < n) tree_leaves_ <<= 1;
  merge_tree_.assign(size_t(2 * tree_leaves_), {});
  for (pos_t i = 0; i < n; ++i)
    merge_tree_[size_t(tree_leaves_ + i)] = {sa_[size_t(i)]};
  for (pos_t v = tree_leaves_ - 1; v >= 1; --v) {
    const auto& a = merge_tree_[size_t(2 * v)];
    const auto& b = merge_tree_[size_t(2 * v + 1)];
    auto& dst = merge_tree_[size_t(v)];
    dst.resize(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), dst.begin());
  }
}

pos_t ConstructionOracles::rightmost_occ_before(pos_t start, pos_t len,
                                                pos_t before) const {
  auto [lo, hi] = sa_range(start, len);
  if (lo > hi) return -1;
  pos_t best = -1;
  // Walk the segment tree over rank space [lo-1 .. hi-1].
  pos_t l = lo - 1 + tree_leaves_, r = hi - 1 + tree_leaves_ + 1;
  auto probe = [&](pos_t v) {
    const auto& vec = merge_tree_[size_t(v)];
    auto it = std::lower_bound(vec.begin(), vec.end(), before);
    if (it != vec.begin()) best = std::max(best, *(it - 1));
  };
  while (l < r) {
    if (l & 1) probe(l++);
    if (r & 1) probe(--r);
    l >>= 1;
    r >>= 1;
  }
  return best;
}

pos_t ConstructionOracles::lce(pos_t j1, pos_t j2) const {
  const pos_t n = t_->n();
  if (j1 == j2) return n - j1 + 1;
  pos_t r1 = isa_[size_t(j1 - 1)], r2 = isa_[size_t(j2 - 1)];
  if (r1 > r2) std::swap(r1, r2);
  return lcp_min_.query(r1, r2 - 1);  // lcp_[r] = lcp(SA[r-1], SA[r]), 0-based r
}

pos_t ConstructionOracles::lce_inf(pos_t x, pos_t y, pos_t cap) const {
  const pos_t n = t_->n();
  pos_t total = 0;
  int guard = 0;
  while (total < cap) {
    pos_t x0 = t_->tinf_pos(x + total);
    pos_t y0 = t_->tinf_pos(y + total);
    if (x0 == y0) return cap;  // aligned: periodic match forever
    pos_t l = lce(x0, y0);
    bool hitx = x0 + l > n, hity = y0 + l > n;
    if (!hitx && !hity) return std::min(cap, total + l);
    total += l;
    if (++guard > 8) return std::min(cap, total);  // unreachable with a sentinel
  }
  return cap;
}

void ConstructionOracles::check_substring(pos_t start, pos_t len) const {
  if (len < 0 || start < 1 || start + len - 1 > t_->n())
    throw std::out_of_range("ConstructionOracles: bad substring");
}

int ConstructionOracles::cmp_suffix_vs_substring(pos_t suf, pos_t start,
                                                 pos_t len) const {
  const pos_t n = t_->n();
  pos_t l = std::min(lce(suf, start), len);
  l = std::min(l, n - suf + 1);
  if (l == len) return 0;       // substring is a prefix of the suffix
  if (suf + l > n) return -1;   // suffix is a proper prefix of the substring
  return t_->at(suf + l) < t_->at(start + l) ? -1 : 1;
}

std::pair<pos_t, pos_t> ConstructionOracles::sa_range(pos_t start,
                                                      pos_t len) const {
  check_substring(start, len);
  const pos_t n = t_->n();
  // First rank with suffix >= substring prefix.
  pos_t lo = 1, hi = n + 1;
  while (lo < hi) {
    pos_t mid = (lo + hi) / 2;
    if (cmp_suffix_vs_substring(sa_[size_t(mid - 1)], start, len) < 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  pos_t first = lo;
  hi = n + 1;
  while (lo < hi) {
    pos_t mid = (lo + hi) / 2;
    if (cmp_suffix_vs_substring(sa_[size_t(mid - 1)], start, len) <= 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  return {first, lo - 1};
}

pos_t ConstructionOracles::leftmost_occ(pos_t start, pos_t len) const {
  auto [lo, hi] = sa_range(start, len);
  if (lo > hi) throw std::logic_error("leftmost_occ: no occurrence");
  return sa_min_.query(lo - 1, hi - 1);
}

pos_t ConstructionOracles::rightmost_occ(pos_t start, pos_t len) const {
  auto [lo, hi] = sa_range(start, len);
  if (lo > hi) throw std::logic_error("rightmost_occ: no occurrence");
  return sa_max_.query(lo - 1, hi - 1);
}

pos_t ConstructionOracles::occ_count(pos_t start, pos_t len) const {
  auto [lo, hi] = sa_range(start, len);
  return hi - lo + 1;
}

std::optional<pos_t> ConstructionOracles::two_period(pos_t start,
                                                     pos_t len) const {
  check_substring(start, len);
  for (pos_t p = 1; 2 * p <= len; ++p)
    if (lce(start, start + p) >= len - p) return p;
  return std::nullopt;
}

}  // namespace dsa
