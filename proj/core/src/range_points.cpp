#include "dsa/range_points.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace dsa {

namespace {
constexpr pos_t kNoLabel = std::numeric_limits<pos_t>::max();
}

PointStructure::PointStructure(std::vector<WeightedPoint> pts) {
  // Set semantics first (identical tuples collapse), then coincident
  // (x, y) points merge with weight sums and label minima.
  std::sort(pts.begin(), pts.end(),
            [](const WeightedPoint& a, const WeightedPoint& b) {
              if (a.x != b.x) return a.x < b.x;
              if (a.y != b.y) return a.y < b.y;
              if (a.w != b.w) return a.w < b.w;
              return a.label < b.label;
            });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  for (const auto& p : pts) {
    if (!xs_.empty() && xs_.back() == p.x && ys_.back() == p.y) {
      ws_.back() += p.w;
      labels_.back() = std::min(labels_.back(), p.label);
    } else {
      xs_.push_back(p.x);
      ys_.push_back(p.y);
      ws_.push_back(p.w);
      labels_.push_back(p.label);
    }
  }
  ydistinct_ = ys_;
  std::sort(ydistinct_.begin(), ydistinct_.end());
  ydistinct_.erase(std::unique(ydistinct_.begin(), ydistinct_.end()),
                   ydistinct_.end());
  build_tree();
}

void PointStructure::build_tree() {
  const pos_t m = pos_t(xs_.size());
  leaves_ = 1;
  while (leaves_ < std::max<pos_t>(m, 1)) leaves_ <<= 1;
  nodes_.assign(size_t(2 * leaves_), {});
  for (pos_t i = 0; i < m; ++i)
    nodes_[size_t(leaves_ + i)].ys = {ys_[size_t(i)]};
  for (pos_t v = leaves_ - 1; v >= 1; --v) {
    const auto& a = nodes_[size_t(2 * v)].ys;
    const auto& b = nodes_[size_t(2 * v + 1)].ys;
    auto& dst = nodes_[size_t(v)].ys;
    dst.resize(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), dst.begin());
  }
  // Per node: weight prefix sums and a min-label segment tree, both in the
  // node's y-sorted order. Labels/weights are pulled by sorting the node's
  // member points.
  for (pos_t v = 1; v < 2 * leaves_; ++v) {
    auto& nd = nodes_[size_t(v)];
    if (nd.ys.empty()) continue;
    // members of this node: contiguous x-range of points
    pos_t width = leaves_ >> (63 - __builtin_clzll(std::uint64_t(v)));
    pos_t lo = (v - (leaves_ / std::max<pos_t>(width, 1))) * width;
    // simpler: recompute membership by walking the tree boundaries
    (void)lo;
    nd.wsum.clear();
    nd.minseg.clear();
  }
  // Rebuild per-node payloads by inserting points root-to-leaf.
  struct Item {
    pos_t y;
    std::uint64_t w;
    pos_t label;
  };
  std::vector<std::vector<Item>> payload(size_t(2 * leaves_));
  for (pos_t i = 0; i < m; ++i) {
    pos_t v = leaves_ + i;
    while (v >= 1) {
      payload[size_t(v)].push_back(
          Item{ys_[size_t(i)], ws_[size_t(i)], labels_[size_t(i)]});
      v >>= 1;
    }
  }
  for (pos_t v = 1; v < 2 * leaves_; ++v) {
    auto& nd = nodes_[size_t(v)];
    auto& items = payload[size_t(v)];
    std::stable_sort(items.begin(), items.end(),
                     [](const Item& a, const Item& b) { return a.y < b.y; });
    nd.ys.resize(items.size());
    nd.wsum.assign(items.size() + 1, 0);
    size_t sz = items.size();
    nd.minseg.assign(2 * std::max<size_t>(sz, 1), kNoLabel);
    for (size_t i = 0; i < sz; ++i) {
      nd.ys[i] = items[i].y;
      nd.wsum[i + 1] = nd.wsum[i] + items[i].w;
      nd.minseg[sz + i] = items[i].label;
    }
    for (size_t i = sz; i-- > 1;)
      nd.minseg[i] = std::min(nd.minseg[2 * i], nd.minseg[2 * i + 1]);
  }
}

std::uint64_t PointStructure::count_node(const Node& nd, pos_t ylo,
                                         pos_t yhi) const {
  auto lo = std::lower_bound(nd.ys.begin(), nd.ys.end(), ylo) - nd.ys.begin();
  auto hi = std::lower_bound(nd.ys.begin(), nd.ys.end(), yhi) - nd.ys.begin();
  return nd.wsum[size_t(hi)] - nd.wsum[size_t(lo)];
}

pos_t PointStructure::min_node(const Node& nd, pos_t ylo, pos_t yhi) const {
  size_t sz = nd.ys.size();
  size_t l = size_t(std::lower_bound(nd.ys.begin(), nd.ys.end(), ylo) -
                    nd.ys.begin());
  size_t r = size_t(std::lower_bound(nd.ys.begin(), nd.ys.end(), yhi) -
                    nd.ys.begin());
  pos_t best = kNoLabel;
  for (l += sz, r += sz; l < r; l >>= 1, r >>= 1) {
    if (l & 1) best = std::min(best, nd.minseg[l++]);
    if (r & 1) best = std::min(best, nd.minseg[--r]);
  }
  return best;
}

std::uint64_t PointStructure::count4(pos_t xl, pos_t xu, pos_t yl,
                                     pos_t yu) const {
  if (xs_.empty() || xl >= xu || yl >= yu) return 0;
  // x rank range
  pos_t l = std::lower_bound(xs_.begin(), xs_.end(), xl) - xs_.begin();
  pos_t r = std::lower_bound(xs_.begin(), xs_.end(), xu) - xs_.begin();
  std::uint64_t total = 0;
  for (l += leaves_, r += leaves_; l < r; l >>= 1, r >>= 1) {
    if (l & 1) total += count_node(nodes_[size_t(l++)], yl, yu);
    if (r & 1) total += count_node(nodes_[size_t(--r)], yl, yu);
  }
  return total;
}

std::uint64_t PointStructure::count3_exc(pos_t xl, pos_t xu, pos_t yu) const {
  if (ydistinct_.empty()) return 0;
  return count4(xl, xu, ydistinct_.front(), yu);
}

std::uint64_t PointStructure::count3_inc(pos_t xl, pos_t xu, pos_t yu) const {
  if (yu == std::numeric_limits<pos_t>::max())
    return count2(xl, xu);
  return count3_exc(xl, xu, yu + 1);
}

std::uint64_t PointStructure::count2(pos_t xl, pos_t xu) const {
  if (ydistinct_.empty()) return 0;
  return count4(xl, xu, ydistinct_.front(), ydistinct_.back() + 1);
}

pos_t PointStructure::select(pos_t xl, pos_t xu, std::uint64_t r) const {
  if (r < 1 || r > count2(xl, xu))
    throw std::out_of_range("PointStructure::select: rank");
  // binary search the unique y with count3_exc < r <= count3_inc
  size_t lo = 0, hi = ydistinct_.size() - 1;
  while (lo < hi) {
    size_t mid = (lo + hi) / 2;
    if (count3_inc(xl, xu, ydistinct_[mid]) >= r)
      hi = mid;
    else
      lo = mid + 1;
  }
  pos_t yu = ydistinct_[lo];
  return min4(xl, xu, yu, yu + 1);  // a member with y == yu
}

pos_t PointStructure::min4(pos_t xl, pos_t xu, pos_t yl, pos_t yu) const {
  if (xs_.empty() || xl >= xu || yl >= yu)
    throw std::out_of_range("PointStructure::min4: empty range");
  pos_t l = std::lower_bound(xs_.begin(), xs_.end(), xl) - xs_.begin();
  pos_t r = std::lower_bound(xs_.begin(), xs_.end(), xu) - xs_.begin();
  pos_t best = kNoLabel;
  for (l += leaves_, r += leaves_; l < r; l >>= 1, r >>= 1) {
    if (l & 1) best = std::min(best, min_node(nodes_[size_t(l++)], yl, yu));
    if (r & 1) best = std::min(best, min_node(nodes_[size_t(--r)], yl, yu));
  }
  if (best == kNoLabel)
    throw std::out_of_range("PointStructure::min4: empty range");
  return best;
}

pos_t PointStructure::min2(pos_t xl, pos_t xu) const {
  if (ydistinct_.empty())
    throw std::out_of_range("PointStructure::min2: empty");
  return min4(xl, xu, ydistinct_.front(), ydistinct_.back() + 1);
}

void PointStructure::save(Writer& w) const {
  w.vec_i64(xs_);
  w.vec_i64(ys_);
  w.vec_u64(ws_);
  w.vec_i64(labels_);
}

PointStructure PointStructure::load(Reader& r) {
  PointStructure ps;
  ps.xs_ = r.vec_i64<pos_t>();
  ps.ys_ = r.vec_i64<pos_t>();
  ps.ws_ = r.vec_u64<std::uint64_t>();
  ps.labels_ = r.vec_i64<pos_t>();
  if (ps.ys_.size() != ps.xs_.size() || ps.ws_.size() != ps.xs_.size() ||
      ps.labels_.size() != ps.xs_.size())
    throw std::runtime_error("PointStructure: corrupt payload");
  ps.ydistinct_ = ps.ys_;
  std::sort(ps.ydistinct_.begin(), ps.ydistinct_.end());
  ps.ydistinct_.erase(
      std::unique(ps.ydistinct_.begin(), ps.ydistinct_.end()),
      ps.ydistinct_.end());
  ps.build_tree();
  return ps;
}

// ---------------------------------------------------------------------------

ContextWeights context_weights(const ConstructionOracles& oracles, pos_t i,
                               pos_t q) {
  const pos_t n = oracles.text().n();
  if (i - q < 1 || i + q > n) return ContextWeights{1, i};
  // leftmost window start maps to the window's center position
  return ContextWeights{std::uint64_t(oracles.occ_count(i - q, 2 * q)),
                        oracles.leftmost_occ(i - q, 2 * q) + q};
}

namespace {

// Sorts positions by a context comparator and returns, per input index,
// the count of positions with strictly smaller context.
template <class Cmp3>
void sort_and_rank(std::vector<pos_t>& positions, std::vector<pos_t>& coord,
                   const Cmp3& cmp3) {
  std::stable_sort(positions.begin(), positions.end(),
                   [&](pos_t a, pos_t b) { return cmp3(a, b) < 0; });
  coord.assign(positions.size(), 0);
  for (size_t i = 1; i < positions.size(); ++i)
    coord[i] = cmp3(positions[i - 1], positions[i]) == 0
                   ? coord[i - 1]
                   : pos_t(i);
}

// Binary search: number of sorted entries whose context precedes the
// bound; pred(entry) = context(entry) < bound.
template <class Pred>
pos_t count_below(const std::vector<pos_t>& sorted, const Pred& pred) {
  size_t lo = 0, hi = sorted.size();
  while (lo < hi) {
    size_t mid = (lo + hi) / 2;
    if (pred(sorted[mid]))
      lo = mid + 1;
    else
      hi = mid;
  }
  return pos_t(lo);
}

// context < bound c^inf  iff  context < bound or bound prefix of context.
inline bool below_padded(int cmp_plain, bool bound_is_prefix) {
  return cmp_plain < 0 || bound_is_prefix;
}

}  // namespace

StrStrPoints::StrStrPoints(const GrammarTextView& view,
                           const ConstructionOracles& oracles,
                           std::vector<pos_t> positions, pos_t q,
                           OrderMode y_order)
    : q_(q), y_order_(y_order) {
  pl_ = positions;
  pr_ = positions;
  std::vector<pos_t> xcoord, ycoord;
  auto cmpL = [&](pos_t a, pos_t b) {
    return view.cmp_rev_inf(a, q_, b, q_, OrderMode::Standard);
  };
  auto cmpR = [&](pos_t a, pos_t b) {
    return view.cmp_inf(a, q_, b, q_, y_order_);
  };
  sort_and_rank(pl_, xcoord, cmpL);
  sort_and_rank(pr_, ycoord, cmpR);

  std::vector<pos_t> xof(positions.size()), yof(positions.size());
  {
    std::map<pos_t, pos_t> xm, ym;
    for (size_t i = 0; i < pl_.size(); ++i) xm[pl_[i]] = xcoord[i];
    for (size_t i = 0; i < pr_.size(); ++i) ym[pr_[i]] = ycoord[i];
    for (size_t i = 0; i < positions.size(); ++i) {
      xof[i] = xm[positions[i]];
      yof[i] = ym[positions[i]];
    }
  }
  std::vector<WeightedPoint> pts;
  pts.reserve(positions.size());
  for (size_t i = 0; i < positions.size(); ++i) {
    auto cw = context_weights(oracles, positions[i], q_);
    pts.push_back(WeightedPoint{xof[i], yof[i], cw.c, cw.m});
  }
  core_ = PointStructure(std::move(pts));
}

pos_t StrStrPoints::xrank(const GrammarTextView& view, pos_t i, pos_t len,
                          bool padded) const {
  return count_below(pl_, [&](pos_t p) {
    if (!padded)
      return view.cmp_rev_inf(p, q_, i, len, OrderMode::Standard) < 0;
    // S < x c^inf  iff  the first min(|S|,|x|) symbols compare <= 0:
    // a tie means one side is a prefix of the other, and both of those
    // cases fall below the padded bound.
    pos_t m = std::min(q_, len);
    return view.cmp_rev_inf(p, m, i, m, OrderMode::Standard) <= 0;
  });
}

pos_t StrStrPoints::yrank(const GrammarTextView& view, pos_t i, pos_t len,
                          bool padded) const {
  return count_below(pr_, [&](pos_t p) {
    if (!padded) return view.cmp_inf(p, q_, i, len, y_order_) < 0;
    pos_t m = std::min(q_, len);
    return view.cmp_inf(p, m, i, m, y_order_) <= 0;
  });
}

void StrStrPoints::save(Writer& w) const {
  w.i64(q_);
  w.u8(y_order_ == OrderMode::Inverted ? 1 : 0);
  w.vec_i64(pl_);
  w.vec_i64(pr_);
  core_.save(w);
}

StrStrPoints StrStrPoints::load(Reader& r) {
  StrStrPoints s;
  s.q_ = r.i64();
  s.y_order_ = r.u8() ? OrderMode::Inverted : OrderMode::Standard;
  s.pl_ = r.vec_i64<pos_t>();
  s.pr_ = r.vec_i64<pos_t>();
  s.core_ = PointStructure::load(r);
  return s;
}

IntStrPoints::IntStrPoints(const GrammarTextView& view,
                           const ConstructionOracles& oracles,
                           std::vector<std::pair<pos_t, pos_t>> pairs,
                           pos_t q, OrderMode y_order)
    : q_(q), y_order_(y_order) {
  std::vector<pos_t> positions;
  for (auto& [i, h] : pairs) positions.push_back(i);
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()),
                  positions.end());
  pr_ = positions;
  std::vector<pos_t> ycoord;
  auto cmpR = [&](pos_t a, pos_t b) {
    return view.cmp_inf(a, q_, b, q_, y_order_);
  };
  sort_and_rank(pr_, ycoord, cmpR);
  std::map<pos_t, pos_t> ym;
  for (size_t i = 0; i < pr_.size(); ++i) ym[pr_[i]] = ycoord[i];

  std::vector<WeightedPoint> pts;
  pts.reserve(pairs.size());
  for (auto& [i, h] : pairs) {
    auto cw = context_weights(oracles, i, q_);
    pts.push_back(WeightedPoint{h, ym[i], cw.c, cw.m});
  }
  core_ = PointStructure(std::move(pts));
}

pos_t IntStrPoints::yrank(const GrammarTextView& view, pos_t i, pos_t len,
                          bool padded) const {
  return count_below(pr_, [&](pos_t p) {
    if (!padded) return view.cmp_inf(p, q_, i, len, y_order_) < 0;
    pos_t m = std::min(q_, len);
    return view.cmp_inf(p, m, i, m, y_order_) <= 0;
  });
}

void IntStrPoints::save(Writer& w) const {
  w.i64(q_);
  w.u8(y_order_ == OrderMode::Inverted ? 1 : 0);
  w.vec_i64(pr_);
  core_.save(w);
}

IntStrPoints IntStrPoints::load(Reader& r) {
  IntStrPoints s;
  s.q_ = r.i64();
  s.y_order_ = r.u8() ? OrderMode::Inverted : OrderMode::Standard;
  s.pr_ = r.vec_i64<pos_t>();
  s.core_ = PointStructure::load(r);
  return s;
}

}  // namespace dsa
