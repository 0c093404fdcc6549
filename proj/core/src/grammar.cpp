#include "dsa/grammar.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace dsa {

namespace {
inline std::uint64_t key2(std::uint64_t a, std::uint64_t b) {
  return (a << 32) | b;
}
}  // namespace

// ---------------------------------------------------------------------------
// Slp

sym_t Slp::leaf(std::uint32_t value) {
  auto it = leaf_index_.find(value);
  if (it != leaf_index_.end()) return it->second;
  Entry e;
  e.a = value;
  e.b = kNoSym;
  e.explen = 1;
  e.height = 0;
  entries_.push_back(e);
  sym_t id = sym_t(entries_.size() - 1);
  leaf_index_.emplace(value, id);
  return id;
}

sym_t Slp::pair(sym_t a, sym_t b) {
  auto it = pair_index_.find(key2(a, b));
  if (it != pair_index_.end()) return it->second;
  Entry e;
  e.a = a;
  e.b = b;
  e.explen = entries_[a].explen + entries_[b].explen;
  e.height = 1 + std::max(entries_[a].height, entries_[b].height);
  entries_.push_back(e);
  sym_t id = sym_t(entries_.size() - 1);
  pair_index_.emplace(key2(a, b), id);
  return id;
}

std::uint32_t Slp::first_char(sym_t s) const {
  while (!is_leaf(s)) s = left(s);
  return value(s);
}

std::uint32_t Slp::last_char(sym_t s) const {
  while (!is_leaf(s)) s = right(s);
  return value(s);
}

sym_t Slp::join(sym_t a, sym_t b) {
  pos_t ha = height(a), hb = height(b);
  if (std::abs(ha - hb) <= 1) return pair(a, b);
  return ha > hb ? join_right(a, b) : join_left(a, b);
}

// h(a) >= h(b) + 2; descends the right spine of a, AVL rotations on the
// way back (the standard balanced join).
sym_t Slp::join_right(sym_t a, sym_t b) {
  sym_t l = left(a), c = right(a);
  if (height(c) <= height(b) + 1) {
    sym_t t = pair(c, b);
    if (height(t) <= height(l) + 1) return pair(l, t);
    // rotateLeft(pair(l, rotateRight(t)))
    sym_t cl = left(c), cr = right(c);
    return pair(pair(l, cl), pair(cr, b));
  }
  sym_t t = join_right(c, b);
  if (height(t) <= height(l) + 1) return pair(l, t);
  // rotateLeft(pair(l, t))
  return pair(pair(l, left(t)), right(t));
}

sym_t Slp::join_left(sym_t a, sym_t b) {
  sym_t c = left(b), r = right(b);
  if (height(c) <= height(a) + 1) {
    sym_t t = pair(a, c);
    if (height(t) <= height(r) + 1) return pair(t, r);
    // rotateRight(pair(rotateLeft(t), r))
    sym_t cl = left(c), cr = right(c);
    return pair(pair(a, cl), pair(cr, r));
  }
  sym_t t = join_left(a, c);
  if (height(t) <= height(r) + 1) return pair(t, r);
  // rotateRight(pair(t, r))
  return pair(left(t), pair(right(t), r));
}

void Slp::collect(sym_t s, pos_t lo, pos_t i, pos_t j,
                  std::vector<sym_t>& out) {
  // exp(s) covers [lo .. lo + explen(s) - 1]
  pos_t hi = lo + explen(s) - 1;
  if (i <= lo && hi <= j) {
    out.push_back(s);
    return;
  }
  sym_t a = left(s), b = right(s);
  pos_t mid = lo + explen(a) - 1;
  if (i <= mid) collect(a, lo, i, j, out);
  if (j > mid) collect(b, mid + 1, i, j, out);
}

sym_t Slp::extract(sym_t root, pos_t i, pos_t j) {
  if (i < 1 || j > explen(root) || i > j)
    throw std::out_of_range("Slp::extract");
  std::vector<sym_t> parts;
  collect(root, 1, i, j, parts);
  sym_t acc = parts[0];
  for (size_t k = 1; k < parts.size(); ++k) acc = join(acc, parts[k]);
  return acc;
}

void Slp::expand(sym_t s, std::vector<std::uint32_t>& out) const {
  std::vector<sym_t> stack{s};
  while (!stack.empty()) {
    sym_t cur = stack.back();
    stack.pop_back();
    if (is_leaf(cur)) {
      out.push_back(value(cur));
    } else {
      stack.push_back(right(cur));
      stack.push_back(left(cur));
    }
  }
}

bool Slp::avl_balanced(sym_t root) const {
  std::vector<sym_t> stack{root};
  std::unordered_set<sym_t> seen;
  while (!stack.empty()) {
    sym_t cur = stack.back();
    stack.pop_back();
    if (!seen.insert(cur).second || is_leaf(cur)) continue;
    if (std::abs(height(left(cur)) - height(right(cur))) > 1) return false;
    stack.push_back(left(cur));
    stack.push_back(right(cur));
  }
  return true;
}

sym_t slp_from_parsing(Slp& slp,
                       const std::vector<std::pair<pos_t, pos_t>>& parsing) {
  sym_t root = kNoSym;
  pos_t produced = 0;
  for (const auto& [src, len] : parsing) {
    if (len == 0) {
      sym_t s = slp.leaf(std::uint32_t(src));
      root = (root == kNoSym) ? s : slp.join(root, s);
      produced += 1;
    } else {
      if (src < 0 || src >= produced)
        throw std::invalid_argument("slp_from_parsing: bad source");
      pos_t copied = 0;
      while (copied < len) {
        pos_t from = src + copied + 1;  // 1-based
        pos_t avail = produced - (src + copied);
        pos_t take = std::min(len - copied, avail);
        sym_t part = slp.extract(root, from, from + take - 1);
        root = slp.join(root, part);
        produced += take;
        copied += take;
      }
    }
  }
  return root;
}

sym_t slp_from_lz77(Slp& slp, const Parsing& parsing) {
  std::vector<std::pair<pos_t, pos_t>> generic;
  generic.reserve(parsing.phrases.size());
  for (const auto& f : parsing.phrases) {
    if (f.is_literal())
      generic.emplace_back(pos_t(f.lit), 0);
    else
      generic.emplace_back(f.src - 1, f.len);
  }
  return slp_from_parsing(slp, generic);
}

// ---------------------------------------------------------------------------
// Slg

sym_t Slg::leaf(std::uint32_t value) {
  rhs_.emplace_back();
  explen_.push_back(1);
  leaf_of_.push_back(std::int64_t(value));
  return sym_t(rhs_.size() - 1);
}

sym_t Slg::rule(std::vector<sym_t> rhs) {
  pos_t len = 0;
  for (sym_t c : rhs) {
    if (c >= rhs_.size()) throw std::invalid_argument("Slg::rule: bad child");
    len += explen_[c];
  }
  rhs_.push_back(std::move(rhs));
  explen_.push_back(len);
  leaf_of_.push_back(-1);
  return sym_t(rhs_.size() - 1);
}

void Slg::expand(sym_t s, std::vector<std::uint32_t>& out) const {
  std::vector<sym_t> stack{s};
  while (!stack.empty()) {
    sym_t cur = stack.back();
    stack.pop_back();
    if (is_leaf(cur)) {
      out.push_back(value(cur));
    } else {
      const auto& r = rhs_[cur];
      for (auto it = r.rbegin(); it != r.rend(); ++it) stack.push_back(*it);
    }
  }
}

std::vector<sym_t> Slg::extract_sequence(sym_t root, pos_t i, pos_t j) const {
  if (i < 1 || j > explen(root) || i > j)
    throw std::out_of_range("Slg::extract_sequence");
  std::vector<sym_t> out;
  // Recursive descent keeping fully-covered children whole.
  struct Rec {
    const Slg* g;
    std::vector<sym_t>* out;
    void run(sym_t s, pos_t lo, pos_t i, pos_t j) {
      pos_t hi = lo + g->explen(s) - 1;
      if (i <= lo && hi <= j) {
        out->push_back(s);
        return;
      }
      pos_t at = lo;
      for (sym_t c : g->rhs(s)) {
        pos_t chi = at + g->explen(c) - 1;
        if (chi >= i && at <= j && g->explen(c) > 0) run(c, at, i, j);
        at = chi + 1;
      }
    }
  };
  Rec{this, &out}.run(root, 1, i, j);
  return out;
}

std::map<std::uint32_t, std::uint64_t> Slg::leaf_occurrences(
    sym_t root) const {
  std::vector<std::uint64_t> occ(rhs_.size(), 0);
  occ[root] = 1;
  std::map<std::uint32_t, std::uint64_t> out;
  for (sym_t s = root + 1; s-- > 0;) {
    if (occ[s] == 0) continue;
    if (is_leaf(s)) {
      out[value(s)] += occ[s];
    } else {
      for (sym_t c : rhs_[s]) occ[c] += occ[s];
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Direct transforms

std::vector<std::uint32_t> rle_string(const std::vector<std::uint32_t>& s,
                                      const SymPredicate& in_b,
                                      const RunCollapse& collapse) {
  std::vector<std::uint32_t> out;
  size_t i = 0;
  while (i < s.size()) {
    size_t j = i + 1;
    if (in_b(s[i]))
      while (j < s.size() && s[j] == s[i]) ++j;
    if (j - i >= 2)
      out.push_back(collapse(s[i], pos_t(j - i)));
    else
      out.push_back(s[i]);
    i = j;
  }
  return out;
}

std::vector<std::uint32_t> pc_string(const std::vector<std::uint32_t>& s,
                                     const SymPredicate& in_l,
                                     const SymPredicate& in_r,
                                     const PairCollapse& collapse) {
  std::vector<std::uint32_t> out;
  size_t i = 0;
  while (i < s.size()) {
    if (i + 1 < s.size() && in_l(s[i]) && in_r(s[i + 1])) {
      out.push_back(collapse(s[i], s[i + 1]));
      i += 2;
    } else {
      out.push_back(s[i]);
      i += 1;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Grammar rewrites

namespace {
// A boundary run (char, count); empty when count == 0.
struct Run {
  std::uint32_t ch = 0;
  pos_t count = 0;
  bool empty() const { return count == 0; }
};
}  // namespace

RewriteResult rle_rewrite(const Slp& g, sym_t root, const SymPredicate& in_b,
                          const RunCollapse& collapse) {
  RewriteResult res;
  Slg& out = res.grammar;
  const size_t m = g.size();
  std::vector<sym_t> hat(m, kNoSym);
  std::vector<Run> lr(m), rr(m);
  std::vector<pos_t> rle_len(m, 0);

  auto materialize = [&](const Run& r) -> std::optional<sym_t> {
    if (r.empty()) return std::nullopt;
    if (r.count == 1) return out.leaf(r.ch);
    return out.leaf(collapse(r.ch, r.count));
  };
  auto merge = [](const Run& a, const Run& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.ch != b.ch) throw std::logic_error("rle_rewrite: bad merge");
    return Run{a.ch, a.count + b.count};
  };

  for (sym_t s = 0; s < m; ++s) {
    if (g.is_leaf(s)) {
      std::uint32_t v = g.value(s);
      if (in_b(v)) {
        lr[s] = Run{v, 1};
        hat[s] = out.rule({});
        rr[s] = Run{};
        rle_len[s] = 1;
      } else {
        lr[s] = Run{};
        hat[s] = out.rule({out.leaf(v)});
        rr[s] = Run{};
        rle_len[s] = 1;
      }
      continue;
    }
    sym_t b = g.left(s), c = g.right(s);
    if (hat[b] == kNoSym || hat[c] == kNoSym) continue;  // unreachable sym
    std::uint32_t rsb = g.last_char(b), lsc = g.first_char(c);
    std::vector<sym_t> rhs;
    auto push = [&](std::optional<sym_t> x) {
      if (x) rhs.push_back(*x);
    };
    if (rsb != lsc || !in_b(rsb)) {
      rle_len[s] = rle_len[b] + rle_len[c];
      lr[s] = lr[b];
      if (in_b(lsc) && rle_len[c] == 1) {
        rhs.push_back(hat[b]);
        push(materialize(rr[b]));
        rr[s] = lr[c];
      } else {
        rhs.push_back(hat[b]);
        push(materialize(rr[b]));
        push(materialize(lr[c]));
        rhs.push_back(hat[c]);
        rr[s] = rr[c];
      }
    } else {
      rle_len[s] = rle_len[b] + rle_len[c] - 1;
      bool b1 = rle_len[b] == 1, c1 = rle_len[c] == 1;
      if (!b1 && !c1) {
        lr[s] = lr[b];
        rhs.push_back(hat[b]);
        push(materialize(merge(rr[b], lr[c])));
        rhs.push_back(hat[c]);
        rr[s] = rr[c];
      } else if (!b1 && c1) {
        lr[s] = lr[b];
        rhs.push_back(hat[b]);
        rr[s] = merge(rr[b], lr[c]);
      } else if (b1 && !c1) {
        lr[s] = merge(lr[b], lr[c]);
        rhs.push_back(hat[c]);
        rr[s] = rr[c];
      } else {
        lr[s] = merge(lr[b], lr[c]);
        rr[s] = Run{};
      }
    }
    hat[s] = out.rule(std::move(rhs));
  }

  std::vector<sym_t> top;
  if (auto x = materialize(lr[root])) top.push_back(*x);
  top.push_back(hat[root]);
  if (auto x = materialize(rr[root])) top.push_back(*x);
  res.start = out.rule(std::move(top));
  return res;
}

RewriteResult pc_rewrite(const Slp& g, sym_t root, const SymPredicate& in_l,
                         const SymPredicate& in_r,
                         const PairCollapse& collapse) {
  RewriteResult res;
  Slg& out = res.grammar;
  const size_t m = g.size();
  std::vector<sym_t> hat(m, kNoSym);
  // LB/RB are single boundary characters or absent.
  constexpr std::uint64_t kAbsent = ~0ull;
  std::vector<std::uint64_t> lb(m, kAbsent), rb(m, kAbsent);

  for (sym_t s = 0; s < m; ++s) {
    if (g.is_leaf(s)) {
      std::uint32_t v = g.value(s);
      if (in_l(v)) {
        hat[s] = out.rule({});
        rb[s] = v;
      } else if (in_r(v)) {
        lb[s] = v;
        hat[s] = out.rule({});
      } else {
        hat[s] = out.rule({out.leaf(v)});
      }
      continue;
    }
    sym_t b = g.left(s), c = g.right(s);
    if (hat[b] == kNoSym || hat[c] == kNoSym) continue;
    std::vector<sym_t> rhs;
    rhs.push_back(hat[b]);
    if (rb[b] != kAbsent && lb[c] != kAbsent) {
      rhs.push_back(out.leaf(
          collapse(std::uint32_t(rb[b]), std::uint32_t(lb[c]))));
    } else {
      if (rb[b] != kAbsent) rhs.push_back(out.leaf(std::uint32_t(rb[b])));
      if (lb[c] != kAbsent) rhs.push_back(out.leaf(std::uint32_t(lb[c])));
    }
    rhs.push_back(hat[c]);
    lb[s] = lb[b];
    rb[s] = rb[c];
    hat[s] = out.rule(std::move(rhs));
  }

  std::vector<sym_t> top;
  if (lb[root] != kAbsent) top.push_back(out.leaf(std::uint32_t(lb[root])));
  top.push_back(hat[root]);
  if (rb[root] != kAbsent) top.push_back(out.leaf(std::uint32_t(rb[root])));
  res.start = out.rule(std::move(top));
  return res;
}

// ---------------------------------------------------------------------------
// Bigram counting

std::map<BigramKey, std::uint64_t> restricted_bigram_counts(
    const Slp& g, sym_t root, const IntervalSet& mask) {
  std::map<BigramKey, std::uint64_t> result;
  if (mask.num_intervals() == 0) return result;
  // Bigram-string grammar: every pair (B, C) contributes the boundary
  // bigram (RS(B), LS(C)); leaves expand to nothing.
  std::vector<BigramKey> id_to_bigram;
  std::map<BigramKey, std::uint32_t> bigram_id;
  Slg hatg;
  std::vector<sym_t> hat(g.size(), kNoSym);
  for (sym_t s = 0; s < g.size(); ++s) {
    if (g.is_leaf(s)) {
      hat[s] = hatg.rule({});
      continue;
    }
    sym_t b = g.left(s), c = g.right(s);
    if (hat[b] == kNoSym || hat[c] == kNoSym) continue;
    BigramKey key{g.last_char(b), g.first_char(c)};
    auto it = bigram_id.find(key);
    std::uint32_t id;
    if (it == bigram_id.end()) {
      id = std::uint32_t(id_to_bigram.size());
      id_to_bigram.push_back(key);
      bigram_id.emplace(key, id);
    } else {
      id = it->second;
    }
    hat[s] = hatg.rule({hat[b], hatg.leaf(id), hat[c]});
  }
  sym_t hat_root = hat[root];
  const pos_t big_len = hatg.explen(hat_root);
  std::vector<sym_t> top;
  for (const auto& iv : mask.intervals()) {
    pos_t lo = iv.start, hi = iv.start + iv.len - 1;
    if (lo < 1 || hi > big_len)
      throw std::out_of_range("restricted_bigram_counts: mask outside range");
    auto seq = hatg.extract_sequence(hat_root, lo, hi);
    for (sym_t s : seq) top.push_back(s);
  }
  sym_t start = hatg.rule(std::move(top));
  for (const auto& [leaf, cnt] : hatg.leaf_occurrences(start))
    result[id_to_bigram[leaf]] += cnt;
  return result;
}

std::map<BigramKey, std::uint64_t> restricted_bigram_counts_direct(
    const std::vector<std::uint32_t>& s, const IntervalSet& mask) {
  std::map<BigramKey, std::uint64_t> result;
  for (const auto& iv : mask.intervals())
    for (pos_t j = iv.start; j < iv.start + iv.len; ++j)
      result[{s[size_t(j - 1)], s[size_t(j)]}]++;
  return result;
}

// ---------------------------------------------------------------------------
// Max cut

template <class W>
MaxCutResult<W> max_cut_partition(
    pos_t num_vertices,
    const std::vector<std::tuple<pos_t, pos_t, W>>& edges) {
  for (const auto& [u, v, w] : edges) {
    if (u == v) throw std::invalid_argument("max_cut_partition: self-loop");
    if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices)
      throw std::invalid_argument("max_cut_partition: bad vertex");
    if (w < 0) throw std::invalid_argument("max_cut_partition: negative");
  }
  std::vector<std::vector<std::pair<pos_t, const W*>>> out_arcs(
      static_cast<size_t>(num_vertices));
  std::vector<std::vector<std::pair<pos_t, const W*>>> in_arcs(
      static_cast<size_t>(num_vertices));
  for (const auto& [u, v, w] : edges) {
    out_arcs[size_t(u)].emplace_back(v, &w);
    in_arcs[size_t(v)].emplace_back(u, &w);
  }
  MaxCutResult<W> res;
  res.side.assign(size_t(num_vertices), -1);
  for (pos_t v = 0; v < num_vertices; ++v) {
    W v_to_r{}, v_to_m{}, l_to_v{}, m_to_v{};
    for (const auto& [to, w] : out_arcs[size_t(v)]) {
      if (res.side[size_t(to)] == 1) v_to_r += *w;
      else if (res.side[size_t(to)] == -1) v_to_m += *w;
    }
    for (const auto& [from, w] : in_arcs[size_t(v)]) {
      if (res.side[size_t(from)] == 0) l_to_v += *w;
      else if (res.side[size_t(from)] == -1) m_to_v += *w;
    }
    res.side[size_t(v)] =
        (2 * v_to_r + v_to_m >= 2 * l_to_v + m_to_v) ? 0 : 1;
  }
  for (const auto& [u, v, w] : edges) {
    res.total += w;
    if (res.side[size_t(u)] == 0 && res.side[size_t(v)] == 1) res.cut += w;
  }
  return res;
}

template MaxCutResult<std::int64_t> max_cut_partition<std::int64_t>(
    pos_t, const std::vector<std::tuple<pos_t, pos_t, std::int64_t>>&);
template MaxCutResult<bigint> max_cut_partition<bigint>(
    pos_t, const std::vector<std::tuple<pos_t, pos_t, bigint>>&);

// ---------------------------------------------------------------------------
// Level parameters

namespace {
constexpr pos_t kParamCap = pos_t(1) << 62;

pos_t clamp_big(const bigint& v) {
  return v > kParamCap ? kParamCap : pos_t(v);
}
}  // namespace

LevelParams level_params(pos_t k) {
  static std::vector<LevelParams> cache;  // construction is single-threaded
  if (k < pos_t(cache.size())) return cache[size_t(k)];
  for (pos_t kk = pos_t(cache.size()); kk <= k; ++kk) {
    pos_t m = (kk + 1) / 2 - 1;       // ceil(k/2) - 1, k >= 1; k=0 -> -1
    pos_t m_next = (kk + 2) / 2 - 1;  // for l_{k+1}
    LevelParams p;
    if (m < 0) {
      // l_0 = 7/8: floor 0, alpha = floor(14) = 14 * ... = floor(16*7/8) = 14
      p.floor_l = 0;
      p.alpha = 14;
    } else {
      bigint e8 = 1, e7 = 1;
      for (pos_t i = 0; i < m; ++i) { e8 *= 8; e7 *= 7; }
      p.floor_l = clamp_big(e8 / e7);
      p.alpha = clamp_big((16 * e8) / e7);
    }
    {
      bigint e8 = 1, e7 = 1;
      for (pos_t i = 0; i < m_next; ++i) { e8 *= 8; e7 *= 7; }
      pos_t floor_next = clamp_big(e8 / e7);
      p.m = std::min(kParamCap, 2 * p.alpha + floor_next);
    }
    cache.push_back(p);
  }
  return cache[size_t(k)];
}

pos_t kappa_for(pos_t n) {
  // 2 * ceil(log_{8/7} n): smallest c with (8/7)^c >= n.
  bigint e8 = 1, e7 = 1;
  pos_t c = 0;
  while (e8 < bigint(n) * e7) {
    e8 *= 8;
    e7 *= 7;
    ++c;
  }
  return 2 * c;
}

// ---------------------------------------------------------------------------
// Rlslp

sym_t Rlslp::terminal(std::uint8_t c, pos_t round) {
  if (term_present_[c]) {
    sym_t id = term_index_[c];
    entries_[id].level = std::min(entries_[id].level, round);
    return id;
  }
  Entry e{Kind::Terminal, round, sym_t(c), 0, 1};
  entries_.push_back(e);
  sym_t id = sym_t(entries_.size() - 1);
  term_index_[c] = id;
  term_present_[c] = true;
  height_.clear();
  return id;
}

sym_t Rlslp::make_pair(sym_t a, sym_t b, pos_t round) {
  auto it = pair_index_.find(key2(a, b));
  if (it != pair_index_.end()) return it->second;
  Entry e{Kind::Pair, round, a, pos_t(b), explen(a) + explen(b)};
  entries_.push_back(e);
  sym_t id = sym_t(entries_.size() - 1);
  pair_index_.emplace(key2(a, b), id);
  height_.clear();
  return id;
}

sym_t Rlslp::make_power(sym_t base, pos_t count, pos_t round) {
  if (count < 2) throw std::invalid_argument("make_power: count < 2");
  auto it = power_index_.find(key2(base, std::uint64_t(count)));
  if (it != power_index_.end()) return it->second;
  Entry e{Kind::Power, round, base, count, explen(base) * count};
  entries_.push_back(e);
  sym_t id = sym_t(entries_.size() - 1);
  power_index_.emplace(key2(base, std::uint64_t(count)), id);
  height_.clear();
  return id;
}

pos_t Rlslp::height(sym_t s) const {
  if (height_.size() != entries_.size()) {
    height_.assign(entries_.size(), 0);
    for (sym_t i = 0; i < entries_.size(); ++i) {
      const Entry& e = entries_[i];
      if (e.kind == Kind::Terminal)
        height_[i] = 0;
      else if (e.kind == Kind::Pair)
        height_[i] = 1 + std::max(height_[e.a], height_[size_t(e.b)]);
      else
        height_[i] = 1 + height_[e.a];
    }
  }
  return height_[s];
}

void Rlslp::expand(sym_t s, std::vector<std::uint8_t>& out) const {
  struct Frame {
    sym_t s;
    pos_t reps;
  };
  std::vector<Frame> stack{{s, 1}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    const Entry& e = entries_[f.s];
    if (f.reps > 1) {
      // expand one copy, remember the rest
      stack.push_back({f.s, f.reps - 1});
      stack.push_back({f.s, 1});
      continue;
    }
    switch (e.kind) {
      case Kind::Terminal:
        out.push_back(std::uint8_t(e.a));
        break;
      case Kind::Pair:
        stack.push_back({sym_t(e.b), 1});
        stack.push_back({e.a, 1});
        break;
      case Kind::Power:
        stack.push_back({e.a, e.b});
        break;
    }
  }
}

std::uint8_t Rlslp::access(pos_t i) const {
  if (start_ == kNoSym || i < 1 || i > text_len())
    throw std::out_of_range("Rlslp::access");
  sym_t s = start_;
  pos_t off = i - 1;  // 0-based offset within exp(s)
  while (entries_[s].kind != Kind::Terminal) {
    const Entry& e = entries_[s];
    if (e.kind == Kind::Pair) {
      pos_t la = explen(e.a);
      if (off < la) {
        s = e.a;
      } else {
        off -= la;
        s = sym_t(e.b);
      }
    } else {
      pos_t lb = explen(e.a);
      off %= lb;
      s = e.a;
    }
  }
  return std::uint8_t(entries_[s].a);
}

std::vector<std::uint64_t> Rlslp::phrase_counts(pos_t h) const {
  std::vector<std::uint64_t> cnt(entries_.size(), 0);
  for (sym_t s = 0; s < entries_.size(); ++s) {
    const Entry& e = entries_[s];
    if (e.level <= h) {
      cnt[s] = 1;
    } else if (e.kind == Kind::Pair) {
      cnt[s] = cnt[e.a] + cnt[size_t(e.b)];
    } else if (e.kind == Kind::Power) {
      cnt[s] = std::uint64_t(e.b) * cnt[e.a];
    } else {
      cnt[s] = 1;
    }
  }
  return cnt;
}

std::uint64_t Rlslp::boundary_rank(
    pos_t h, pos_t i, const std::vector<std::uint64_t>& counts) const {
  const pos_t n = text_len();
  if (i < 0) return 0;
  pos_t cap = std::min(i, n);
  // Count phrase ends <= cap, then drop the final end at n if counted.
  std::uint64_t ends = 0;
  sym_t s = start_;
  pos_t off = 0;  // exp(s) covers (off .. off+len]
  while (true) {
    const Entry& e = entries_[s];
    if (cap >= off + e.explen) {
      ends += counts[s];
      break;
    }
    if (cap <= off || e.level <= h) break;
    if (e.kind == Kind::Pair) {
      pos_t la = explen(e.a);
      if (cap >= off + la) {
        ends += counts[e.a];
        off += la;
        s = sym_t(e.b);
      } else {
        s = e.a;
      }
    } else {
      pos_t lb = explen(e.a);
      pos_t full = (cap - off) / lb;
      ends += std::uint64_t(full) * counts[e.a];
      off += full * lb;
      s = e.a;
    }
  }
  if (cap >= n && ends > 0) --ends;
  return ends;
}

void Rlslp::boundaries_in_range(pos_t h, pos_t lo, pos_t hi,
                                const std::vector<std::uint64_t>& counts,
                                std::vector<pos_t>& out) const {
  const pos_t n = text_len();
  hi = std::min(hi, n - 1);  // Bnd_h excludes n
  if (lo > hi) return;
  struct Rec {
    const Rlslp* g;
    const std::vector<std::uint64_t>* counts;
    std::vector<pos_t>* out;
    pos_t lo, hi, h;
    void run(sym_t s, pos_t off) {
      const Entry& e = g->entries()[s];
      if ((*counts)[s] <= 1) return;  // single phrase: no internal ends
      if (off >= hi || off + e.explen <= lo) return;
      if (e.kind == Kind::Pair) {
        pos_t la = g->explen(e.a);
        if (lo < off + la) run(e.a, off);
        pos_t b = off + la;
        if (b >= lo && b <= hi) out->push_back(b);
        if (hi > off + la) run(sym_t(e.b), off + la);
      } else if (e.kind == Kind::Power) {
        pos_t lb = g->explen(e.a);
        pos_t first =
            std::max<pos_t>(0, (lo - off) / std::max<pos_t>(lb, 1) - 1);
        for (pos_t t = first; t < e.b; ++t) {
          pos_t coff = off + t * lb;
          if (coff > hi) break;
          if (coff + lb > lo) run(e.a, coff);
          pos_t b = coff + lb;
          if (t + 1 < e.b && b >= lo && b <= hi) out->push_back(b);
        }
      }
    }
  };
  // Interior ends of the start symbol are exactly Bnd_h.
  Rec{this, &counts, &out, lo, hi, h}.run(start_, 0);
}

std::vector<sym_t> Rlslp::level_string(pos_t h) const {
  std::vector<sym_t> out;
  struct Frame {
    sym_t s;
    pos_t reps;
  };
  std::vector<Frame> stack{{start_, 1}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (f.reps > 1) {
      stack.push_back({f.s, f.reps - 1});
      stack.push_back({f.s, 1});
      continue;
    }
    const Entry& e = entries_[f.s];
    if (e.level <= h) {
      out.push_back(f.s);
    } else if (e.kind == Kind::Pair) {
      stack.push_back({sym_t(e.b), 1});
      stack.push_back({e.a, 1});
    } else {
      stack.push_back({e.a, e.b});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Deterministic partition

PartitionWeights aggregate_partition_weights(
    pos_t k, pos_t kappa,
    const std::vector<std::map<BigramKey, std::uint64_t>>& per_level) {
  // per_level[t] corresponds to h = k + t, t in [0 .. kappa - k].
  PartitionWeights out;
  out.round = k;
  out.kappa = kappa;
  if (k > kappa) {
    // All covers are full; w_k = 8 * counts of the last (only) level.
    if (!per_level.empty())
      for (const auto& [key, c] : per_level.back())
        out.weights[key] += bigint(8) * c;
    return out;
  }
  const pos_t big_j = kappa / 2 - k / 2;
  for (pos_t h = k; h <= kappa; ++h) {
    const auto& cnt = per_level[size_t(h - k)];
    pos_t j = h / 2 - k / 2;
    bigint coef;
    if (h < kappa) {
      // (3/4)^j * 4^J = 3^j * 4^(J-j)
      coef = 1;
      for (pos_t i = 0; i < j; ++i) coef *= 3;
      for (pos_t i = 0; i < big_j - j; ++i) coef *= 4;
    } else {
      coef = 8;
      for (pos_t i = 0; i < big_j; ++i) coef *= 3;
    }
    for (const auto& [key, c] : cnt) out.weights[key] += coef * c;
  }
  return out;
}

DeterministicPartition deterministic_partition(
    const PartitionWeights& weights) {
  // Dense vertex ids over the symbols present in the weight map.
  std::map<sym_t, pos_t> vid;
  std::vector<sym_t> verts;
  for (const auto& [key, w] : weights.weights) {
    for (sym_t s : {sym_t(key.first), sym_t(key.second)}) {
      if (!vid.count(s)) {
        vid[s] = pos_t(verts.size());
        verts.push_back(s);
      }
    }
  }
  std::vector<std::tuple<pos_t, pos_t, bigint>> edges;
  for (const auto& [key, w] : weights.weights) {
    if (w == 0) continue;
    edges.emplace_back(vid[sym_t(key.first)], vid[sym_t(key.second)], w);
  }
  auto cut = max_cut_partition<bigint>(pos_t(verts.size()), edges);
  DeterministicPartition res;
  res.cut = cut.cut;
  res.total = cut.total;
  for (size_t i = 0; i < verts.size(); ++i) {
    if (cut.side[i] == 0)
      res.left.push_back(verts[i]);
    else
      res.right.push_back(verts[i]);
  }
  return res;
}

// ---------------------------------------------------------------------------
// Restricted recompression

RecompressionResult restricted_recompression(const Text& t,
                                             const CoverHierarchy& hierarchy,
                                             const RecompressionOptions& opt) {
  RecompressionResult res;
  Rlslp& g = res.grammar;
  const pos_t n = t.n();
  const pos_t kappa = kappa_for(n);

  std::vector<sym_t> cur;
  cur.reserve(size_t(n));
  for (pos_t i = 1; i <= n; ++i) cur.push_back(g.terminal(t.at(i), 0));
  res.levels_recorded = opt.record_levels;
  if (opt.record_levels) res.levels.push_back(cur);

  // Termination guaranteed at kappa + 2 ceil(log_{4/3} n); compute the cap.
  pos_t log43 = 0;
  {
    bigint e4 = 1, e3 = 1;
    while (e4 < bigint(n) * e3) { e4 *= 4; e3 *= 3; ++log43; }
  }
  const pos_t limit = kappa + 2 * log43 + 4;

  pos_t k = 0;
  while (pos_t(cur.size()) > 1) {
    ++k;
    if (k > limit)
      throw std::logic_error("restricted_recompression: did not converge");
    LevelParams lp = level_params(k);
    auto in_ak = [&](std::uint32_t s) { return g.explen(s) <= lp.floor_l; };
    if (k % 2 == 1) {
      cur = rle_string(cur, in_ak, [&](std::uint32_t base, pos_t count) {
        return g.make_power(base, count, k);
      });
    } else {
      // Aggregated weights in one pass: each in-A_k bigram boundary
      // contributes the coefficient suffix-sum of its minimal cover level.
      std::vector<bigint> coefsum;  // indexed by h - k, h in [k..kappa]
      if (k <= kappa) {
        pos_t big_j = kappa / 2 - k / 2;
        coefsum.assign(size_t(kappa - k + 1), bigint(0));
        bigint tail = 8;
        for (pos_t i = 0; i < big_j; ++i) tail *= 3;
        coefsum[size_t(kappa - k)] = tail;
        for (pos_t h = kappa - 1; h >= k; --h) {
          pos_t j = h / 2 - k / 2;
          bigint coef = 1;
          for (pos_t i = 0; i < j; ++i) coef *= 3;
          for (pos_t i = 0; i < big_j - j; ++i) coef *= 4;
          coefsum[size_t(h - k)] = coefsum[size_t(h - k + 1)] + coef;
        }
      }
      std::map<BigramKey, bigint> w;
      pos_t prefix = 0;
      for (size_t j = 0; j + 1 < cur.size(); ++j) {
        prefix += g.explen(cur[j]);
        sym_t a = cur[j], b = cur[j + 1];
        if (!in_ak(a) || !in_ak(b)) continue;
        if (a == b)
          throw std::logic_error("recompression: adjacent equal A_k symbols");
        bigint coef;
        if (k > kappa) {
          coef = 8;
        } else {
          // minimal h in [k..kappa] whose cover contains the boundary
          pos_t lo = k, hi = kappa;
          while (lo < hi) {
            pos_t mid = (lo + hi) / 2;
            if (hierarchy.cover(level_params(mid).m).contains(prefix))
              hi = mid;
            else
              lo = mid + 1;
          }
          coef = coefsum[size_t(lo - k)];
        }
        w[{a, b}] += coef;
      }
      PartitionWeights pw;
      pw.round = k;
      pw.kappa = kappa;
      pw.weights = std::move(w);
      auto part = deterministic_partition(pw);
      if (opt.check_cut_guarantee && 4 * part.cut < part.total)
        throw std::logic_error("recompression: quarter-cut violated");
      std::unordered_set<sym_t> lset(part.left.begin(), part.left.end());
      std::unordered_set<sym_t> rset(part.right.begin(), part.right.end());
      cur = pc_string(
          cur, [&](std::uint32_t s) { return lset.count(s) > 0; },
          [&](std::uint32_t s) { return rset.count(s) > 0; },
          [&](std::uint32_t a, std::uint32_t b) {
            return g.make_pair(a, b, k);
          });
    }
    if (opt.record_levels) res.levels.push_back(cur);
  }
  res.rounds = k;
  g.set_start(cur[0]);
  return res;
}

std::uint64_t phrase_boundary_rank(const Rlslp& g, pos_t k, pos_t i) {
  auto counts = g.phrase_counts(k);
  return g.boundary_rank(k, i, counts);
}

std::string grammar_dump(const Rlslp& g) {
  std::ostringstream os;
  for (sym_t s = 0; s < g.size(); ++s) {
    os << s << " ";
    switch (g.kind(s)) {
      case Rlslp::Kind::Terminal:
        os << "T " << int(g.term_char(s));
        break;
      case Rlslp::Kind::Pair:
        os << "P " << g.left(s) << " " << g.right(s);
        break;
      case Rlslp::Kind::Power:
        os << "R " << g.base(s) << " " << g.count(s);
        break;
    }
    os << " " << g.explen(s) << "\n";
  }
  return os.str();
}

}  // namespace dsa
