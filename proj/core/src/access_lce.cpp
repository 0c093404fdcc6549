#include "dsa/access_lce.hpp"

#include <stdexcept>

namespace dsa {

std::uint8_t grammar_access(const Rlslp& g, pos_t i) { return g.access(i); }

namespace {

// Parse-tree cursor: frames from the root down, each remembering the
// child slot inside its parent. Run-length children are addressed by
// their copy index.
struct Cursor {
  struct Frame {
    sym_t sym;
    pos_t start;      // absolute 1-based start of exp(node)
    pos_t child_idx;  // index of this node within its parent (0-based)
  };
  const Rlslp* g;
  std::vector<Frame> frames;

  sym_t sym() const { return frames.back().sym; }
  pos_t start() const { return frames.back().start; }
  pos_t len() const { return g->explen(frames.back().sym); }

  // Positions this node within its parent: number of children and index.
  pos_t arity_of_parent() const {
    const auto& par = frames[frames.size() - 2];
    return g->kind(par.sym) == Rlslp::Kind::Power ? g->count(par.sym) : 2;
  }

  // Descend to the highest node whose expansion starts at position p.
  void seek(pos_t p) {
    frames.clear();
    frames.push_back({g->start(), 1, 0});
    while (start() != p) {
      descend_into(p);
    }
  }

  void descend_into(pos_t p) {
    const Frame& f = frames.back();
    if (g->kind(f.sym) == Rlslp::Kind::Pair) {
      sym_t a = g->left(f.sym), b = g->right(f.sym);
      pos_t la = g->explen(a);
      if (p < f.start + la)
        frames.push_back({a, f.start, 0});
      else
        frames.push_back({b, f.start + la, 1});
    } else if (g->kind(f.sym) == Rlslp::Kind::Power) {
      sym_t base = g->base(f.sym);
      pos_t lb = g->explen(base);
      pos_t idx = (p - f.start) / lb;
      frames.push_back({base, f.start + idx * lb, idx});
    } else {
      throw std::logic_error("Cursor: descend into terminal");
    }
  }

  void leftmost_child() {
    const Frame& f = frames.back();
    if (g->kind(f.sym) == Rlslp::Kind::Pair)
      frames.push_back({g->left(f.sym), f.start, 0});
    else
      frames.push_back({g->base(f.sym), f.start, 0});
  }

  // Move to the highest node starting right after this one; false when
  // the text is exhausted.
  bool advance() {
    while (frames.size() > 1) {
      const Frame& f = frames.back();
      const Frame& par = frames[frames.size() - 2];
      pos_t arity = g->kind(par.sym) == Rlslp::Kind::Power
                        ? g->count(par.sym)
                        : 2;
      if (f.child_idx + 1 < arity) {
        pos_t nstart = f.start + g->explen(f.sym);
        pos_t nidx = f.child_idx + 1;
        sym_t nsym;
        if (g->kind(par.sym) == Rlslp::Kind::Pair)
          nsym = g->right(par.sym);
        else
          nsym = g->base(par.sym);
        frames.back() = {nsym, nstart, nidx};
        return true;
      }
      frames.pop_back();
    }
    return false;
  }

  // Jump lambda siblings to the right inside a run-length parent.
  void sibling_jump(pos_t lambda) {
    Frame& f = frames.back();
    f.start += lambda * g->explen(f.sym);
    f.child_idx += lambda;
  }
};

}  // namespace

pos_t grammar_lce(const Rlslp& g, pos_t i, pos_t i2, LceStats* stats) {
  const pos_t n = g.text_len();
  if (i < 1 || i > n || i2 < 1 || i2 > n)
    throw std::out_of_range("grammar_lce");
  if (i == i2) return n - i + 1;

  Cursor a{&g, {}}, b{&g, {}};
  a.seek(i);
  b.seek(i2);
  // Invariant: T[i..a.start) = T[i2..b.start).
  while (true) {
    if (stats) stats->frames++;
    pos_t la = a.len(), lb = b.len();
    if (la == 1 && lb == 1 && a.sym() != b.sym()) return a.start() - i;
    if (la > lb) {
      a.leftmost_child();
      continue;
    }
    if (lb > la) {
      b.leftmost_child();
      continue;
    }
    if (a.sym() != b.sym()) {
      a.leftmost_child();
      b.leftmost_child();
      continue;
    }
    // Matching symbols: skip them, then either advance or jump a run.
    pos_t lambda = 0;
    if (a.frames.size() > 1 && b.frames.size() > 1) {
      pos_t da = a.arity_of_parent() - 1 - a.frames.back().child_idx;
      pos_t db = b.arity_of_parent() - 1 - b.frames.back().child_idx;
      lambda = std::min(da, db);
    }
    if (lambda > 1) {
      a.sibling_jump(lambda);
      b.sibling_jump(lambda);
      continue;
    }
    pos_t matched = a.start() + la - i;  // equals b.start() + lb - i2
    if (!a.advance()) return matched;    // a's suffix fully matched
    if (!b.advance()) return matched;
  }
}

GrammarTextView::GrammarTextView(const Rlslp* fwd, const Rlslp* rev)
    : fwd_(fwd), rev_(rev), n_(fwd->text_len()) {
  if (rev_->text_len() != n_)
    throw std::invalid_argument("GrammarTextView: length mismatch");
}

pos_t GrammarTextView::lce(pos_t j1, pos_t j2, Direction dir) const {
  if (dir == Direction::Forward) return grammar_lce(*fwd_, j1, j2);
  // lcs of prefixes ending at j1, j2 = LCE on the reversed text.
  return grammar_lce(*rev_, n_ + 1 - j1, n_ + 1 - j2);
}

pos_t GrammarTextView::lce_inf_on(const Rlslp& g, pos_t x, pos_t y,
                                  pos_t cap) const {
  const pos_t n = n_;
  pos_t total = 0;
  int guard = 0;
  while (total < cap) {
    pos_t x0 = wrap(x + total), y0 = wrap(y + total);
    if (x0 == y0) return cap;
    pos_t l = grammar_lce(g, x0, y0);
    bool hitx = x0 + l > n, hity = y0 + l > n;
    if (!hitx && !hity) return std::min(cap, total + l);
    total += l;
    if (++guard > 8) return std::min(cap, total);
  }
  return cap;
}

pos_t GrammarTextView::lce_inf(pos_t x, pos_t y, pos_t cap) const {
  return lce_inf_on(*fwd_, x, y, cap);
}

pos_t GrammarTextView::lce_inf_rev(pos_t x, pos_t y, pos_t cap) const {
  return lce_inf_on(*rev_, x, y, cap);
}

int GrammarTextView::cmp_inf(pos_t x, pos_t lenx, pos_t y, pos_t leny,
                             OrderMode mode) const {
  pos_t l = lce_inf(x, y, std::min(lenx, leny));
  if (l < std::min(lenx, leny)) {
    return cmp_sym(access_inf(x + l), access_inf(y + l), mode);
  }
  if (lenx == leny) return 0;
  return lenx < leny ? -1 : 1;
}

int GrammarTextView::cmp_rev_inf(pos_t x, pos_t lenx, pos_t y, pos_t leny,
                                 OrderMode mode) const {
  // rev(T^inf[x-len..x)) read left-to-right equals the reversed text's
  // T^inf starting at rev_pos(x).
  pos_t rx = rev_pos(x), ry = rev_pos(y);
  pos_t l = lce_inf_rev(rx, ry, std::min(lenx, leny));
  if (l < std::min(lenx, leny)) {
    return cmp_sym(access_inf(x - 1 - l), access_inf(y - 1 - l), mode);
  }
  if (lenx == leny) return 0;
  return lenx < leny ? -1 : 1;
}

}  // namespace dsa
