#include "dsa/nonperiodic.hpp"

#include <algorithm>
#include <stdexcept>

namespace dsa {

NonperiodicIndex::NonperiodicIndex(
    const Text& t, const ConstructionOracles& oracles, const CoreIndex& core,
    const std::vector<CompressedSyncSet>& collection)
    : n_(t.n()) {
  auto view = core.view();
  for (const auto& cs : collection) {
    Level lvl;
    lvl.k = cs.k;
    lvl.arr_sss_comp = cs.positions;  // already sorted
    pos_t q = 7 * cs.tau;
    lvl.points =
        StrStrPoints(view, oracles, cs.positions, q, OrderMode::Standard);
    lvl.points_inv =
        StrStrPoints(view, oracles, cs.positions, q, OrderMode::Inverted);
    levels_.push_back(std::move(lvl));
  }
}

pos_t NonperiodicIndex::sync_successor(pos_t k, pos_t j, pos_t witness) const {
  const auto& arr = level(k).arr_sss_comp;
  auto it = std::lower_bound(arr.begin(), arr.end(), witness);
  if (it == arr.end())
    throw std::logic_error("sync_successor: witness beyond the set");
  return j + (*it - witness);
}

namespace {
struct SlabBounds {
  pos_t xrlo, xrhi;
  pos_t s;  // successor position
};
}  // namespace

std::uint64_t NonperiodicIndex::count_posbeg(const GrammarTextView& view,
                                             pos_t k, pos_t j,
                                             pos_t witness) const {
  const pos_t ell = pos_t(1) << k;
  const pos_t tau = CoreIndex::tau_for(k);
  if (j > n_ - 3 * tau + 2) return 0;
  const Level& lvl = level(k);
  pos_t s = sync_successor(k, j, witness);
  pos_t xrlo = lvl.points.xrank(view, s, s - j, false);
  pos_t xrhi = lvl.points.xrank(view, s, s - j, true);
  pos_t yrlo = lvl.points.yrank(view, s, std::min(n_ + 1, j + ell) - s, false);
  pos_t yrhi =
      lvl.points.yrank(view, s, std::min(n_ + 1, j + 2 * ell) - s, false);
  if (yrlo >= yrhi) return 0;
  return lvl.points.count4(xrlo, xrhi, yrlo, yrhi);
}

std::uint64_t NonperiodicIndex::count_posend(const GrammarTextView& view,
                                             pos_t k, pos_t j,
                                             pos_t witness) const {
  const pos_t ell = pos_t(1) << k;
  const pos_t tau = CoreIndex::tau_for(k);
  if (j > n_ - 3 * tau + 2) return 0;
  const Level& lvl = level(k);
  pos_t s = sync_successor(k, j, witness);
  pos_t xrlo = lvl.points_inv.xrank(view, s, s - j, false);
  pos_t xrhi = lvl.points_inv.xrank(view, s, s - j, true);
  pos_t yrlo =
      lvl.points_inv.yrank(view, s, std::min(n_ + 1, j + ell) - s, false);
  pos_t yrhi =
      lvl.points_inv.yrank(view, s, std::min(n_ + 1, j + 2 * ell) - s, false);
  if (yrlo >= yrhi) return 0;
  return lvl.points_inv.count4(xrlo, xrhi, yrlo, yrhi);
}

std::uint64_t NonperiodicIndex::count_occ(const GrammarTextView& view, pos_t k,
                                          pos_t j, pos_t witness) const {
  const pos_t ell = pos_t(1) << k;
  const pos_t tau = CoreIndex::tau_for(k);
  if (j > n_ - 3 * tau + 2) return 1;
  const Level& lvl = level(k);
  pos_t s = sync_successor(k, j, witness);
  pos_t xrlo = lvl.points.xrank(view, s, s - j, false);
  pos_t xrhi = lvl.points.xrank(view, s, s - j, true);
  pos_t len = std::min(n_ + 1, j + 2 * ell) - s;
  pos_t yrlo = lvl.points.yrank(view, s, len, false);
  pos_t yrhi = lvl.points.yrank(view, s, len, true);
  return lvl.points.count4(xrlo, xrhi, yrlo, yrhi);
}

pos_t NonperiodicIndex::select_occ_element(const GrammarTextView& view,
                                           pos_t k, pos_t i, pos_t b, pos_t e,
                                           pos_t witness) const {
  const pos_t ell = pos_t(1) << k;
  if (e - b == 1) return witness;
  const Level& lvl = level(k);
  pos_t j = witness;
  pos_t s = sync_successor(k, j, j);
  pos_t xrlo = lvl.points.xrank(view, s, s - j, false);
  pos_t xrhi = lvl.points.xrank(view, s, s - j, true);
  pos_t yrlo = lvl.points.yrank(view, s, std::min(n_ + 1, j + ell) - s, false);
  std::uint64_t m = lvl.points.count4(xrlo, xrhi, 0, yrlo);
  pos_t p = lvl.points.select(xrlo, xrhi, m + std::uint64_t(i - b));
  return p - (s - j);
}

pos_t NonperiodicIndex::min_occ(const GrammarTextView& view, pos_t k, pos_t j,
                                pos_t witness) const {
  const pos_t ell = pos_t(1) << k;
  const pos_t tau = CoreIndex::tau_for(k);
  if (j > n_ - 3 * tau + 2) return j;
  const Level& lvl = level(k);
  pos_t s = sync_successor(k, j, witness);
  pos_t xrlo = lvl.points.xrank(view, s, s - j, false);
  pos_t xrhi = lvl.points.xrank(view, s, s - j, true);
  pos_t len = std::min(n_ + 1, j + 2 * ell) - s;
  pos_t yrlo = lvl.points.yrank(view, s, len, false);
  pos_t yrhi = lvl.points.yrank(view, s, len, true);
  return lvl.points.min4(xrlo, xrhi, yrlo, yrhi) - (s - j);
}

RefineResult NonperiodicIndex::refine_isa_step(const GrammarTextView& view,
                                               pos_t k, pos_t j, pos_t b,
                                               pos_t /*e*/,
                                               pos_t witness) const {
  std::uint64_t delta = count_posbeg(view, k, j, witness);
  std::uint64_t m = count_occ(view, k, j, witness);
  RefineResult out;
  out.b = b + pos_t(delta);
  out.e = out.b + pos_t(m);
  out.witness = min_occ(view, k, j, witness);
  return out;
}

RefineResult NonperiodicIndex::refine_sa_step(const GrammarTextView& view,
                                              pos_t k, pos_t i, pos_t b,
                                              pos_t e, pos_t witness) const {
  pos_t p = select_occ_element(view, k, i, b, e, witness);
  return refine_isa_step(view, k, p, b, e, witness);
}

void NonperiodicIndex::save(Writer& w) const {
  w.i64(n_);
  w.u64(levels_.size());
  for (const auto& lvl : levels_) {
    w.i64(lvl.k);
    w.vec_i64(lvl.arr_sss_comp);
    lvl.points.save(w);
    lvl.points_inv.save(w);
  }
}

NonperiodicIndex NonperiodicIndex::load(Reader& r) {
  NonperiodicIndex idx;
  idx.n_ = r.i64();
  std::uint64_t m = r.u64();
  for (std::uint64_t i = 0; i < m; ++i) {
    Level lvl;
    lvl.k = r.i64();
    lvl.arr_sss_comp = r.vec_i64<pos_t>();
    lvl.points = StrStrPoints::load(r);
    lvl.points_inv = StrStrPoints::load(r);
    idx.levels_.push_back(std::move(lvl));
  }
  return idx;
}

}  // namespace dsa
