// Level refinement for nonperiodic positions: synchronizing-set
// successor, PosBeg/PosEnd and Occ counting, Occ element selection,
// leftmost-occurrence witnesses, and the ISA/SA refinement steps.
#pragma once

#include "dsa/index_core.hpp"
#include "dsa/range_points.hpp"
#include "dsa/sync_sets.hpp"

namespace dsa {

struct RefineResult {
  pos_t b = 0;
  pos_t e = 0;
  pos_t witness = 0;
};

class NonperiodicIndex {
 public:
  struct Level {
    pos_t k = 0;
    std::vector<pos_t> arr_sss_comp;  // sorted compressed sync set
    StrStrPoints points;              // standard order on right contexts
    StrStrPoints points_inv;          // inverted twin (PosEnd path)
  };

  NonperiodicIndex() = default;
  NonperiodicIndex(const Text& t, const ConstructionOracles& oracles,
                   const CoreIndex& core,
                   const std::vector<CompressedSyncSet>& collection);

  pos_t n() const { return n_; }
  const Level& level(pos_t k) const { return levels_[size_t(k - 4)]; }
  pos_t levels() const { return pos_t(levels_.size()); }

  // succ_{S_k}(j) from the witness: j + (succ_comp(witness) - witness).
  pos_t sync_successor(pos_t k, pos_t j, pos_t witness) const;

  std::uint64_t count_posbeg(const GrammarTextView& view, pos_t k, pos_t j,
                             pos_t witness) const;
  // Inverted-order twin of count_posbeg (exercised by tests; the hot
  // path derives RangeEnd from the Occ size instead).
  std::uint64_t count_posend(const GrammarTextView& view, pos_t k, pos_t j,
                             pos_t witness) const;
  std::uint64_t count_occ(const GrammarTextView& view, pos_t k, pos_t j,
                          pos_t witness) const;
  pos_t select_occ_element(const GrammarTextView& view, pos_t k, pos_t i,
                           pos_t b, pos_t e, pos_t witness) const;
  pos_t min_occ(const GrammarTextView& view, pos_t k, pos_t j,
                pos_t witness) const;

  RefineResult refine_isa_step(const GrammarTextView& view, pos_t k, pos_t j,
                               pos_t b, pos_t e, pos_t witness) const;
  RefineResult refine_sa_step(const GrammarTextView& view, pos_t k, pos_t i,
                              pos_t b, pos_t e, pos_t witness) const;

  void save(Writer& w) const;
  static NonperiodicIndex load(Reader& r);

 private:
  pos_t n_ = 0;
  std::vector<Level> levels_;
};

}  // namespace dsa
