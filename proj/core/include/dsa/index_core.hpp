// The shared core of the index: forward/reverse grammars plus per-level
// interval representations of cover-compressed periodic-position sets,
// with the periodicity membership test.
#pragma once

#include "dsa/access_lce.hpp"
#include "dsa/covers.hpp"
#include "dsa/grammar.hpp"
#include "dsa/oracles.hpp"
#include "dsa/serial.hpp"

namespace dsa {

class CoreIndex {
 public:
  Rlslp fwd, rev;
  // arr_runs[k-4] = IR(C_{14 tau_k}(R(tau_k, T))), k in [4..ceil(log2 n))
  std::vector<IntervalSet> arr_runs;
  pos_t n = 0;

  static pos_t level_count(pos_t n);       // max(0, ceil(log2 n) - 4)
  static pos_t tau_for(pos_t k) { return (pos_t(1) << k) / 3; }

  pos_t levels() const { return pos_t(arr_runs.size()); }
  const IntervalSet& runs(pos_t k) const { return arr_runs[size_t(k - 4)]; }
  GrammarTextView view() const { return GrammarTextView(&fwd, &rev); }

  void save(Writer& w) const;
  static CoreIndex load(Reader& r);
};

// Walks each cover's maximal blocks in 2tau-sized sub-blocks; a 2-period
// query plus two LCE extensions decide the R-intersection of each
// sub-block.
CoreIndex build_core(const Text& t, const ConstructionOracles& oracles,
                     const ConstructionOracles& rev_oracles,
                     const CoverHierarchy& hierarchy, Rlslp fwd_grammar,
                     Rlslp rev_grammar);

// j in R(tau_k, T), decided by locating the witness (some
// j' in Occ_l(j) with j' = min Occ_{2l}(j')) inside ArrRuns_k.
bool is_periodic_position(const CoreIndex& core, pos_t k, pos_t j,
                          pos_t witness);

}  // namespace dsa
