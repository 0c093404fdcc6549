// Machinery for tau-periodic positions and patterns: the
// necklace-consistent function, run decompositions, per-root weighted
// structures, count/select/min queries, and the periodic ISA/SA
// refinement steps. Symmetric (+1) machinery runs the same code against
// inverted-order structures.
#pragma once

#include "dsa/index_core.hpp"
#include "dsa/mod_queries.hpp"
#include "dsa/nonperiodic.hpp"
#include "dsa/range_points.hpp"

namespace dsa {

// H' H^k H'' decomposition of a periodic prefix.
struct RunDecomposition {
  pos_t period = 0;    // p = |root|
  pos_t head = 0;      // s in [0..p)
  pos_t exponent = 0;  // k
  pos_t tail = 0;      // |H''|
  pos_t run_end = 0;       // e (pattern: index of first break; 1-based)
  pos_t run_end_full = 0;  // e - tail
  int type = -1;           // +1 iff P[e] > P[e-p] under the standard order
};

// Minimum rotation (Booth-style scan); the h' branch of the canonical
// function, total on all nonempty strings.
std::vector<std::uint8_t> min_rotation(std::vector<std::uint8_t> x);

// f_{tau,T} evaluated per its definition from the full set R'(tau, T)
// (test oracle), and the compressed variant built from IR(C_k(R)).
std::vector<std::uint8_t> canonical_function_brute(
    const Text& t, pos_t tau, const std::vector<std::uint8_t>& x);
std::vector<std::uint8_t> canonical_function_comp(
    const Text& t, const IntervalSet& comp_r, pos_t tau,
    const std::vector<std::uint8_t>& x);

// Run decomposition of an explicit tau-periodic pattern; f evaluates the
// canonical root of the period prefix.
RunDecomposition pattern_run_decomposition(
    const std::vector<std::uint8_t>& pattern, pos_t tau,
    const std::function<std::vector<std::uint8_t>(
        const std::vector<std::uint8_t>&)>& f);

pos_t exp_cut(const RunDecomposition& rd, pos_t t);
pos_t run_end_cut(const RunDecomposition& rd, pos_t t);

class PeriodicIndex {
 public:
  struct Level {
    pos_t k = 0;
    std::vector<pos_t> head;      // per ArrRuns interval start
    std::vector<pos_t> root_len;
    std::vector<pos_t> ptr_minus;  // structure index per interval, or -1
    std::vector<pos_t> ptr_plus;
    std::vector<IntStrPoints> pts_minus;
    std::vector<ModStructure> ints_minus;
    std::vector<IntStrPoints> pts_plus;
    std::vector<ModStructure> ints_plus;
  };

  PeriodicIndex() = default;
  PeriodicIndex(const Text& t, const ConstructionOracles& oracles,
                const ConstructionOracles& rev_oracles, const CoreIndex& core);

  pos_t n() const { return n_; }
  const Level& level(pos_t k) const { return levels_[size_t(k - 4)]; }
  pos_t levels() const { return pos_t(levels_.size()); }

  // (head, |root|) of j from the ArrRoot entry of the witness interval.
  struct HeadRoot {
    pos_t head = 0;
    pos_t p = 0;
    pos_t interval = -1;
  };
  HeadRoot head_root(const CoreIndex& core, pos_t k, pos_t j,
                     pos_t witness) const;

  struct RunValues {
    pos_t e = 0;      // run end e(j), exclusive
    pos_t exp = 0;    // exponent
    pos_t efull = 0;  // e(j) - tail
    pos_t k1 = 0;     // exp_cut at l
    pos_t k2 = 0;     // exp_cut at 2l
  };
  RunValues run_values(const GrammarTextView& view, pos_t k, pos_t j, pos_t s,
                       pos_t p) const;

  // |PosLow| (d = l) or |PosHigh| (d = 2l) with cut exponent kcut;
  // j_off supplies bound offsets (any member of Occ_d(target)).
  std::uint64_t count_low_high(const GrammarTextView& view,
                               const CoreIndex& core, pos_t k, pos_t j_off,
                               pos_t witness, pos_t s, pos_t p, pos_t kcut,
                               pos_t d, OrderMode order) const;
  std::uint64_t count_mid(const CoreIndex& core, pos_t k, pos_t witness,
                          pos_t s, pos_t p, pos_t k1, pos_t k2,
                          OrderMode order) const;
  // Exp(SA[i]) for ranks beyond the PosLow block (i in standard-order
  // coordinates already mapped by the caller for the inverted family).
  pos_t exponent(const CoreIndex& core, pos_t k, pos_t i, pos_t b,
                 std::uint64_t delta_low, pos_t k1, pos_t witness,
                 pos_t s, pos_t p, OrderMode order) const;
  std::uint64_t count_occ_partial(const GrammarTextView& view,
                                  const CoreIndex& core, pos_t k, pos_t j,
                                  pos_t s, pos_t p, pos_t exp, pos_t witness,
                                  OrderMode order) const;
  pos_t select_occ_partial(const GrammarTextView& view, const CoreIndex& core,
                           pos_t k, pos_t i, pos_t i_mid, pos_t witness,
                           pos_t s, pos_t p, pos_t exp, OrderMode order) const;
  pos_t min_occ_partial(const GrammarTextView& view, const CoreIndex& core,
                        pos_t k, pos_t j, pos_t s, pos_t p, pos_t exp,
                        pos_t witness, OrderMode order) const;
  pos_t min_occ_full(const GrammarTextView& view, const CoreIndex& core,
                     pos_t k, pos_t j, pos_t s, pos_t p, pos_t exp,
                     pos_t witness, OrderMode order) const;
  // Dispatcher: any j in R with witness in Occ_{3tau-1}(j), witness
  // = min Occ_{2l}(witness); returns j'' in Occ_{2l}(j) with
  // j'' = min Occ_{4l}(j'').
  pos_t min_occ_dispatch(const GrammarTextView& view, const CoreIndex& core,
                         pos_t k, pos_t j, pos_t witness) const;

  struct RangeResult {
    pos_t b = 0;
    pos_t e = 0;
    pos_t witness = -1;  // valid when b != e
  };
  // (RangeBeg(P), RangeEnd(P)) for the length-2l prefix P of H' H^inf,
  // with (b_l, e_l) = its l-range; j = min Occ_{2l}(j) in R.
  RangeResult fully_periodic_pattern_range(const GrammarTextView& view,
                                           const CoreIndex& core, pos_t k,
                                           pos_t j, pos_t s, pos_t p,
                                           pos_t b_l, pos_t e_l) const;

  RefineResult refine_isa_step(const GrammarTextView& view,
                               const CoreIndex& core, pos_t k, pos_t j,
                               pos_t b, pos_t e, pos_t witness) const;
  RefineResult refine_sa_step(const GrammarTextView& view,
                              const CoreIndex& core, pos_t k, pos_t i,
                              pos_t b, pos_t e, pos_t witness) const;

  void save(Writer& w) const;
  static PeriodicIndex load(Reader& r);

 private:
  const IntStrPoints* pts_for(const Level& lvl, pos_t interval,
                              OrderMode order) const;
  const ModStructure* ints_for(const Level& lvl, pos_t interval,
                               OrderMode order) const;
  RefineResult partial_isa(const GrammarTextView& view, const CoreIndex& core,
                           pos_t k, pos_t j, pos_t b, pos_t e, pos_t witness,
                           pos_t s, pos_t p, OrderMode order) const;
  RefineResult partial_sa(const GrammarTextView& view, const CoreIndex& core,
                          pos_t k, pos_t i, pos_t b, pos_t e, pos_t witness,
                          pos_t s, pos_t p, OrderMode order) const;

  pos_t n_ = 0;
  std::vector<Level> levels_;
};

}  // namespace dsa
