// O(log n) random access and forward/backward LCE over a recompression
// RLSLP; backward queries run on a second grammar built from the
// reversed text. Also hosts the T-infinity comparison helpers used by
// the string-coordinate range structures.
#pragma once

#include "dsa/grammar.hpp"
#include "dsa/oracles.hpp"
#include "dsa/text.hpp"

namespace dsa {

std::uint8_t grammar_access(const Rlslp& g, pos_t i);

struct LceStats {
  pos_t frames = 0;
};

// lcp of the suffixes of exp(start) at i and i2.
pos_t grammar_lce(const Rlslp& g, pos_t i, pos_t i2,
                  LceStats* stats = nullptr);

// Forward and reverse grammars of one text; serves LCE in both
// directions plus capped LCE and comparisons on T^inf / rev(T^inf).
class GrammarTextView {
 public:
  GrammarTextView(const Rlslp* fwd, const Rlslp* rev);

  pos_t n() const { return n_; }
  const Rlslp& forward() const { return *fwd_; }
  const Rlslp& reverse() const { return *rev_; }

  std::uint8_t access(pos_t i) const { return fwd_->access(i); }
  std::uint8_t access_inf(pos_t j) const { return fwd_->access(wrap(j)); }

  pos_t lce(pos_t j1, pos_t j2, Direction dir) const;

  // Capped LCE of T^inf suffixes at arbitrary (any-sign) positions.
  pos_t lce_inf(pos_t x, pos_t y, pos_t cap) const;
  // Same on the reversed text's T^inf.
  pos_t lce_inf_rev(pos_t x, pos_t y, pos_t cap) const;

  // Lexicographic comparison of T^inf[x..x+lenx) vs T^inf[y..y+leny)
  // under the order mode (prefix rule for unequal lengths).
  int cmp_inf(pos_t x, pos_t lenx, pos_t y, pos_t leny, OrderMode mode) const;
  // Comparison of rev(T^inf[x-len..x)) slices: arguments name the
  // forward-text position x; the reversed string starts at T^inf[x-1]
  // and extends leftwards.
  int cmp_rev_inf(pos_t x, pos_t lenx, pos_t y, pos_t leny,
                  OrderMode mode) const;

  // Position in the reversed text's T^inf corresponding to the reversed
  // left context ending (exclusively) at forward position x.
  pos_t rev_pos(pos_t x) const { return n_ + 1 - (x - 1); }

  pos_t wrap(pos_t j) const {
    pos_t m = (j - 1) % n_;
    if (m < 0) m += n_;
    return m + 1;
  }

 private:
  pos_t lce_inf_on(const Rlslp& g, pos_t x, pos_t y, pos_t cap) const;
  const Rlslp* fwd_;
  const Rlslp* rev_;
  pos_t n_;
};

}  // namespace dsa
