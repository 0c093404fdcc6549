// Brute-force oracles over a text: suffix array, ISA, LCP with range
// minima, occurrence queries, substring complexity, periods. These back
// construction-time queries and every cross-check in the test suites.
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dsa/text.hpp"

namespace dsa {

// Suffix array of an arbitrary u32 sequence via prefix doubling.
std::vector<pos_t> suffix_array_u32(const std::vector<std::uint32_t>& seq);

std::vector<pos_t> brute_suffix_array(const Text& t);
std::vector<pos_t> inverse_permutation(const std::vector<pos_t>& sa);

// Occ_l(P, T), RangeBeg_l, RangeEnd_l by exhaustive scan (Def. of Occ).
struct OccResult {
  std::vector<pos_t> occ;  // sorted
  pos_t range_beg = 0;
  pos_t range_end = 0;
};
OccResult occ_oracle(const Text& t, const std::vector<std::uint8_t>& pattern,
                     pos_t ell);

// Substring complexity: d_l profile (index l in [1..n]) and max d_l / l.
struct DeltaProfile {
  std::vector<pos_t> d;      // d[l-1] = number of distinct length-l substrings
  pos_t argmax_l = 1;        // l attaining the maximum of d_l / l
  double value() const { return double(d[size_t(argmax_l - 1)]) / double(argmax_l); }
  pos_t num() const { return d[size_t(argmax_l - 1)]; }
  pos_t den() const { return argmax_l; }
};
DeltaProfile delta_complexity(const Text& t);

enum class Direction { Forward, Backward };

// Forward: lcp of suffixes j1, j2. Backward: lcs of prefixes ending at j1, j2.
pos_t naive_lce(const Text& t, pos_t j1, pos_t j2, Direction dir);

// Smallest period of s by direct checking.
pos_t shortest_period_naive(const std::vector<std::uint8_t>& s);

// Suffix-array backed bundle answering leftmost/rightmost occurrence,
// occurrence count, LCE, and 2-period queries for substrings of T.
class ConstructionOracles {
 public:
  explicit ConstructionOracles(const Text& t);

  const Text& text() const { return *t_; }
  const std::vector<pos_t>& sa() const { return sa_; }
  const std::vector<pos_t>& isa() const { return isa_; }

  pos_t lce(pos_t j1, pos_t j2) const;   // forward LCE on T
  pos_t lce_inf(pos_t x, pos_t y, pos_t cap) const;  // LCE on T^inf, capped

  // Occurrences of the substring T[start..start+len).
  pos_t leftmost_occ(pos_t start, pos_t len) const;
  pos_t rightmost_occ(pos_t start, pos_t len) const;
  pos_t occ_count(pos_t start, pos_t len) const;

  // Largest occurrence position strictly below `before`; -1 if none.
  pos_t rightmost_occ_before(pos_t start, pos_t len, pos_t before) const;

  // per(T[start..start+len)) if it is at most len/2, otherwise nullopt.
  std::optional<pos_t> two_period(pos_t start, pos_t len) const;

  // SA range [lo..hi] (1-based ranks) of suffixes prefixed by the substring;
  // empty range signalled by lo > hi.
  std::pair<pos_t, pos_t> sa_range(pos_t start, pos_t len) const;

 private:
  void check_substring(pos_t start, pos_t len) const;
  int cmp_suffix_vs_substring(pos_t suf, pos_t start, pos_t len) const;

  const Text* t_ = nullptr;
  std::vector<pos_t> sa_, isa_, lcp_;
  // Block-decomposed RMQ over lcp_ (min) and over sa_ (min and max).
  struct BlockRmq {
    std::vector<pos_t> data;
    std::vector<pos_t> block;  // per-block extremum
    std::vector<std::vector<pos_t>> table;
    int shift = 5;
    bool maximize = false;
    void build(const std::vector<pos_t>& v, bool maximize);
    pos_t query(pos_t lo, pos_t hi) const;  // inclusive 0-based
  };
  BlockRmq lcp_min_, sa_min_, sa_max_;
  // Merge tree over sa_ for "max value below threshold in rank range".
  std::vector<std::vector<pos_t>> merge_tree_;
  pos_t tree_leaves_ = 0;
};

}  // namespace dsa
