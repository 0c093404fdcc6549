// Interval representations of position sets, the l-cover construction,
// cover hierarchies, and cover-compressed position sets.
#pragma once

#include <map>
#include <vector>

#include "dsa/lz77.hpp"
#include "dsa/oracles.hpp"
#include "dsa/text.hpp"

namespace dsa {

// Sorted disjoint intervals (a_1 < a_1+t_1 < a_2 < ...) whose union is the
// represented set.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> intervals);

  static IntervalSet from_positions(std::vector<pos_t> sorted_positions);

  const std::vector<Interval>& intervals() const { return intervals_; }
  pos_t num_intervals() const { return static_cast<pos_t>(intervals_.size()); }
  pos_t total_size() const;
  bool contains(pos_t p) const;
  // Index of the interval containing p, or -1.
  pos_t find_containing(pos_t p) const;
  std::vector<pos_t> positions() const;  // materialized, sorted

  IntervalSet intersect_sorted(const std::vector<pos_t>& sorted) const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> intervals_;
};

IntervalSet interval_representation(std::vector<pos_t> positions);

// IR(Cover_l(T)) with k = 2^ceil(log2 l): the union of [i..i+2k) over
// aligned leftmost-occurrence candidates near LZ77 phrase starts, plus the
// tail (max(0, n-2k)..n]. Inspects at most two candidates per phrase start.
IntervalSet build_cover(const Text& t, pos_t ell,
                        const ConstructionOracles& oracles,
                        const std::vector<pos_t>& phrase_starts);

// IR(P intersect Cover): positions of p falling inside the cover.
IntervalSet compress_set(const std::vector<pos_t>& sorted_positions,
                         const IntervalSet& cover);

// Lazily materialized family l -> Cover_l(T).
class CoverHierarchy {
 public:
  CoverHierarchy(const Text& t, const ConstructionOracles& oracles,
                 std::vector<pos_t> phrase_starts);
  const IntervalSet& cover(pos_t ell) const;

 private:
  const Text* t_;
  const ConstructionOracles* oracles_;
  std::vector<pos_t> phrase_starts_;
  mutable std::map<pos_t, IntervalSet> cache_;
};

}  // namespace dsa
