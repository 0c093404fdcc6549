// Weighted modular constraint counting and selection over weighted
// labeled interval endpoints.
#pragma once

#include <cstdint>
#include <vector>

#include "dsa/oracles.hpp"
#include "dsa/range_points.hpp"
#include "dsa/serial.hpp"
#include "dsa/text.hpp"

namespace dsa {

// (e, w, label): the interval [0..e] with weight w; labels unique.
struct WeightedInterval {
  pos_t e = 0;
  std::uint64_t w = 1;
  pos_t label = 0;
  friend bool operator==(const WeightedInterval&,
                         const WeightedInterval&) = default;
};

class ModStructure {
 public:
  ModStructure() = default;
  ModStructure(std::vector<WeightedInterval> intervals, pos_t h);

  pos_t modulus() const { return h_; }
  size_t size() const { return e_.size(); }

  // sum of w * |{j in [0..e] : j mod h = r, quotient constraint}|
  std::uint64_t count_zero(pos_t r) const;
  std::uint64_t count_one(pos_t r, pos_t k) const;              // floor(j/h) <= k
  std::uint64_t count_two(pos_t r, pos_t k1, pos_t k2) const;   // k1 < floor(j/h) <= k2
  // unique k with c in (count_one(k-1) .. count_one(k)]
  pos_t select(pos_t r, std::uint64_t c) const;

  void save(Writer& w) const;
  static ModStructure load(Reader& r);

 private:
  void build();
  pos_t h_ = 1;
  std::vector<pos_t> e_, labels_;
  std::vector<std::uint64_t> w_;
  // derived: quotients sorted with prefix/suffix sums, residue points
  std::vector<pos_t> y_;
  std::vector<std::uint64_t> s_pref_, s_suf_;
  PointStructure points_;
};

// WInts_q(P, T): tuples (e, c(i), m(i)) over pairs (i, e); duplicate
// tuples collapse, duplicate labels across distinct tuples are an error.
std::vector<WeightedInterval> weighted_intervals(
    const ConstructionOracles& oracles,
    const std::vector<std::pair<pos_t, pos_t>>& pairs, pos_t q);

ModStructure build_interval_structure(
    const ConstructionOracles& oracles,
    const std::vector<std::pair<pos_t, pos_t>>& pairs, pos_t q, pos_t h);

}  // namespace dsa
