// Weighted orthogonal range counting, selection, and minimum-label
// queries over labeled weighted points; integer-integer core plus
// string-string and integer-string adapters whose coordinates are
// contexts of text positions compared through the grammar.
#pragma once

#include <cstdint>
#include <optional>

#include "dsa/access_lce.hpp"
#include "dsa/oracles.hpp"
#include "dsa/serial.hpp"
#include "dsa/text.hpp"

namespace dsa {

struct WeightedPoint {
  pos_t x = 0;
  pos_t y = 0;
  std::uint64_t w = 1;
  pos_t label = 0;
  friend bool operator==(const WeightedPoint&, const WeightedPoint&) = default;
};

// Integer-integer structure. Coincident points merge (weights sum, label
// minimum). All ranges are half-open: x in [xl..xu), y per query.
class PointStructure {
 public:
  PointStructure() = default;
  explicit PointStructure(std::vector<WeightedPoint> pts);

  std::uint64_t count4(pos_t xl, pos_t xu, pos_t yl, pos_t yu) const;
  std::uint64_t count3_exc(pos_t xl, pos_t xu, pos_t yu) const;  // y < yu
  std::uint64_t count3_inc(pos_t xl, pos_t xu, pos_t yu) const;  // y <= yu
  std::uint64_t count2(pos_t xl, pos_t xu) const;
  // Label of some point in the x-slab whose y holds rank r by weight.
  pos_t select(pos_t xl, pos_t xu, std::uint64_t r) const;
  pos_t min4(pos_t xl, pos_t xu, pos_t yl, pos_t yu) const;  // throws if empty
  pos_t min2(pos_t xl, pos_t xu) const;

  size_t size() const { return xs_.size(); }

  void save(Writer& w) const;
  static PointStructure load(Reader& r);

 private:
  struct Node {
    std::vector<pos_t> ys;          // sorted y of points in x-range
    std::vector<std::uint64_t> wsum;  // prefix weights over ys
    std::vector<pos_t> minseg;      // segment tree over labels in ys order
  };
  std::uint64_t count_node(const Node& nd, pos_t ylo, pos_t yhi) const;
  pos_t min_node(const Node& nd, pos_t ylo, pos_t yhi) const;
  void build_tree();

  std::vector<pos_t> xs_, ys_, labels_;  // deduped points, x-sorted
  std::vector<std::uint64_t> ws_;
  std::vector<pos_t> ydistinct_;
  std::vector<Node> nodes_;
  pos_t leaves_ = 0;
};

// ---------------------------------------------------------------------------
// String contexts of positions. L(i) = rev(T^inf[i-q..i)), R(i) =
// T^inf[i..i+q). Bounds may be padded with c^infinity (c = max symbol):
// S < x c^inf  iff  S < x or x is a prefix of S.

struct ContextWeights {
  std::uint64_t c = 1;  // positions sharing the 2q-context
  pos_t m = 0;          // leftmost such position
};

// c(i), m(i) per the point-set definitions; contexts crossing T[n] pin
// c = 1, m = i.
ContextWeights context_weights(const ConstructionOracles& oracles, pos_t i,
                               pos_t q);

// Points over a set of positions keyed by (left context, right context).
class StrStrPoints {
 public:
  StrStrPoints() = default;
  StrStrPoints(const GrammarTextView& view, const ConstructionOracles& oracles,
               std::vector<pos_t> positions, pos_t q, OrderMode y_order);

  pos_t q() const { return q_; }
  OrderMode y_order() const { return y_order_; }

  // #points whose left context precedes rev(T^inf[i-len..i)) (+ padding).
  pos_t xrank(const GrammarTextView& view, pos_t i, pos_t len,
              bool padded) const;
  // #points whose right context precedes T^inf[i..i+len) (+ padding),
  // under the y order.
  pos_t yrank(const GrammarTextView& view, pos_t i, pos_t len,
              bool padded) const;

  std::uint64_t count4(pos_t xrlo, pos_t xrhi, pos_t yrlo, pos_t yrhi) const {
    return core_.count4(xrlo, xrhi, yrlo, yrhi);
  }
  std::uint64_t count2(pos_t xrlo, pos_t xrhi) const {
    return core_.count2(xrlo, xrhi);
  }
  pos_t select(pos_t xrlo, pos_t xrhi, std::uint64_t r) const {
    return core_.select(xrlo, xrhi, r);
  }
  pos_t min4(pos_t xrlo, pos_t xrhi, pos_t yrlo, pos_t yrhi) const {
    return core_.min4(xrlo, xrhi, yrlo, yrhi);
  }

  size_t size() const { return pl_.size(); }

  void save(Writer& w) const;
  static StrStrPoints load(Reader& r);

 private:
  pos_t q_ = 0;
  OrderMode y_order_ = OrderMode::Standard;
  std::vector<pos_t> pl_, pr_;  // positions sorted by left/right context
  PointStructure core_;
};

// Points over (position, integer) pairs: x is the integer, y the right
// context of the position.
class IntStrPoints {
 public:
  IntStrPoints() = default;
  IntStrPoints(const GrammarTextView& view, const ConstructionOracles& oracles,
               std::vector<std::pair<pos_t, pos_t>> pairs /* (i, h) */,
               pos_t q, OrderMode y_order);

  pos_t q() const { return q_; }

  pos_t yrank(const GrammarTextView& view, pos_t i, pos_t len,
              bool padded) const;

  std::uint64_t count3_ranks(pos_t xl, pos_t yrhi) const {
    return core_.count4(xl, kXInf, 0, yrhi);
  }
  std::uint64_t count2(pos_t xl) const { return core_.count2(xl, kXInf); }
  pos_t select(pos_t xl, std::uint64_t r) const {
    return core_.select(xl, kXInf, r);
  }
  pos_t min4_ranks(pos_t xl, pos_t yrlo, pos_t yrhi) const {
    return core_.min4(xl, kXInf, yrlo, yrhi);
  }
  pos_t min2(pos_t xl) const { return core_.min2(xl, kXInf); }

  size_t size() const { return pr_.size(); }

  void save(Writer& w) const;
  static IntStrPoints load(Reader& r);

  static constexpr pos_t kXInf = pos_t(1) << 62;

 private:
  pos_t q_ = 0;
  OrderMode y_order_ = OrderMode::Standard;
  std::vector<pos_t> pr_;  // distinct positions sorted by right context
  PointStructure core_;
};

}  // namespace dsa
