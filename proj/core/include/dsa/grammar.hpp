// SLP/RLSLP machinery: hash-consed symbol tables, AVL-balanced SLP
// construction from LZ77-like parsings, run-length and pair-compression
// transforms (direct and grammar-rewrite forms), boundary-restricted
// bigram counting, weighted directed max-cut, and the deterministic
// restricted-recompression pipeline.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "dsa/covers.hpp"
#include "dsa/lz77.hpp"
#include "dsa/text.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace dsa {

using sym_t = std::uint32_t;
using bigint = boost::multiprecision::cpp_int;
constexpr sym_t kNoSym = 0xffffffffu;

// ---------------------------------------------------------------------------
// Binary SLP over u32 leaves with AVL-balanced concatenation.

class Slp {
 public:
  sym_t leaf(std::uint32_t value);
  sym_t pair(sym_t a, sym_t b);
  sym_t join(sym_t a, sym_t b);                 // height-balanced concat
  sym_t extract(sym_t root, pos_t i, pos_t j);  // exp(root)[i..j], 1-based

  bool is_leaf(sym_t s) const { return entries_[s].height == 0; }
  std::uint32_t value(sym_t s) const { return entries_[s].a; }
  sym_t left(sym_t s) const { return entries_[s].a; }
  sym_t right(sym_t s) const { return entries_[s].b; }
  pos_t explen(sym_t s) const { return entries_[s].explen; }
  pos_t height(sym_t s) const { return entries_[s].height; }
  std::uint32_t first_char(sym_t s) const;
  std::uint32_t last_char(sym_t s) const;
  size_t size() const { return entries_.size(); }

  void expand(sym_t s, std::vector<std::uint32_t>& out) const;
  bool avl_balanced(sym_t root) const;

 private:
  struct Entry {
    sym_t a = 0, b = 0;  // leaf: a = value; pair: children
    pos_t explen = 1;
    pos_t height = 0;
  };
  std::vector<Entry> entries_;
  std::unordered_map<std::uint64_t, sym_t> pair_index_;
  std::unordered_map<std::uint32_t, sym_t> leaf_index_;
  sym_t join_right(sym_t a, sym_t b);
  sym_t join_left(sym_t a, sym_t b);
  void collect(sym_t s, pos_t lo, pos_t i, pos_t j, std::vector<sym_t>& out);
};

// SLP generating the u32 sequence described by an LZ77-like parsing given
// as (src0, len) pairs, len == 0 for a literal (src0 = symbol value),
// 0-based sources. Height is O(log n) by AVL joins.
sym_t slp_from_parsing(Slp& slp,
                       const std::vector<std::pair<pos_t, pos_t>>& parsing);

sym_t slp_from_lz77(Slp& slp, const Parsing& parsing);

// ---------------------------------------------------------------------------
// General straight-line grammar (arbitrary-arity rules) over u32 leaves.
// Used by the rle/pc grammar rewrites and bigram path counting.

class Slg {
 public:
  sym_t leaf(std::uint32_t value);
  sym_t rule(std::vector<sym_t> rhs);

  bool is_leaf(sym_t s) const { return leaf_of_[s] >= 0; }
  std::uint32_t value(sym_t s) const {
    return std::uint32_t(leaf_of_[s]);
  }
  const std::vector<sym_t>& rhs(sym_t s) const { return rhs_[s]; }
  pos_t explen(sym_t s) const { return explen_[s]; }
  size_t size() const { return rhs_.size(); }

  void expand(sym_t s, std::vector<std::uint32_t>& out) const;
  // Sequence of existing symbols covering exp(root)[i..j].
  std::vector<sym_t> extract_sequence(sym_t root, pos_t i, pos_t j) const;
  // For every leaf value, the number of occurrences in exp(root).
  std::map<std::uint32_t, std::uint64_t> leaf_occurrences(sym_t root) const;

 private:
  std::vector<std::vector<sym_t>> rhs_;
  std::vector<pos_t> explen_;
  std::vector<std::int64_t> leaf_of_;
};

// ---------------------------------------------------------------------------
// Direct string transforms (run-length and pair compression).

using RunCollapse = std::function<std::uint32_t(std::uint32_t, pos_t)>;
using PairCollapse = std::function<std::uint32_t(std::uint32_t, std::uint32_t)>;
using SymPredicate = std::function<bool(std::uint32_t)>;

std::vector<std::uint32_t> rle_string(const std::vector<std::uint32_t>& s,
                                      const SymPredicate& in_b,
                                      const RunCollapse& collapse);
std::vector<std::uint32_t> pc_string(const std::vector<std::uint32_t>& s,
                                     const SymPredicate& in_l,
                                     const SymPredicate& in_r,
                                     const PairCollapse& collapse);

// Grammar rewrites producing a grammar for the transformed string from a
// grammar of the input (per-symbol LR/RR and LB/RB decompositions).
struct RewriteResult {
  Slg grammar;
  sym_t start = kNoSym;
};
RewriteResult rle_rewrite(const Slp& g, sym_t root, const SymPredicate& in_b,
                          const RunCollapse& collapse);
RewriteResult pc_rewrite(const Slp& g, sym_t root, const SymPredicate& in_l,
                         const SymPredicate& in_r,
                         const PairCollapse& collapse);

// ---------------------------------------------------------------------------
// Boundary-restricted bigram counting via the bigram-string grammar
// rewrite and path counting. Mask positions are 1-based indices j with
// j in [1..|T|), counting pairs T[j..j+1].
using BigramKey = std::pair<std::uint32_t, std::uint32_t>;
std::map<BigramKey, std::uint64_t> restricted_bigram_counts(
    const Slp& g, sym_t root, const IntervalSet& mask);
std::map<BigramKey, std::uint64_t> restricted_bigram_counts_direct(
    const std::vector<std::uint32_t>& s, const IntervalSet& mask);

// ---------------------------------------------------------------------------
// Weighted directed max-cut (greedy quarter guarantee).

template <class W>
struct MaxCutResult {
  std::vector<int> side;  // 0 = L, 1 = R
  W cut{};
  W total{};
};

template <class W>
MaxCutResult<W> max_cut_partition(
    pos_t num_vertices,
    const std::vector<std::tuple<pos_t, pos_t, W>>& edges);

extern template MaxCutResult<std::int64_t> max_cut_partition<std::int64_t>(
    pos_t, const std::vector<std::tuple<pos_t, pos_t, std::int64_t>>&);
extern template MaxCutResult<bigint> max_cut_partition<bigint>(
    pos_t, const std::vector<std::tuple<pos_t, pos_t, bigint>>&);

// ---------------------------------------------------------------------------
// Restricted recompression.

// Per-round parameters: l_k = (8/7)^(ceil(k/2)-1), alpha_k = floor(16 l_k),
// m_k = 2 alpha_k + floor(l_{k+1}); exact integer floors.
struct LevelParams {
  pos_t floor_l = 0;
  pos_t alpha = 0;
  pos_t m = 0;
};
LevelParams level_params(pos_t k);
pos_t kappa_for(pos_t n);  // 2 ceil(log_{8/7} n)

// Universal RLSLP alphabet: terminals, pairs, powers; hash-consed with the
// first recompression round each symbol occurs at.
class Rlslp {
 public:
  enum class Kind : std::uint8_t { Terminal, Pair, Power };

  sym_t terminal(std::uint8_t c, pos_t round);
  sym_t make_pair(sym_t a, sym_t b, pos_t round);
  sym_t make_power(sym_t base, pos_t count, pos_t round);

  Kind kind(sym_t s) const { return entries_[s].kind; }
  std::uint8_t term_char(sym_t s) const { return std::uint8_t(entries_[s].a); }
  sym_t left(sym_t s) const { return entries_[s].a; }
  sym_t right(sym_t s) const { return sym_t(entries_[s].b); }
  sym_t base(sym_t s) const { return entries_[s].a; }
  pos_t count(sym_t s) const { return entries_[s].b; }
  pos_t explen(sym_t s) const { return entries_[s].explen; }
  pos_t level(sym_t s) const { return entries_[s].level; }
  pos_t height(sym_t s) const;
  size_t size() const { return entries_.size(); }

  sym_t start() const { return start_; }
  void set_start(sym_t s) { start_ = s; }
  pos_t text_len() const { return start_ == kNoSym ? 0 : explen(start_); }

  void expand(sym_t s, std::vector<std::uint8_t>& out) const;
  std::uint8_t access(pos_t i) const;  // T[i], O(height)

  // Number of level-h phrases inside exp of each symbol (topological DP).
  std::vector<std::uint64_t> phrase_counts(pos_t h) const;
  // |{b in Bnd_h : b <= i}| for i in [0..n].
  std::uint64_t boundary_rank(pos_t h, pos_t i,
                              const std::vector<std::uint64_t>& counts) const;
  // All boundaries of Bnd_h inside [lo..hi], ascending.
  void boundaries_in_range(pos_t h, pos_t lo, pos_t hi,
                           const std::vector<std::uint64_t>& counts,
                           std::vector<pos_t>& out) const;
  // The level-h string (cut at first-occurrence rounds <= h).
  std::vector<sym_t> level_string(pos_t h) const;

  struct Entry {
    Kind kind;
    pos_t level;
    sym_t a;
    pos_t b;  // pair: right child; power: count; terminal: unused
    pos_t explen;
  };
  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::vector<Entry> entries_;
  std::unordered_map<std::uint64_t, sym_t> pair_index_, power_index_;
  sym_t term_index_[256];
  bool term_present_[256] = {false};
  sym_t start_ = kNoSym;
  mutable std::vector<pos_t> height_;  // memoized
};

// Aggregated bigram weights for an even round: w_k(A,B) scaled so that all
// coefficients are integers (factor 4^(kappa/2 - floor(k/2))).
struct PartitionWeights {
  std::map<BigramKey, bigint> weights;
  pos_t round = 0;
  pos_t kappa = 0;
};

// Spec-facing aggregation: per-level bigram counts for h in [k..kappa]
// combined with coefficients (3/4)^(floor(h/2)-floor(k/2)), the tail at
// kappa weighted 8x, scaled to exact integers.
PartitionWeights aggregate_partition_weights(
    pos_t k, pos_t kappa,
    const std::vector<std::map<BigramKey, std::uint64_t>>& per_level);

struct DeterministicPartition {
  std::vector<sym_t> left, right;
  bigint cut{};
  bigint total{};
};
// Max-cut over the weight graph; guarantees cut >= total / 4.
DeterministicPartition deterministic_partition(
    const PartitionWeights& weights);

// The recompression pipeline output.
struct RecompressionResult {
  Rlslp grammar;
  pos_t rounds = 0;                       // final k with |T_k| = 1
  std::vector<std::vector<sym_t>> levels; // explicit T_k (desk-scale only)
  bool levels_recorded = false;
};

struct RecompressionOptions {
  bool record_levels = false;
  // Verifies the quarter cut guarantee on every even round.
  bool check_cut_guarantee = true;
};

RecompressionResult restricted_recompression(const Text& t,
                                             const CoverHierarchy& hierarchy,
                                             const RecompressionOptions& opt = {});

// Rank of i in Bnd_k, descending the grammar (spec op).
std::uint64_t phrase_boundary_rank(const Rlslp& g, pos_t k, pos_t i);

// Debug dump: one line per symbol `id TYPE args explen`.
std::string grammar_dump(const Rlslp& g);

}  // namespace dsa
