// The assembled delta-SA: length-16 bootstrap tables, level-doubling
// SA/ISA drivers, statistics, and (de)serialization.
#pragma once

#include <array>
#include <optional>

#include "dsa/nonperiodic.hpp"
#include "dsa/periodic.hpp"

namespace dsa {

struct BuildOptions {
  // Remap bytes b -> b+1 and append symbol 0 when T[n] is not unique.
  bool append_sentinel = false;
};

struct IndexStats {
  pos_t n = 0;
  pos_t z = 0;  // greedy LZ77 phrases
  pos_t delta_num = 0, delta_den = 1;
  pos_t rlslp_size = 0;
  pos_t levels = 0;
  std::vector<pos_t> runs_per_level;  // |ArrRuns_k|
  std::vector<pos_t> sss_per_level;   // |ArrSSSComp_k|
  std::vector<pos_t> roots_per_level; // periodic structures per level
};

// Per-step trace record for the debug oracle-threading mode.
struct StepTrace {
  struct Entry {
    pos_t k, b, e, witness;
    bool periodic;
  };
  std::vector<Entry> steps;
};

class DeltaSaIndex {
 public:
  static DeltaSaIndex build(Text text, const BuildOptions& opt = {});
  static DeltaSaIndex build_from_parsing(const Parsing& parsing,
                                         const BuildOptions& opt = {});

  pos_t n() const { return n_; }
  bool auto_sentinel() const { return auto_sentinel_; }
  const IndexStats& stats() const { return stats_; }
  const CoreIndex& core() const { return core_; }

  // 1-based; answers refer to the (possibly sentinel-extended) text.
  pos_t query_isa(pos_t j, StepTrace* trace = nullptr) const;
  pos_t query_sa(pos_t i, StepTrace* trace = nullptr) const;

  // Original-text views when the auto sentinel was applied: the sentinel
  // suffix holds rank 1 of the extended text, so SA_orig[i] = SA_ext[i+1]
  // and ISA_orig[j] = ISA_ext[j] - 1, with positions unchanged.
  pos_t query_sa_original(pos_t i) const {
    return query_sa(i + (auto_sentinel_ ? 1 : 0));
  }
  pos_t query_isa_original(pos_t j) const {
    return query_isa(j) - (auto_sentinel_ ? 1 : 0);
  }

  std::uint8_t access(pos_t i) const { return core_.fwd.access(i); }
  pos_t lce(pos_t j1, pos_t j2, Direction dir) const {
    return core_.view().lce(j1, j2, dir);
  }

  // Index file: magic DSA1, version, section table with crc32 per
  // payload, then core / nonperiodic / periodic / bootstrap payloads.
  std::vector<std::uint8_t> serialize() const;
  static DeltaSaIndex deserialize(const std::vector<std::uint8_t>& bytes);

  pos_t bootstrap_entries() const { return pos_t(a_str_.size()); }

 private:
  pos_t n_ = 0;
  bool auto_sentinel_ = false;
  IndexStats stats_;
  CoreIndex core_;
  NonperiodicIndex np_;
  PeriodicIndex pd_;
  // bootstrap tables: sorted distinct length-16 substrings of T^inf with
  // cumulative range ends and leftmost occurrences
  std::vector<std::array<std::uint8_t, 16>> a_str_;
  std::vector<pos_t> a_cum_;
  std::vector<pos_t> a_minocc_;

  std::array<std::uint8_t, 16> gram_at(pos_t j) const;
};

}  // namespace dsa
