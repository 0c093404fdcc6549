// tau-runs, the grammar-boundary synchronizing-set construction, and
// cover-compressed synchronizing-set collections.
#pragma once

#include <vector>

#include "dsa/covers.hpp"
#include "dsa/grammar.hpp"
#include "dsa/oracles.hpp"
#include "dsa/text.hpp"

namespace dsa {

// Maximal fragment T[start..end] of length >= tau whose shortest period
// is at most floor(tau/3).
struct TauRun {
  pos_t start = 0;
  pos_t end = 0;
  pos_t period = 0;
  friend bool operator==(const TauRun&, const TauRun&) = default;
  friend auto operator<=>(const TauRun&, const TauRun&) = default;
};

// All tau-runs sharing >= tau symbols with some window interval extended
// by 2*tau to the right; block partitioning + 2-period queries + LCE
// extension. Sorted by start, deduplicated.
std::vector<TauRun> compute_tau_runs(const ConstructionOracles& oracles,
                                     const IntervalSet& window, pos_t tau);

// The level selector max({0} u {h > 0 : tau >= alpha_h}).
pos_t sync_level_selector(pos_t tau);

// S(tau, T) from grammar boundaries and runs; sorted ascending.
std::vector<pos_t> build_sync_set(const Text& t,
                                  const ConstructionOracles& oracles,
                                  const Rlslp& grammar, pos_t tau);

struct CompressedSyncSet {
  pos_t k = 0;    // index level
  pos_t tau = 0;  // floor(2^k / 3)
  std::vector<pos_t> positions;  // S_k intersected with Cover_{c tau_k}
};

// One compressed set per level k in [4 .. ceil(log2 n)).
std::vector<CompressedSyncSet> build_compressed_sync_collection(
    const Text& t, const ConstructionOracles& oracles,
    const CoverHierarchy& hierarchy, const Rlslp& grammar, pos_t c);

}  // namespace dsa
