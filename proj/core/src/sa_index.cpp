#include "dsa/sa_index.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace dsa {

DeltaSaIndex DeltaSaIndex::build_from_parsing(const Parsing& parsing,
                                              const BuildOptions& opt) {
  return build(decode(parsing), opt);
}

DeltaSaIndex DeltaSaIndex::build(Text text, const BuildOptions& opt) {
  bool applied = false;
  if (!text.check_sentinel()) {
    if (!opt.append_sentinel)
      throw std::invalid_argument(
          "build: T[n] occurs in T[1..n); pass --append-sentinel");
    text = text.with_appended_sentinel();
    applied = true;
  } else {
    text.validate_sentinel();
  }
  DeltaSaIndex idx;
  idx.auto_sentinel_ = applied;
  const Text& t = text;
  const pos_t n = t.n();
  idx.n_ = n;

  ConstructionOracles oracles(t);
  Parsing parsing = greedy_lz77(t, oracles);
  CoverHierarchy hierarchy(t, oracles, parsing.phrase_starts());
  Rlslp fwd = restricted_recompression(t, hierarchy).grammar;

  Text tr = t.reversed();
  ConstructionOracles rev_oracles(tr);
  Parsing rev_parsing = greedy_lz77(tr, rev_oracles);
  CoverHierarchy rev_hierarchy(tr, rev_oracles, rev_parsing.phrase_starts());
  Rlslp rev = restricted_recompression(tr, rev_hierarchy).grammar;

  idx.core_ = build_core(t, oracles, rev_oracles, hierarchy, std::move(fwd),
                         std::move(rev));
  auto collection = build_compressed_sync_collection(t, oracles, hierarchy,
                                                     idx.core_.fwd, 14);
  idx.np_ = NonperiodicIndex(t, oracles, idx.core_, collection);
  idx.pd_ = PeriodicIndex(t, oracles, rev_oracles, idx.core_);

  // Bootstrap tables from phrase-boundary-crossing 16-windows plus the
  // wrapping windows near the end of the text.
  {
    std::vector<pos_t> candidates;
    for (pos_t b : parsing.phrase_starts())
      for (pos_t i = std::max<pos_t>(1, b - 15); i <= b; ++i)
        candidates.push_back(i);
    for (pos_t i = std::max<pos_t>(1, n - 14); i <= n; ++i)
      candidates.push_back(i);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());
    std::vector<std::pair<std::array<std::uint8_t, 16>, pos_t>> grams;
    for (pos_t i : candidates) {
      std::array<std::uint8_t, 16> g;
      for (pos_t x = 0; x < 16; ++x) g[size_t(x)] = t.tinf(i + x);
      grams.emplace_back(g, i);
    }
    std::sort(grams.begin(), grams.end());
    pos_t total = 0;
    for (size_t i = 0; i < grams.size(); ++i) {
      if (i > 0 && grams[i].first == grams[i - 1].first) continue;
      const auto& g = grams[i].first;
      pos_t at = grams[i].second;
      pos_t count, minocc;
      if (at <= n - 15) {
        count = oracles.occ_count(at, 16);
        minocc = oracles.leftmost_occ(at, 16);
      } else {
        count = 1;  // wrapping grams contain the sentinel: unique
        minocc = at;
      }
      idx.a_str_.push_back(g);
      total += count;
      idx.a_cum_.push_back(total);
      idx.a_minocc_.push_back(minocc);
    }
    if (total != n)
      throw std::logic_error("bootstrap: ranges do not partition [0..n]");
  }

  // statistics
  idx.stats_.n = n;
  idx.stats_.z = parsing.size();
  auto prof = delta_complexity(t);
  idx.stats_.delta_num = prof.num();
  idx.stats_.delta_den = prof.den();
  idx.stats_.rlslp_size = pos_t(idx.core_.fwd.size());
  idx.stats_.levels = idx.core_.levels();
  for (pos_t k = 4; k < 4 + idx.core_.levels(); ++k) {
    idx.stats_.runs_per_level.push_back(idx.core_.runs(k).num_intervals());
    idx.stats_.sss_per_level.push_back(
        pos_t(idx.np_.level(k).arr_sss_comp.size()));
    idx.stats_.roots_per_level.push_back(
        pos_t(idx.pd_.level(k).pts_minus.size() +
              idx.pd_.level(k).pts_plus.size()));
  }
  return idx;
}

std::array<std::uint8_t, 16> DeltaSaIndex::gram_at(pos_t j) const {
  std::array<std::uint8_t, 16> g;
  for (pos_t x = 0; x < 16; ++x) {
    pos_t p = (j + x - 1) % n_ + 1;
    g[size_t(x)] = core_.fwd.access(p);
  }
  return g;
}

pos_t DeltaSaIndex::query_isa(pos_t j, StepTrace* trace) const {
  if (j < 1 || j > n_) throw std::out_of_range("query_isa: position");
  auto g = gram_at(j);
  auto it = std::lower_bound(a_str_.begin(), a_str_.end(), g);
  if (it == a_str_.end() || *it != g)
    throw std::logic_error("query_isa: bootstrap miss");
  size_t idx = size_t(it - a_str_.begin());
  pos_t b = idx == 0 ? 0 : a_cum_[idx - 1];
  pos_t e = a_cum_[idx];
  pos_t witness = a_minocc_[idx];
  auto view = core_.view();
  for (pos_t k = 4; (pos_t(1) << k) < n_; ++k) {
    bool periodic = is_periodic_position(core_, k, j, witness);
    RefineResult r;
    if (periodic)
      r = pd_.refine_isa_step(view, core_, k, j, b, e, witness);
    else
      r = np_.refine_isa_step(view, k, j, b, e, witness);
    b = r.b;
    e = r.e;
    witness = r.witness;
    if (trace) trace->steps.push_back({k, b, e, witness, periodic});
  }
  return e;
}

pos_t DeltaSaIndex::query_sa(pos_t i, StepTrace* trace) const {
  if (i < 1 || i > n_) throw std::out_of_range("query_sa: rank");
  size_t idx = size_t(
      std::lower_bound(a_cum_.begin(), a_cum_.end(), i) - a_cum_.begin());
  pos_t b = idx == 0 ? 0 : a_cum_[idx - 1];
  pos_t e = a_cum_[idx];
  pos_t witness = a_minocc_[idx];
  auto view = core_.view();
  for (pos_t k = 4; (pos_t(1) << k) < n_; ++k) {
    bool periodic = is_periodic_position(core_, k, witness, witness);
    RefineResult r;
    if (periodic)
      r = pd_.refine_sa_step(view, core_, k, i, b, e, witness);
    else
      r = np_.refine_sa_step(view, k, i, b, e, witness);
    b = r.b;
    e = r.e;
    witness = r.witness;
    if (trace) trace->steps.push_back({k, b, e, witness, periodic});
  }
  return witness;
}

namespace {
constexpr char kMagic[4] = {'D', 'S', 'A', '1'};
constexpr std::uint16_t kVersion = 1;
}  // namespace

std::vector<std::uint8_t> DeltaSaIndex::serialize() const {
  // four payload sections in fixed order
  std::vector<std::vector<std::uint8_t>> sections;
  {
    Writer w;
    core_.save(w);
    sections.push_back(w.take());
  }
  {
    Writer w;
    np_.save(w);
    sections.push_back(w.take());
  }
  {
    Writer w;
    pd_.save(w);
    sections.push_back(w.take());
  }
  {
    Writer w;
    w.i64(n_);
    w.u8(auto_sentinel_ ? 1 : 0);
    w.i64(stats_.z);
    w.i64(stats_.delta_num);
    w.i64(stats_.delta_den);
    w.i64(stats_.rlslp_size);
    w.i64(stats_.levels);
    w.vec_i64(stats_.runs_per_level);
    w.vec_i64(stats_.sss_per_level);
    w.vec_i64(stats_.roots_per_level);
    w.u64(a_str_.size());
    for (const auto& g : a_str_) w.bytes(g.data(), 16);
    w.vec_i64(a_cum_);
    w.vec_i64(a_minocc_);
    sections.push_back(w.take());
  }

  Writer out;
  out.bytes(kMagic, 4);
  out.u16(kVersion);
  out.u32(std::uint32_t(sections.size()));
  std::uint64_t offset = 0;
  for (const auto& s : sections) {
    out.u64(offset);
    out.u64(s.size());
    out.u32(crc32(s.data(), s.size()));
    offset += s.size();
  }
  for (const auto& s : sections) out.bytes(s.data(), s.size());
  return out.take();
}

DeltaSaIndex DeltaSaIndex::deserialize(const std::vector<std::uint8_t>& bytes) {
  Reader r(bytes.data(), bytes.size());
  char magic[4];
  r.bytes(magic, 4);
  if (std::memcmp(magic, kMagic, 4) != 0)
    throw std::runtime_error("deserialize: bad magic");
  if (r.u16() != kVersion)
    throw std::runtime_error("deserialize: unsupported version");
  std::uint32_t nsec = r.u32();
  if (nsec != 4) throw std::runtime_error("deserialize: bad section count");
  struct Sec {
    std::uint64_t off, len;
    std::uint32_t crc;
  };
  std::vector<Sec> secs;
  for (std::uint32_t i = 0; i < nsec; ++i) {
    Sec s;
    s.off = r.u64();
    s.len = r.u64();
    s.crc = r.u32();
    secs.push_back(s);
  }
  size_t header = 4 + 2 + 4 + size_t(nsec) * 20;
  for (const auto& s : secs) {
    if (header + s.off + s.len > bytes.size())
      throw std::runtime_error("deserialize: truncated");
    if (crc32(bytes.data() + header + s.off, size_t(s.len)) != s.crc)
      throw std::runtime_error("deserialize: checksum failure");
  }
  DeltaSaIndex idx;
  {
    Reader sr(bytes.data() + header + secs[0].off, size_t(secs[0].len));
    idx.core_ = CoreIndex::load(sr);
  }
  {
    Reader sr(bytes.data() + header + secs[1].off, size_t(secs[1].len));
    idx.np_ = NonperiodicIndex::load(sr);
  }
  {
    Reader sr(bytes.data() + header + secs[2].off, size_t(secs[2].len));
    idx.pd_ = PeriodicIndex::load(sr);
  }
  {
    Reader sr(bytes.data() + header + secs[3].off, size_t(secs[3].len));
    idx.n_ = sr.i64();
    idx.auto_sentinel_ = sr.u8() != 0;
    idx.stats_.n = idx.n_;
    idx.stats_.z = sr.i64();
    idx.stats_.delta_num = sr.i64();
    idx.stats_.delta_den = sr.i64();
    idx.stats_.rlslp_size = sr.i64();
    idx.stats_.levels = sr.i64();
    idx.stats_.runs_per_level = sr.vec_i64<pos_t>();
    idx.stats_.sss_per_level = sr.vec_i64<pos_t>();
    idx.stats_.roots_per_level = sr.vec_i64<pos_t>();
    std::uint64_t m = sr.u64();
    for (std::uint64_t i = 0; i < m; ++i) {
      std::array<std::uint8_t, 16> g;
      sr.bytes(g.data(), 16);
      idx.a_str_.push_back(g);
    }
    idx.a_cum_ = sr.vec_i64<pos_t>();
    idx.a_minocc_ = sr.vec_i64<pos_t>();
  }
  if (idx.n_ != idx.core_.n)
    throw std::runtime_error("deserialize: inconsistent payloads");
  return idx;
}

// crc32 (IEEE, table-driven)
std::uint32_t crc32(const void* data, size_t len, std::uint32_t seed) {
  static std::uint32_t table[256];
  static bool init = false;
  if (!init) {
    for (std::uint32_t i = 0; i < 256; ++i) {
      std::uint32_t c = i;
      for (int k = 0; k < 8; ++k)
        c = (c & 1) ? 0xedb88320u ^ (c >> 1) : c >> 1;
      table[i] = c;
    }
    init = true;
  }
  std::uint32_t c = seed ^ 0xffffffffu;
  const auto* p = static_cast<const std::uint8_t*>(data);
  for (size_t i = 0; i < len; ++i) c = table[(c ^ p[i]) & 0xff] ^ (c >> 8);
  return c ^ 0xffffffffu;
}

}  // namespace dsa
