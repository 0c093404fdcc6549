#include "dsa/lz77.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dsa {

std::vector<pos_t> Parsing::phrase_starts() const {
  std::vector<pos_t> starts;
  starts.reserve(phrases.size());
  pos_t at = 1;
  for (const auto& f : phrases) {
    starts.push_back(at);
    at += f.is_literal() ? 1 : f.len;
  }
  return starts;
}

void longest_previous_factor(const std::vector<std::uint32_t>& seq,
                             std::vector<pos_t>& lpf,
                             std::vector<pos_t>& src) {
  const pos_t n = static_cast<pos_t>(seq.size());
  lpf.assign(size_t(n), 0);
  src.assign(size_t(n), -1);
  if (n == 0) return;
  auto sa = suffix_array_u32(seq);  // 1-based values
  std::vector<pos_t> rank(static_cast<size_t>(n));
  for (pos_t r = 0; r < n; ++r) rank[size_t(sa[size_t(r)] - 1)] = r;
  std::vector<pos_t> lcp(size_t(n), 0);  // lcp[r] = lcp(SA[r-1], SA[r])
  pos_t h = 0;
  for (pos_t i = 0; i < n; ++i) {
    if (rank[size_t(i)] > 0) {
      pos_t k = sa[size_t(rank[size_t(i)] - 1)] - 1;
      while (i + h < n && k + h < n && seq[size_t(i + h)] == seq[size_t(k + h)])
        ++h;
      lcp[size_t(rank[size_t(i)])] = h;
      if (h > 0) --h;
    } else {
      h = 0;
    }
  }
  // Crochemore-Ilie stack sweep: each element stores (text pos, lcp with the
  // element below it on the stack). A popped element takes the larger of its
  // prev-smaller and next-smaller lcp.
  struct Entry { pos_t sa0; pos_t lcp; };
  std::vector<Entry> st;
  st.push_back(Entry{-1, 0});  // sentinel: smaller than every position
  for (pos_t r = 0; r <= n; ++r) {
    pos_t cur_sa = (r < n) ? sa[size_t(r)] - 1 : -1;
    pos_t cur_lcp = (r < n && r > 0) ? lcp[size_t(r)] : 0;
    while (st.back().sa0 > cur_sa) {
      Entry top = st.back();
      st.pop_back();
      if (top.lcp >= cur_lcp) {
        if (top.lcp > 0) {
          lpf[size_t(top.sa0)] = top.lcp;
          src[size_t(top.sa0)] = st.back().sa0;  // prev-smaller neighbour
        }
      } else {
        lpf[size_t(top.sa0)] = cur_lcp;
        src[size_t(top.sa0)] = cur_sa;  // next-smaller neighbour
      }
      cur_lcp = std::min(cur_lcp, top.lcp);
    }
    st.push_back(Entry{cur_sa, cur_lcp});
  }
}

std::vector<std::pair<pos_t, pos_t>> greedy_parse_u32(
    const std::vector<std::uint32_t>& seq) {
  std::vector<pos_t> lpf, src;
  longest_previous_factor(seq, lpf, src);
  std::vector<std::pair<pos_t, pos_t>> out;
  pos_t i = 0, n = static_cast<pos_t>(seq.size());
  while (i < n) {
    if (lpf[size_t(i)] == 0) {
      out.emplace_back(pos_t(seq[size_t(i)]), 0);
      i += 1;
    } else {
      out.emplace_back(src[size_t(i)], lpf[size_t(i)]);
      i += lpf[size_t(i)];
    }
  }
  return out;
}

Parsing greedy_lz77(const Text& t, const ConstructionOracles& oracles) {
  std::vector<std::uint32_t> seq(t.bytes().begin(), t.bytes().end());
  std::vector<pos_t> lpf, src;
  longest_previous_factor(seq, lpf, src);
  Parsing p;
  p.text_len = t.n();
  pos_t i = 1;
  while (i <= t.n()) {
    pos_t len = lpf[size_t(i - 1)];
    if (len == 0) {
      p.phrases.push_back(Phrase{t.at(i), 0, 0});
      i += 1;
    } else {
      p.phrases.push_back(
          Phrase{0, oracles.rightmost_occ_before(i, len, i), len});
      i += len;
    }
  }
  return p;
}

Parsing greedy_lz77(const Text& t) {
  ConstructionOracles oracles(t);
  return greedy_lz77(t, oracles);
}

Text decode(const Parsing& p) {
  std::vector<std::uint8_t> out;
  out.reserve(size_t(std::max<pos_t>(p.text_len, 1)));
  for (const auto& f : p.phrases) {
    if (f.is_literal()) {
      out.push_back(f.lit);
    } else {
      if (f.src < 1 || f.src > static_cast<pos_t>(out.size()))
        throw std::invalid_argument("decode: copy source not yet produced");
      for (pos_t k = 0; k < f.len; ++k)
        out.push_back(out[size_t(f.src - 1 + k)]);
    }
  }
  if (p.text_len != static_cast<pos_t>(out.size()))
    throw std::invalid_argument("decode: length mismatch");
  return Text(std::move(out));
}

Parsing lz_like_to_lz77(const Parsing& p, const ConstructionOracles& oracles) {
  Text decoded = decode(p);
  const Text& t = oracles.text();
  if (decoded.bytes() != t.bytes())
    throw std::invalid_argument("lz_like_to_lz77: oracle/text mismatch");
  const pos_t n = t.n();
  Parsing out;
  out.text_len = n;
  pos_t i = 1;
  while (i <= n) {
    // Maximal l such that the leftmost occurrence of T[i..i+l) starts
    // before i; monotone in l, so binary search.
    pos_t lo = 0, hi = n - i + 1;
    while (lo < hi) {
      pos_t mid = (lo + hi + 1) / 2;
      if (oracles.leftmost_occ(i, mid) < i)
        lo = mid;
      else
        hi = mid - 1;
    }
    if (lo == 0) {
      out.phrases.push_back(Phrase{t.at(i), 0, 0});
      i += 1;
    } else {
      out.phrases.push_back(
          Phrase{0, oracles.rightmost_occ_before(i, lo, i), lo});
      i += lo;
    }
  }
  return out;
}

std::string parsing_to_text_format(const Parsing& p) {
  std::ostringstream os;
  os << "N " << p.text_len << "\n";
  for (const auto& f : p.phrases) {
    if (f.is_literal())
      os << "L " << int(f.lit) << "\n";
    else
      os << "C " << f.src << " " << f.len << "\n";
  }
  return os.str();
}

Parsing parsing_from_text_format(const std::string& data) {
  std::istringstream is(data);
  std::string tag;
  Parsing p;
  if (!(is >> tag) || tag != "N" || !(is >> p.text_len) || p.text_len < 1)
    throw std::invalid_argument("parsing_from_text_format: bad header");
  while (is >> tag) {
    if (tag == "L") {
      int b;
      if (!(is >> b) || b < 0 || b > 255)
        throw std::invalid_argument("parsing_from_text_format: bad literal");
      p.phrases.push_back(Phrase{std::uint8_t(b), 0, 0});
    } else if (tag == "C") {
      Phrase f;
      if (!(is >> f.src >> f.len) || f.src < 1 || f.len < 1)
        throw std::invalid_argument("parsing_from_text_format: bad copy");
      p.phrases.push_back(f);
    } else {
      throw std::invalid_argument("parsing_from_text_format: bad tag");
    }
  }
  if (p.phrases.empty())
    throw std::invalid_argument("parsing_from_text_format: empty parsing");
  return p;
}

}  // namespace dsa
