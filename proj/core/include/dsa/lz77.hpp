// Greedy LZ77 parsing, LZ77-like parsing decode/validation, and the
// conversion of LZ77-like parsings into the greedy parsing.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dsa/oracles.hpp"
#include "dsa/text.hpp"

namespace dsa {

// Literal when len == 0 (byte in lit); otherwise copy of T[src..src+len)
// with src earlier than the phrase start (overlap allowed).
struct Phrase {
  std::uint8_t lit = 0;
  pos_t src = 0;
  pos_t len = 0;
  bool is_literal() const { return len == 0; }
  friend bool operator==(const Phrase&, const Phrase&) = default;
};

struct Parsing {
  std::vector<Phrase> phrases;
  pos_t text_len = 0;
  pos_t size() const { return static_cast<pos_t>(phrases.size()); }
  // Starting position (1-based) of every phrase.
  std::vector<pos_t> phrase_starts() const;
};

// Greedy longest-previous-factor parsing; copies store the leftmost source.
Parsing greedy_lz77(const Text& t, const ConstructionOracles& oracles);
Parsing greedy_lz77(const Text& t);

Text decode(const Parsing& p);

// Converts any LZ77-like parsing of the oracles' text into the greedy
// parsing via the leftmost-occurrence loop.
Parsing lz_like_to_lz77(const Parsing& p, const ConstructionOracles& oracles);

// One phrase per line: `L <byte-decimal>` or `C <src> <len>`, with a
// `N <n>` header line; positions 1-based.
std::string parsing_to_text_format(const Parsing& p);
Parsing parsing_from_text_format(const std::string& data);

// Longest previous factor for an arbitrary u32 sequence: lpf[i] is the
// longest match starting at i with an occurrence starting before i,
// src[i] one such earlier start (both 0-based, src -1 when lpf 0).
void longest_previous_factor(const std::vector<std::uint32_t>& seq,
                             std::vector<pos_t>& lpf, std::vector<pos_t>& src);

// Greedy parsing of a u32 sequence, as (src0, len) with len==0 for
// literals (src0 holds the symbol); 0-based sources.
std::vector<std::pair<pos_t, pos_t>> greedy_parse_u32(
    const std::vector<std::uint32_t>& seq);

}  // namespace dsa
