// Canonical text representation with T-infinity indexing and both
// lexicographic orders. All positions are 1-based.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dsa {

using pos_t = std::int64_t;

enum class OrderMode { Standard, Inverted };

// Single-symbol comparison under the given order. Inverted reverses the
// order on symbols, then extends lexicographically (not the same as
// reversing the order on strings).
inline int cmp_sym(std::uint8_t a, std::uint8_t b, OrderMode mode) {
  if (a == b) return 0;
  bool lt = (mode == OrderMode::Standard) ? a < b : b < a;
  return lt ? -1 : 1;
}

class Text {
 public:
  Text() = default;
  explicit Text(std::vector<std::uint8_t> bytes);
  explicit Text(std::string_view s);

  pos_t n() const { return static_cast<pos_t>(bytes_.size()); }
  const std::vector<std::uint8_t>& bytes() const { return bytes_; }

  // 1-based access, i in [1..n].
  std::uint8_t at(pos_t i) const { return bytes_[static_cast<size_t>(i - 1)]; }

  // T^inf[j] = T[1 + ((j-1) mod n)] with mathematical modulus; any sign.
  std::uint8_t tinf(pos_t j) const {
    pos_t m = (j - 1) % n();
    if (m < 0) m += n();
    return bytes_[static_cast<size_t>(m)];
  }

  // Maps a T^inf position to its representative in [1..n].
  pos_t tinf_pos(pos_t j) const {
    pos_t m = (j - 1) % n();
    if (m < 0) m += n();
    return m + 1;
  }

  bool sentinel_validated() const { return sentinel_validated_; }

  // True iff bytes[n] occurs nowhere in bytes[1..n).
  bool check_sentinel() const;

  // Marks the text sentinel-validated; throws if the check fails.
  void validate_sentinel();

  // Returns a copy with every byte remapped b -> b+1 and symbol 0 appended.
  // Throws if byte 255 is present.
  Text with_appended_sentinel() const;

  Text reversed() const;

  std::string to_string() const {
    return std::string(bytes_.begin(), bytes_.end());
  }

 private:
  std::vector<std::uint8_t> bytes_;
  bool sentinel_validated_ = false;
};

// Interval [start..start+len) of positions; building block of IntervalSet.
struct Interval {
  pos_t start = 0;
  pos_t len = 0;
  friend bool operator==(const Interval&, const Interval&) = default;
};

}  // namespace dsa
