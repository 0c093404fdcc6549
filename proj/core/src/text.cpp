#include "dsa/text.hpp"

#include <algorithm>

namespace dsa {

Text::Text(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {
  if (bytes_.empty()) throw std::invalid_argument("Text: empty");
}

Text::Text(std::string_view s)
    : Text(std::vector<std::uint8_t>(s.begin(), s.end())) {}

bool Text::check_sentinel() const {
  std::uint8_t last = bytes_.back();
  for (size_t i = 0; i + 1 < bytes_.size(); ++i)
    if (bytes_[i] == last) return false;
  return true;
}

void Text::validate_sentinel() {
  if (!check_sentinel())
    throw std::invalid_argument("Text: T[n] occurs in T[1..n)");
  sentinel_validated_ = true;
}

Text Text::with_appended_sentinel() const {
  std::vector<std::uint8_t> out;
  out.reserve(bytes_.size() + 1);
  for (std::uint8_t b : bytes_) {
    if (b == 255)
      throw std::invalid_argument("Text: byte 255 present, cannot remap");
    out.push_back(static_cast<std::uint8_t>(b + 1));
  }
  out.push_back(0);
  Text t(std::move(out));
  t.validate_sentinel();
  return t;
}

Text Text::reversed() const {
  std::vector<std::uint8_t> out(bytes_.rbegin(), bytes_.rend());
  return Text(std::move(out));
}

}  // namespace dsa
