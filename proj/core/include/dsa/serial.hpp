// Little-endian fixed-width serialization with crc32 section checksums.
#pragma once

#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>
#include <vector>

namespace dsa {

std::uint32_t crc32(const void* data, size_t len, std::uint32_t seed = 0);

class Writer {
 public:
  void u8(std::uint8_t v) { buf_.push_back(v); }
  void u16(std::uint16_t v) { raw(&v, 2); }
  void u32(std::uint32_t v) { raw(&v, 4); }
  void u64(std::uint64_t v) { raw(&v, 8); }
  void i64(std::int64_t v) { raw(&v, 8); }
  void bytes(const void* p, size_t len) { raw(p, len); }

  template <class T>
  void vec_u64(const std::vector<T>& v) {
    u64(v.size());
    for (const T& x : v) u64(std::uint64_t(x));
  }
  template <class T>
  void vec_i64(const std::vector<T>& v) {
    u64(v.size());
    for (const T& x : v) i64(std::int64_t(x));
  }

  const std::vector<std::uint8_t>& data() const { return buf_; }
  std::vector<std::uint8_t> take() { return std::move(buf_); }

 private:
  void raw(const void* p, size_t len) {
    // assumes a little-endian host (checked in sa_index serialization)
    const auto* b = static_cast<const std::uint8_t*>(p);
    buf_.insert(buf_.end(), b, b + len);
  }
  std::vector<std::uint8_t> buf_;
};

class Reader {
 public:
  Reader(const std::uint8_t* data, size_t len) : p_(data), end_(data + len) {}

  std::uint8_t u8() { return *take(1); }
  std::uint16_t u16() { return get<std::uint16_t>(); }
  std::uint32_t u32() { return get<std::uint32_t>(); }
  std::uint64_t u64() { return get<std::uint64_t>(); }
  std::int64_t i64() { return get<std::int64_t>(); }
  void bytes(void* out, size_t len) { std::memcpy(out, take(len), len); }

  template <class T>
  std::vector<T> vec_u64() {
    std::uint64_t n = u64();
    check_remaining(n * 8);
    std::vector<T> v(static_cast<size_t>(n));
    for (auto& x : v) x = T(u64());
    return v;
  }
  template <class T>
  std::vector<T> vec_i64() {
    std::uint64_t n = u64();
    check_remaining(n * 8);
    std::vector<T> v(static_cast<size_t>(n));
    for (auto& x : v) x = T(i64());
    return v;
  }

  size_t remaining() const { return size_t(end_ - p_); }
  void check_remaining(std::uint64_t need) const {
    if (need > remaining()) throw std::runtime_error("serial: truncated");
  }

 private:
  const std::uint8_t* take(size_t len) {
    check_remaining(len);
    const std::uint8_t* at = p_;
    p_ += len;
    return at;
  }
  template <class T>
  T get() {
    T v;
    std::memcpy(&v, take(sizeof(T)), sizeof(T));
    return v;
  }
  const std::uint8_t* p_;
  const std::uint8_t* end_;
};

}  // namespace dsa
