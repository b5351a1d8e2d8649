#pragma once

#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <vector>

#include "tkdr/errors.hpp"

namespace tkdr::io {

// Little-endian append-only buffer used by every save() routine.
class ByteWriter {
 public:
  void put_u8(uint8_t v) { buf_.push_back(v); }
  void put_u32(uint32_t v) { put_le(v, 4); }
  void put_u64(uint64_t v) { put_le(v, 8); }
  void put_i64(int64_t v) { put_le(static_cast<uint64_t>(v), 8); }

  void put_bytes(std::span<const uint8_t> bytes) { buf_.insert(buf_.end(), bytes.begin(), bytes.end()); }

  template <class T>
  void put_array(std::span<const T> values) {
    put_u64(values.size());
    for (T v : values) put_le(static_cast<uint64_t>(v), sizeof(T));
  }

  [[nodiscard]] const std::vector<uint8_t>& bytes() const { return buf_; }
  [[nodiscard]] std::vector<uint8_t> release() { return std::move(buf_); }
  [[nodiscard]] size_t size() const { return buf_.size(); }

 private:
  void put_le(uint64_t v, int width) {
    for (int i = 0; i < width; ++i) buf_.push_back(static_cast<uint8_t>(v >> (8 * i)));
  }

  std::vector<uint8_t> buf_;
};

// Bounds-checked reader over a borrowed byte range; running past the end
// throws TruncatedData.
class ByteReader {
 public:
  explicit ByteReader(std::span<const uint8_t> data) : data_(data) {}

  uint8_t get_u8() { return static_cast<uint8_t>(get_le(1)); }
  uint32_t get_u32() { return static_cast<uint32_t>(get_le(4)); }
  uint64_t get_u64() { return get_le(8); }
  int64_t get_i64() { return static_cast<int64_t>(get_le(8)); }

  std::span<const uint8_t> get_bytes(size_t n) {
    need(n);
    auto out = data_.subspan(pos_, n);
    pos_ += n;
    return out;
  }

  template <class T>
  std::vector<T> get_array() {
    uint64_t n = get_u64();
    if (n > remaining() / sizeof(T)) throw TruncatedData("array length exceeds section");
    std::vector<T> out(n);
    for (auto& v : out) v = static_cast<T>(get_le(sizeof(T)));
    return out;
  }

  [[nodiscard]] size_t remaining() const { return data_.size() - pos_; }
  [[nodiscard]] bool at_end() const { return pos_ == data_.size(); }

 private:
  void need(size_t n) const {
    if (n > remaining()) throw TruncatedData("unexpected end of data");
  }

  uint64_t get_le(int width) {
    need(width);
    uint64_t v = 0;
    for (int i = 0; i < width; ++i) v |= static_cast<uint64_t>(data_[pos_ + i]) << (8 * i);
    pos_ += width;
    return v;
  }

  std::span<const uint8_t> data_;
  size_t pos_ = 0;
};

}  // namespace tkdr::io
