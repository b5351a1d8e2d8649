#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tkdr/io/byte_stream.hpp"

namespace tkdr::succinct {

// Bits needed to represent v (0 for v == 0).
inline int bit_width_of(uint64_t v) { return v == 0 ? 0 : 64 - __builtin_clzll(v); }

// Fixed-width packed integer array, 0-based. Width 0 is legal and stores
// nothing (every entry reads as 0).
class IntVector {
 public:
  IntVector() = default;
  IntVector(size_t n, int width);
  IntVector(std::span<const uint64_t> values, int width);

  // Smallest width that fits every value.
  static IntVector compact(std::span<const uint64_t> values);

  [[nodiscard]] uint64_t operator[](size_t i) const {
    if (width_ == 0) return 0;
    size_t bit = i * width_;
    size_t w = bit >> 6;
    int off = bit & 63;
    uint64_t v = words_[w] >> off;
    if (off + width_ > 64) v |= words_[w + 1] << (64 - off);
    return v & mask_;
  }
  void set(size_t i, uint64_t v);

  [[nodiscard]] size_t size() const { return size_; }
  [[nodiscard]] int width() const { return width_; }
  [[nodiscard]] size_t size_in_bytes() const { return sizeof(*this) + words_.size() * 8; }

  void save(io::ByteWriter& out) const;
  static IntVector load(io::ByteReader& in);

  friend bool operator==(const IntVector&, const IntVector&) = default;

 private:
  std::vector<uint64_t> words_;
  size_t size_ = 0;
  int width_ = 0;
  uint64_t mask_ = 0;
};

}  // namespace tkdr::succinct
