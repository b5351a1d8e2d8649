#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "tkdr/io/byte_stream.hpp"

namespace tkdr::succinct {

// Growable packed bit sequence; the mutable staging area for BitVector.
// Indexing here is 0-based.
class BitBuffer {
 public:
  BitBuffer() = default;
  explicit BitBuffer(size_t n, bool value = false);

  void push_back(bool bit) {
    if ((size_ & 63) == 0) words_.push_back(0);
    if (bit) words_.back() |= uint64_t{1} << (size_ & 63);
    ++size_;
  }
  void append(bool bit, size_t count);

  void set(size_t i, bool bit) {
    uint64_t mask = uint64_t{1} << (i & 63);
    if (bit) words_[i >> 6] |= mask; else words_[i >> 6] &= ~mask;
  }
  [[nodiscard]] bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  [[nodiscard]] size_t size() const { return size_; }

  std::vector<uint64_t> take_words() && { return std::move(words_); }

 private:
  std::vector<uint64_t> words_;
  size_t size_ = 0;
};

// Static bitvector with a two-level rank directory and sampled select.
// Positions are 1-based; rank(i) counts over the inclusive prefix B[1..i].
class BitVector {
 public:
  BitVector() { build_directory(); }
  explicit BitVector(BitBuffer bits);
  BitVector(std::vector<uint64_t> words, size_t size);
  BitVector(std::initializer_list<int> bits);

  [[nodiscard]] size_t size() const { return size_; }
  [[nodiscard]] size_t ones() const { return ones_; }
  [[nodiscard]] size_t zeros() const { return size_ - ones_; }

  // B[pos], 1 <= pos <= size. Unchecked.
  [[nodiscard]] bool operator[](size_t pos) const {
    --pos;
    return (words_[pos >> 6] >> (pos & 63)) & 1;
  }
  // Checked access.
  [[nodiscard]] bool access(size_t pos) const;

  [[nodiscard]] size_t rank1(size_t i) const;
  [[nodiscard]] size_t rank0(size_t i) const { return i - rank1(i); }
  [[nodiscard]] size_t rank(bool b, size_t i) const { return b ? rank1(i) : rank0(i); }

  [[nodiscard]] size_t select1(size_t j) const;
  [[nodiscard]] size_t select0(size_t j) const;
  [[nodiscard]] size_t select(bool b, size_t j) const { return b ? select1(j) : select0(j); }

  // Rank without the bounds check, for inner loops that already know 0 <= i <= size.
  [[nodiscard]] size_t rank1_unchecked(size_t i) const {
    size_t r = super_[i >> 11] + block_[i >> 9];
    for (size_t w = (i >> 9) << 3; w < (i >> 6); ++w) r += std::popcount(words_[w]);
    if (i & 63) r += std::popcount(words_[i >> 6] & ((uint64_t{1} << (i & 63)) - 1));
    return r;
  }

  [[nodiscard]] std::span<const uint64_t> words() const { return words_; }
  [[nodiscard]] size_t size_in_bytes() const;

  void save(io::ByteWriter& out) const;
  static BitVector load(io::ByteReader& in);

  friend bool operator==(const BitVector& a, const BitVector& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

 private:
  static constexpr size_t kSuperBits = 2048;
  static constexpr size_t kBlockBits = 512;
  static constexpr size_t kSelectSample = 4096;

  void build_directory();
  template <bool Bit>
  size_t select_impl(size_t j) const;

  std::vector<uint64_t> words_;
  size_t size_ = 0;
  size_t ones_ = 0;
  std::vector<uint64_t> super_;
  std::vector<uint16_t> block_;
  std::vector<uint32_t> sample1_;
  std::vector<uint32_t> sample0_;
};

// Position (1-based) of the r-th set bit of w, r >= 1 and r <= popcount(w).
inline int select_in_word(uint64_t w, int r) {
  for (int byte = 0; byte < 8; ++byte) {
    int c = std::popcount(static_cast<uint8_t>(w >> (8 * byte)));
    if (r <= c) {
      for (int bit = 8 * byte;; ++bit) {
        if ((w >> bit) & 1) {
          if (--r == 0) return bit + 1;
        }
      }
    }
    r -= c;
  }
  return 0;
}

}  // namespace tkdr::succinct
