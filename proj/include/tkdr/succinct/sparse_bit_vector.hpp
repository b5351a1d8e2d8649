#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "tkdr/succinct/bit_vector.hpp"
#include "tkdr/succinct/int_vector.hpp"

namespace tkdr::succinct {

// Elias-Fano coded set of positions in [1, universe]: low bits of each
// position in a fixed-width array, high parts in unary in a plain
// bitvector. Uses about m*log(universe/m) + 2m bits for m set bits.
class SparseBitVector {
 public:
  SparseBitVector() = default;
  // positions must be strictly increasing and lie in [1, universe].
  SparseBitVector(std::span<const uint64_t> positions, size_t universe);

  [[nodiscard]] size_t size() const { return universe_; }
  [[nodiscard]] size_t ones() const { return count_; }

  [[nodiscard]] bool access(size_t pos) const;
  [[nodiscard]] size_t rank1(size_t i) const;
  [[nodiscard]] size_t rank0(size_t i) const { return i - rank1(i); }
  [[nodiscard]] size_t rank(bool b, size_t i) const { return b ? rank1(i) : rank0(i); }
  [[nodiscard]] size_t select1(size_t j) const;
  // By binary search over rank; D only ever needs select1.
  [[nodiscard]] size_t select0(size_t j) const;
  [[nodiscard]] size_t select(bool b, size_t j) const { return b ? select1(j) : select0(j); }

  [[nodiscard]] size_t size_in_bytes() const { return sizeof(*this) + high_.size_in_bytes() + low_.size_in_bytes(); }

  void save(io::ByteWriter& out) const;
  static SparseBitVector load(io::ByteReader& in);

 private:
  size_t rank1_unchecked(size_t i) const;

  size_t universe_ = 0;
  size_t count_ = 0;
  int low_width_ = 0;
  BitVector high_;
  IntVector low_;
};

}  // namespace tkdr::succinct
