#include "tkdr/succinct/sparse_bit_vector.hpp"

#include <string>

#include "tkdr/errors.hpp"

namespace tkdr::succinct {

SparseBitVector::SparseBitVector(std::span<const uint64_t> positions, size_t universe)
    : universe_(universe), count_(positions.size()) {
  uint64_t prev = 0;
  for (uint64_t p : positions) {
    if (p <= prev || p > universe) throw BuildError("sparse bitvector positions must be strictly increasing in [1, universe]");
    prev = p;
  }
  low_width_ = 0;
  if (count_ > 0 && universe_ / count_ > 1) low_width_ = bit_width_of(universe_ / count_) - 1;

  low_ = IntVector(count_, low_width_);
  BitBuffer high((universe_ >> low_width_) + count_ + 1);
  uint64_t low_mask = (uint64_t{1} << low_width_) - 1;
  for (size_t k = 0; k < count_; ++k) {
    uint64_t v = positions[k] - 1;
    low_.set(k, v & low_mask);
    high.set((v >> low_width_) + k, true);
  }
  high_ = BitVector(std::move(high));
}

size_t SparseBitVector::rank1_unchecked(size_t i) const {
  // number of stored values v (0-based) with v < i
  uint64_t bucket = i >> low_width_;
  uint64_t low = i & ((uint64_t{1} << low_width_) - 1);
  size_t pos = 0;  // 0-based high position where bucket starts
  size_t k = 0;    // elements before bucket
  if (bucket > 0) {
    if (bucket > high_.zeros()) return count_;
    pos = high_.select0(bucket);  // 1-based position of that zero == 0-based start of bucket
    k = pos - bucket;
  }
  while (k < count_ && high_[pos + 1] && low_[k] < low) {
    ++k;
    ++pos;
  }
  return k;
}

size_t SparseBitVector::rank1(size_t i) const {
  if (i > universe_) throw OutOfRange("sparse rank position " + std::to_string(i) + " exceeds universe");
  return rank1_unchecked(i);
}

bool SparseBitVector::access(size_t pos) const {
  if (pos < 1 || pos > universe_) throw OutOfRange("sparse access out of range");
  return rank1_unchecked(pos) != rank1_unchecked(pos - 1);
}

size_t SparseBitVector::select1(size_t j) const {
  if (j < 1 || j > count_) throw NotFound("sparse select rank " + std::to_string(j) + " not present");
  uint64_t hi = high_.select1(j) - j;
  return ((hi << low_width_) | low_[j - 1]) + 1;
}

size_t SparseBitVector::select0(size_t j) const {
  if (j < 1 || j > universe_ - count_) throw NotFound("sparse select0 rank " + std::to_string(j) + " not present");
  size_t lo = 1, hi = universe_;
  while (lo < hi) {
    size_t mid = lo + (hi - lo) / 2;
    if (rank0(mid) >= j) hi = mid; else lo = mid + 1;
  }
  return lo;
}

void SparseBitVector::save(io::ByteWriter& out) const {
  out.put_u64(universe_);
  out.put_u64(count_);
  out.put_u8(static_cast<uint8_t>(low_width_));
  high_.save(out);
  low_.save(out);
}

SparseBitVector SparseBitVector::load(io::ByteReader& in) {
  SparseBitVector s;
  s.universe_ = in.get_u64();
  s.count_ = in.get_u64();
  s.low_width_ = in.get_u8();
  s.high_ = BitVector::load(in);
  s.low_ = IntVector::load(in);
  if (s.low_.size() != s.count_ || s.high_.ones() != s.count_ || s.low_width_ > 63)
    throw FormatError("sparse bitvector sections disagree");
  return s;
}

}  // namespace tkdr::succinct
