#include "tkdr/succinct/int_vector.hpp"

#include <algorithm>

#include "tkdr/errors.hpp"

namespace tkdr::succinct {

IntVector::IntVector(size_t n, int width)
    : words_((n * width + 63) / 64 + 1, 0),
      size_(n),
      width_(width),
      mask_(width == 64 ? ~uint64_t{0} : (uint64_t{1} << width) - 1) {
  if (width < 0 || width > 64) throw BuildError("int vector width must be in [0, 64]");
}

IntVector::IntVector(std::span<const uint64_t> values, int width) : IntVector(values.size(), width) {
  for (size_t i = 0; i < values.size(); ++i) set(i, values[i]);
}

IntVector IntVector::compact(std::span<const uint64_t> values) {
  uint64_t mx = 0;
  for (uint64_t v : values) mx = std::max(mx, v);
  return IntVector(values, bit_width_of(mx));
}

void IntVector::set(size_t i, uint64_t v) {
  if (width_ == 0) return;
  v &= mask_;
  size_t bit = i * width_;
  size_t w = bit >> 6;
  int off = bit & 63;
  words_[w] = (words_[w] & ~(mask_ << off)) | (v << off);
  if (off + width_ > 64) {
    int spill = off + width_ - 64;
    uint64_t hi_mask = (uint64_t{1} << spill) - 1;
    words_[w + 1] = (words_[w + 1] & ~hi_mask) | (v >> (64 - off));
  }
}

void IntVector::save(io::ByteWriter& out) const {
  out.put_u64(size_);
  out.put_u8(static_cast<uint8_t>(width_));
  size_t used = (size_ * width_ + 63) / 64;
  for (size_t w = 0; w < used; ++w) out.put_u64(words_[w]);
}

IntVector IntVector::load(io::ByteReader& in) {
  uint64_t n = in.get_u64();
  int width = in.get_u8();
  if (width > 64) throw FormatError("int vector width out of range");
  if (width > 0 && n > in.remaining() * 8 / width) throw TruncatedData("int vector payload truncated");
  IntVector out(n, width);
  size_t used = (n * width + 63) / 64;
  for (size_t w = 0; w < used; ++w) out.words_[w] = in.get_u64();
  return out;
}

}  // namespace tkdr::succinct
