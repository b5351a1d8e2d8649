#include "tkdr/succinct/bit_vector.hpp"

#include <algorithm>
#include <string>

#include "tkdr/errors.hpp"

namespace tkdr::succinct {

BitBuffer::BitBuffer(size_t n, bool value) : words_((n + 63) / 64, value ? ~uint64_t{0} : 0), size_(n) {
  if (value && (n & 63)) words_.back() &= (uint64_t{1} << (n & 63)) - 1;
}

void BitBuffer::append(bool bit, size_t count) {
  for (size_t i = 0; i < count; ++i) push_back(bit);
}

BitVector::BitVector(BitBuffer bits) : size_(bits.size()) {
  words_ = std::move(bits).take_words();
  build_directory();
}

BitVector::BitVector(std::vector<uint64_t> words, size_t size) : words_(std::move(words)), size_(size) {
  if (words_.size() != (size + 63) / 64) throw BuildError("bitvector word count does not match length");
  if (size & 63) words_.back() &= (uint64_t{1} << (size & 63)) - 1;
  build_directory();
}

BitVector::BitVector(std::initializer_list<int> bits) {
  BitBuffer buf;
  for (int b : bits) buf.push_back(b != 0);
  size_ = buf.size();
  words_ = std::move(buf).take_words();
  build_directory();
}

void BitVector::build_directory() {
  size_t nsuper = size_ / kSuperBits + 1;
  size_t nblock = size_ / kBlockBits + 1;
  super_.assign(nsuper, 0);
  block_.assign(nblock, 0);
  sample1_.clear();
  sample0_.clear();

  size_t total = 0;
  size_t words_per_block = kBlockBits / 64;
  for (size_t b = 0; b < nblock; ++b) {
    size_t sb = b * kBlockBits / kSuperBits;
    if (b % (kSuperBits / kBlockBits) == 0) super_[sb] = total;
    block_[b] = static_cast<uint16_t>(total - super_[sb]);
    for (size_t w = b * words_per_block; w < std::min(words_.size(), (b + 1) * words_per_block); ++w)
      total += std::popcount(words_[w]);
  }
  ones_ = total;

  // sample[k] = superblock holding the (k*S+1)-th bit of the given kind
  size_t seen1 = 0, seen0 = 0;
  for (size_t sb = 0; sb < nsuper; ++sb) {
    size_t begin = sb * kSuperBits;
    if (begin >= size_ && sb > 0) break;
    size_t end = std::min(size_, begin + kSuperBits);
    size_t ones_here = (sb + 1 < nsuper ? super_[sb + 1] : ones_) - super_[sb];
    size_t zeros_here = (end - begin) - ones_here;
    while (sample1_.size() * kSelectSample < seen1 + ones_here) sample1_.push_back(static_cast<uint32_t>(sb));
    while (sample0_.size() * kSelectSample < seen0 + zeros_here) sample0_.push_back(static_cast<uint32_t>(sb));
    seen1 += ones_here;
    seen0 += zeros_here;
  }
}

bool BitVector::access(size_t pos) const {
  if (pos < 1 || pos > size_) throw OutOfRange("bitvector access at " + std::to_string(pos));
  return (*this)[pos];
}

size_t BitVector::rank1(size_t i) const {
  if (i > size_) throw OutOfRange("rank position " + std::to_string(i) + " exceeds length " + std::to_string(size_));
  return rank1_unchecked(i);
}

template <bool Bit>
size_t BitVector::select_impl(size_t j) const {
  size_t total = Bit ? ones_ : size_ - ones_;
  if (j < 1 || j > total) throw NotFound("select rank " + std::to_string(j) + " not present");

  const auto& samples = Bit ? sample1_ : sample0_;
  auto count_before_super = [&](size_t sb) -> size_t {
    return Bit ? super_[sb] : sb * kSuperBits - super_[sb];
  };

  size_t k = (j - 1) / kSelectSample;
  size_t lo = samples[k];
  size_t hi = (k + 1 < samples.size()) ? samples[k + 1] : super_.size() - 1;
  // last superblock in [lo, hi] with count_before < j
  while (lo < hi) {
    size_t mid = lo + (hi - lo + 1) / 2;
    if (count_before_super(mid) < j) lo = mid; else hi = mid - 1;
  }
  size_t sb = lo;
  size_t remaining = j - count_before_super(sb);

  constexpr size_t blocks_per_super = kSuperBits / kBlockBits;
  size_t b = sb * blocks_per_super;
  size_t b_end = std::min(block_.size(), b + blocks_per_super);
  auto count_in_super = [&](size_t blk) -> size_t {
    size_t ones_rel = block_[blk];
    return Bit ? ones_rel : (blk - sb * blocks_per_super) * kBlockBits - ones_rel;
  };
  while (b + 1 < b_end && count_in_super(b + 1) < remaining) ++b;
  remaining -= count_in_super(b);

  for (size_t w = b * (kBlockBits / 64);; ++w) {
    uint64_t word = Bit ? words_[w] : ~words_[w];
    size_t c = std::popcount(word);
    if (remaining <= c) return w * 64 + select_in_word(word, static_cast<int>(remaining));
    remaining -= c;
  }
}

size_t BitVector::select1(size_t j) const { return select_impl<true>(j); }
size_t BitVector::select0(size_t j) const { return select_impl<false>(j); }

size_t BitVector::size_in_bytes() const {
  return sizeof(*this) + words_.size() * 8 + super_.size() * 8 + block_.size() * 2 +
         (sample1_.size() + sample0_.size()) * 4;
}

void BitVector::save(io::ByteWriter& out) const {
  out.put_u64(size_);
  for (uint64_t w : words_) out.put_u64(w);
}

BitVector BitVector::load(io::ByteReader& in) {
  uint64_t size = in.get_u64();
  size_t nwords = (size + 63) / 64;
  if (nwords > in.remaining() / 8) throw TruncatedData("bitvector payload truncated");
  std::vector<uint64_t> words(nwords);
  for (auto& w : words) w = in.get_u64();
  return BitVector(std::move(words), size);
}

}  // namespace tkdr::succinct
