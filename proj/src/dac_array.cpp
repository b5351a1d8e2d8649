#include "tkdr/succinct/dac_array.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "tkdr/errors.hpp"

namespace tkdr::succinct {

std::vector<int> DacArray::optimal_widths(std::span<const uint64_t> values) {
  int max_bits = 0;
  std::vector<uint64_t> exact(66, 0);
  for (uint64_t v : values) {
    int w = bit_width_of(v);
    max_bits = std::max(max_bits, w);
    ++exact[w];
  }
  if (max_bits == 0) return {0};
  // reach[s]: values that still have bits at or above bit s
  std::vector<uint64_t> reach(66, 0);
  for (int s = 64; s >= 0; --s) reach[s] = reach[s + 1] + exact[s + 1];
  reach[0] = values.size();

  constexpr uint64_t kInf = std::numeric_limits<uint64_t>::max();
  // best[s][l]: cheapest encoding of bits [s, max_bits) using at most l levels
  std::vector<std::vector<uint64_t>> best(max_bits + 1, std::vector<uint64_t>(kMaxLevels + 1, kInf));
  std::vector<std::vector<int>> next(max_bits + 1, std::vector<int>(kMaxLevels + 1, -1));
  for (int l = 0; l <= kMaxLevels; ++l) best[max_bits][l] = 0;
  for (int s = max_bits - 1; s >= 0; --s) {
    for (int l = 1; l <= kMaxLevels; ++l) {
      for (int e = s + 1; e <= max_bits; ++e) {
        uint64_t rest = best[e][l - 1];
        if (rest == kInf) continue;
        uint64_t cost = reach[s] * (e - s) + (e < max_bits ? reach[s] : 0) + rest;
        if (cost < best[s][l]) {
          best[s][l] = cost;
          next[s][l] = e;
        }
      }
    }
  }
  std::vector<int> widths;
  for (int s = 0, l = kMaxLevels; s < max_bits; --l) {
    int e = next[s][l];
    widths.push_back(e - s);
    s = e;
  }
  return widths;
}

DacArray::DacArray(std::span<const uint64_t> values) : count_(values.size()) {
  std::vector<int> widths = optimal_widths(values);

  // indices of values still alive at the current level
  std::vector<size_t> alive(values.size());
  for (size_t i = 0; i < alive.size(); ++i) alive[i] = i;

  int shift = 0;
  for (size_t l = 0; l < widths.size(); ++l) {
    int w = widths[l];
    bool last = l + 1 == widths.size();
    Level level;
    level.shift = shift;
    level.chunks = IntVector(alive.size(), w);
    BitBuffer more;
    std::vector<size_t> survivors;
    uint64_t mask = w == 64 ? ~uint64_t{0} : (uint64_t{1} << w) - 1;
    for (size_t k = 0; k < alive.size(); ++k) {
      uint64_t v = values[alive[k]];
      level.chunks.set(k, (v >> shift) & mask);
      if (!last) {
        bool cont = shift + w < 64 && (v >> (shift + w)) != 0;
        more.push_back(cont);
        if (cont) survivors.push_back(alive[k]);
      }
    }
    level.more = BitVector(std::move(more));
    levels_.push_back(std::move(level));
    alive = std::move(survivors);
    shift += w;
  }
}

uint64_t DacArray::operator[](size_t i) const {
  size_t k = i - 1;
  uint64_t v = 0;
  for (size_t l = 0;; ++l) {
    const Level& level = levels_[l];
    v |= level.chunks[k] << level.shift;
    if (l + 1 == levels_.size() || !level.more[k + 1]) return v;
    k = level.more.rank1_unchecked(k + 1) - 1;
  }
}

uint64_t DacArray::access(size_t i) const {
  if (i < 1 || i > count_) throw OutOfRange("dac access at " + std::to_string(i));
  return (*this)[i];
}

std::vector<int> DacArray::chunk_widths() const {
  std::vector<int> w;
  for (const auto& l : levels_) w.push_back(l.chunks.width());
  return w;
}

size_t DacArray::size_in_bytes() const {
  size_t total = sizeof(*this);
  for (const auto& l : levels_) total += l.chunks.size_in_bytes() + l.more.size_in_bytes();
  return total;
}

void DacArray::save(io::ByteWriter& out) const {
  out.put_u64(count_);
  out.put_u8(static_cast<uint8_t>(levels_.size()));
  for (const auto& l : levels_) {
    out.put_u8(static_cast<uint8_t>(l.shift));
    l.chunks.save(out);
    l.more.save(out);
  }
}

DacArray DacArray::load(io::ByteReader& in) {
  DacArray d;
  d.count_ = in.get_u64();
  size_t nlevels = in.get_u8();
  if (nlevels == 0 || nlevels > kMaxLevels) throw FormatError("dac level count out of range");
  for (size_t l = 0; l < nlevels; ++l) {
    Level level;
    level.shift = in.get_u8();
    level.chunks = IntVector::load(in);
    level.more = BitVector::load(in);
    d.levels_.push_back(std::move(level));
  }
  if (d.levels_[0].chunks.size() != d.count_) throw FormatError("dac level 0 size mismatch");
  return d;
}

}  // namespace tkdr::succinct
