#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tkdr/succinct/bit_vector.hpp"
#include "tkdr/succinct/int_vector.hpp"

namespace tkdr::succinct {

// Directly addressable codes: each value is split into chunks, level l
// holding the l-th chunk of every value that still has bits left, plus a
// continuation bit telling whether the value goes on to level l+1.
// Chunk widths are chosen per level to minimise total size.
class DacArray {
 public:
  static constexpr int kMaxLevels = 8;

  DacArray() = default;
  explicit DacArray(std::span<const uint64_t> values);

  [[nodiscard]] size_t size() const { return count_; }
  // 1-based, unchecked.
  [[nodiscard]] uint64_t operator[](size_t i) const;
  [[nodiscard]] uint64_t access(size_t i) const;

  [[nodiscard]] size_t levels() const { return levels_.size(); }
  [[nodiscard]] std::vector<int> chunk_widths() const;
  [[nodiscard]] size_t size_in_bytes() const;

  void save(io::ByteWriter& out) const;
  static DacArray load(io::ByteReader& in);

  // Widths the optimiser picks for this value distribution (exposed for tests).
  static std::vector<int> optimal_widths(std::span<const uint64_t> values);

 private:
  struct Level {
    IntVector chunks;
    BitVector more;  // empty on the last level
    int shift = 0;   // bit offset of this level's chunk inside the value
  };

  size_t count_ = 0;
  std::vector<Level> levels_;
};

}  // namespace tkdr::succinct
