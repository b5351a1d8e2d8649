#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "tkdr/io/byte_stream.hpp"
#include "tkdr/tree/balanced_parens.hpp"

namespace tkdr::rmq {

enum class Mode : uint8_t { kMin = 0, kMax = 1 };

// Range minimum/maximum position index that never touches the source
// array after construction. The array is encoded as the parentheses of
// its 2d-min-heap (2d-max-heap in max mode): node x's parent is the
// nearest j < x with A[j] <= A[x] (>= for max), under a virtual root.
// Ties resolve to the leftmost position.
class RmqIndex {
 public:
  RmqIndex() = default;
  RmqIndex(std::span<const int64_t> values, Mode mode);
  RmqIndex(std::span<const uint64_t> values, Mode mode);

  [[nodiscard]] size_t size() const { return length_; }
  [[nodiscard]] Mode mode() const { return mode_; }

  // Position in [i, j] of the extreme value, 1 <= i <= j <= size.
  [[nodiscard]] size_t query(size_t i, size_t j) const;
  // Same, without argument validation.
  [[nodiscard]] size_t query_unchecked(size_t i, size_t j) const;

  [[nodiscard]] size_t size_in_bytes() const { return sizeof(*this) + bp_.size_in_bytes(); }

  void save(io::ByteWriter& out) const;
  static RmqIndex load(io::ByteReader& in);

 private:
  template <class T>
  void build(std::span<const T> values);

  size_t length_ = 0;
  Mode mode_ = Mode::kMin;
  tree::BalancedParens bp_;
};

}  // namespace tkdr::rmq
