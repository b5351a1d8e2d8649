#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "tkdr/succinct/bit_vector.hpp"

namespace tkdr::tree {

// Excess machinery over a parentheses bitvector (1 = open, 0 = close).
// excess(p) = #opens - #closes in [1..p], excess(0) = 0. Backed by a
// per-block minimum table and a min-tree over blocks, so searches and
// range minima touch O(block + log blocks) data.
//
// The sequence need not be balanced; BpTree and RmqIndex both build on it.
class BalancedParens {
 public:
  static constexpr size_t npos = static_cast<size_t>(-1);

  BalancedParens() = default;
  explicit BalancedParens(succinct::BitVector bits);

  [[nodiscard]] const succinct::BitVector& bits() const { return bits_; }
  [[nodiscard]] size_t size() const { return bits_.size(); }

  [[nodiscard]] int64_t excess(size_t p) const {
    return 2 * static_cast<int64_t>(bits_.rank1_unchecked(p)) - static_cast<int64_t>(p);
  }

  // Smallest q > p with excess(q) <= target, or npos.
  [[nodiscard]] size_t fwd_search(size_t p, int64_t target) const;
  // Largest q < p (q >= 0) with excess(q) <= target, or npos.
  [[nodiscard]] size_t bwd_search(size_t p, int64_t target) const;
  // Position of the minimum excess in [a, b], 1 <= a <= b <= size.
  [[nodiscard]] size_t min_excess_pos(size_t a, size_t b, bool rightmost) const;

  [[nodiscard]] size_t find_close(size_t open) const { return fwd_search(open, excess(open) - 1); }
  // Open paren of the node enclosing the node opened at p; npos at top level.
  [[nodiscard]] size_t enclose(size_t open) const {
    size_t q = bwd_search(open, excess(open) - 2);
    return q == npos ? npos : q + 1;
  }

  [[nodiscard]] size_t size_in_bytes() const;

 private:
  static constexpr size_t kBlockBits = 512;

  struct ScanResult {
    size_t pos;
    int64_t value;
  };
  ScanResult scan_min(size_t a, size_t b, bool rightmost) const;
  size_t scan_fwd(size_t a, size_t b, int64_t cur, int64_t target) const;
  size_t scan_bwd(size_t a, size_t b, int64_t cur_at_b, int64_t target) const;

  // block range queries on the min-tree; block indices are 0-based
  int64_t tree_min(size_t lo, size_t hi) const;
  // first / last block in [lo, hi] whose minimum is <= target, or npos
  size_t tree_first_leq(size_t lo, size_t hi, int64_t target) const;
  size_t tree_last_leq(size_t lo, size_t hi, int64_t target) const;
  size_t first_leq_rec(size_t node, size_t nlo, size_t nhi, size_t lo, size_t hi, int64_t target) const;
  size_t last_leq_rec(size_t node, size_t nlo, size_t nhi, size_t lo, size_t hi, int64_t target) const;

  size_t block_begin(size_t blk) const { return blk * kBlockBits + 1; }
  size_t block_end(size_t blk) const { return std::min(size(), (blk + 1) * kBlockBits); }

  succinct::BitVector bits_;
  size_t num_blocks_ = 0;
  size_t leaves_ = 0;             // power of two >= num_blocks_
  std::vector<int32_t> min_tree_;  // heap layout, node 1 = root; leaves at [leaves_, 2*leaves_)
};

}  // namespace tkdr::tree
