#include "tkdr/tree/balanced_parens.hpp"

#include <array>
#include <limits>

namespace tkdr::tree {

namespace {

// Per-byte excess summaries, bits read LSB first.
struct ByteTables {
  std::array<int8_t, 256> total{};
  std::array<int8_t, 256> min_prefix{};  // min over prefixes of length 1..8
  std::array<uint8_t, 256> first_min{};  // 1..8
  std::array<uint8_t, 256> last_min{};

  ByteTables() {
    for (int x = 0; x < 256; ++x) {
      int cur = 0, mn = 100, first = 0, last = 0;
      for (int k = 0; k < 8; ++k) {
        cur += ((x >> k) & 1) ? 1 : -1;
        if (cur < mn) {
          mn = cur;
          first = last = k + 1;
        } else if (cur == mn) {
          last = k + 1;
        }
      }
      total[x] = static_cast<int8_t>(cur);
      min_prefix[x] = static_cast<int8_t>(mn);
      first_min[x] = static_cast<uint8_t>(first);
      last_min[x] = static_cast<uint8_t>(last);
    }
  }
};

const ByteTables kTables;

constexpr int32_t kNoMin = std::numeric_limits<int32_t>::max();

}  // namespace

BalancedParens::BalancedParens(succinct::BitVector bits) : bits_(std::move(bits)) {
  num_blocks_ = (size() + kBlockBits - 1) / kBlockBits;
  leaves_ = 1;
  while (leaves_ < num_blocks_) leaves_ <<= 1;
  min_tree_.assign(2 * leaves_, kNoMin);
  int64_t cur = 0;
  for (size_t blk = 0; blk < num_blocks_; ++blk) {
    int64_t mn = kNoMin;
    for (size_t p = block_begin(blk); p <= block_end(blk); ++p) {
      cur += bits_[p] ? 1 : -1;
      mn = std::min(mn, cur);
    }
    min_tree_[leaves_ + blk] = static_cast<int32_t>(mn);
  }
  for (size_t node = leaves_ - 1; node >= 1; --node)
    min_tree_[node] = std::min(min_tree_[2 * node], min_tree_[2 * node + 1]);
}

BalancedParens::ScanResult BalancedParens::scan_min(size_t a, size_t b, bool rightmost) const {
  auto words = bits_.words();
  int64_t cur = excess(a - 1);
  ScanResult best{npos, std::numeric_limits<int64_t>::max()};
  size_t p = a;
  while (p <= b) {
    if (((p - 1) & 7) == 0 && p + 7 <= b) {
      unsigned byte = (words[(p - 1) >> 6] >> ((p - 1) & 63)) & 0xFF;
      int64_t cand = cur + kTables.min_prefix[byte];
      if (cand < best.value || (rightmost && cand == best.value)) {
        best.value = cand;
        best.pos = p - 1 + (rightmost ? kTables.last_min[byte] : kTables.first_min[byte]);
      }
      cur += kTables.total[byte];
      p += 8;
    } else {
      cur += bits_[p] ? 1 : -1;
      if (cur < best.value || (rightmost && cur == best.value)) best = {p, cur};
      ++p;
    }
  }
  return best;
}

size_t BalancedParens::scan_fwd(size_t a, size_t b, int64_t cur, int64_t target) const {
  auto words = bits_.words();
  size_t p = a;
  while (p <= b) {
    if (((p - 1) & 7) == 0 && p + 7 <= b) {
      unsigned byte = (words[(p - 1) >> 6] >> ((p - 1) & 63)) & 0xFF;
      if (cur + kTables.min_prefix[byte] > target) {
        cur += kTables.total[byte];
        p += 8;
        continue;
      }
    }
    cur += bits_[p] ? 1 : -1;
    if (cur <= target) return p;
    ++p;
  }
  return npos;
}

size_t BalancedParens::scan_bwd(size_t a, size_t b, int64_t cur, int64_t target) const {
  auto words = bits_.words();
  size_t p = b;
  while (p >= a && p != 0) {
    if ((p & 7) == 0 && p >= a + 7) {
      // byte covers [p-7, p]; excess there is base + prefix
      unsigned byte = (words[(p - 8) >> 6] >> ((p - 8) & 63)) & 0xFF;
      int64_t base = cur - kTables.total[byte];
      if (base + kTables.min_prefix[byte] > target) {
        cur = base;
        p -= 8;
        continue;
      }
    }
    if (cur <= target) return p;
    cur -= bits_[p] ? 1 : -1;
    --p;
  }
  return npos;
}

int64_t BalancedParens::tree_min(size_t lo, size_t hi) const {
  int64_t mn = kNoMin;
  for (size_t l = lo + leaves_, r = hi + leaves_ + 1; l < r; l >>= 1, r >>= 1) {
    if (l & 1) mn = std::min<int64_t>(mn, min_tree_[l++]);
    if (r & 1) mn = std::min<int64_t>(mn, min_tree_[--r]);
  }
  return mn;
}

size_t BalancedParens::first_leq_rec(size_t node, size_t nlo, size_t nhi, size_t lo, size_t hi,
                                     int64_t target) const {
  if (nhi < lo || nlo > hi || min_tree_[node] > target) return npos;
  if (nlo == nhi) return nlo;
  size_t mid = (nlo + nhi) / 2;
  size_t r = first_leq_rec(2 * node, nlo, mid, lo, hi, target);
  return r != npos ? r : first_leq_rec(2 * node + 1, mid + 1, nhi, lo, hi, target);
}

size_t BalancedParens::last_leq_rec(size_t node, size_t nlo, size_t nhi, size_t lo, size_t hi,
                                    int64_t target) const {
  if (nhi < lo || nlo > hi || min_tree_[node] > target) return npos;
  if (nlo == nhi) return nlo;
  size_t mid = (nlo + nhi) / 2;
  size_t r = last_leq_rec(2 * node + 1, mid + 1, nhi, lo, hi, target);
  return r != npos ? r : last_leq_rec(2 * node, nlo, mid, lo, hi, target);
}

size_t BalancedParens::tree_first_leq(size_t lo, size_t hi, int64_t target) const {
  if (lo > hi || num_blocks_ == 0) return npos;
  return first_leq_rec(1, 0, leaves_ - 1, lo, hi, target);
}

size_t BalancedParens::tree_last_leq(size_t lo, size_t hi, int64_t target) const {
  if (lo > hi || num_blocks_ == 0) return npos;
  return last_leq_rec(1, 0, leaves_ - 1, lo, hi, target);
}

size_t BalancedParens::fwd_search(size_t p, int64_t target) const {
  if (p >= size()) return npos;
  size_t blk = p / kBlockBits;  // block holding position p+1
  size_t r = scan_fwd(p + 1, block_end(blk), excess(p), target);
  if (r != npos) return r;
  size_t b2 = tree_first_leq(blk + 1, num_blocks_ - 1, target);
  if (b2 == npos) return npos;
  return scan_fwd(block_begin(b2), block_end(b2), excess(block_begin(b2) - 1), target);
}

size_t BalancedParens::bwd_search(size_t p, int64_t target) const {
  if (p >= 2) {
    size_t blk = (p - 2) / kBlockBits;  // block holding position p-1
    size_t r = scan_bwd(block_begin(blk), p - 1, excess(p - 1), target);
    if (r != npos) return r;
    if (blk > 0) {
      size_t b2 = tree_last_leq(0, blk - 1, target);
      if (b2 != npos) return scan_bwd(block_begin(b2), block_end(b2), excess(block_end(b2)), target);
    }
  }
  if (p >= 1 && target >= 0) return 0;
  return npos;
}

size_t BalancedParens::min_excess_pos(size_t a, size_t b, bool rightmost) const {
  size_t ba = (a - 1) / kBlockBits, bb = (b - 1) / kBlockBits;
  if (ba == bb) return scan_min(a, b, rightmost).pos;

  ScanResult best = scan_min(a, block_end(ba), rightmost);
  auto consider = [&](const ScanResult& c) {
    if (c.value < best.value || (rightmost && c.value == best.value)) best = c;
  };
  if (ba + 1 < bb) {
    int64_t mv = tree_min(ba + 1, bb - 1);
    if (mv < best.value || (rightmost && mv == best.value)) {
      size_t blk = rightmost ? tree_last_leq(ba + 1, bb - 1, mv) : tree_first_leq(ba + 1, bb - 1, mv);
      consider(scan_min(block_begin(blk), block_end(blk), rightmost));
    }
  }
  consider(scan_min(block_begin(bb), b, rightmost));
  return best.pos;
}

size_t BalancedParens::size_in_bytes() const {
  return sizeof(*this) + bits_.size_in_bytes() + min_tree_.size() * sizeof(int32_t);
}

}  // namespace tkdr::tree
