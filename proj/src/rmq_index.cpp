#include "tkdr/rmq/rmq_index.hpp"

#include <string>
#include <vector>

#include "tkdr/errors.hpp"

namespace tkdr::rmq {

template <class T>
void RmqIndex::build(std::span<const T> values) {
  if (values.empty()) throw BuildError("rmq over an empty array");
  length_ = values.size();
  // A node stays on the stack while it is a valid parent for the incoming
  // element; popping it closes its subtree.
  auto dominates = [this](T top, T x) { return mode_ == Mode::kMin ? top <= x : top >= x; };
  succinct::BitBuffer parens;
  parens.push_back(true);  // virtual root
  std::vector<size_t> stack;
  stack.reserve(64);
  for (size_t x = 0; x < values.size(); ++x) {
    while (!stack.empty() && !dominates(values[stack.back()], values[x])) {
      stack.pop_back();
      parens.push_back(false);
    }
    stack.push_back(x);
    parens.push_back(true);
  }
  parens.append(false, stack.size() + 1);
  bp_ = tree::BalancedParens(succinct::BitVector(std::move(parens)));
}

RmqIndex::RmqIndex(std::span<const int64_t> values, Mode mode) : mode_(mode) { build(values); }
RmqIndex::RmqIndex(std::span<const uint64_t> values, Mode mode) : mode_(mode) { build(values); }

size_t RmqIndex::query_unchecked(size_t i, size_t j) const {
  if (i == j) return i;
  const auto& bits = bp_.bits();
  size_t oi = bits.select1(i + 1);
  size_t oj = bits.select1(j + 1);
  size_t m = bp_.min_excess_pos(oi, oj, /*rightmost=*/true);
  // i is an ancestor of j in the heap exactly when the minimum does not
  // drop below i's own excess; otherwise m+1 opens the answer node.
  if (bp_.excess(m) == bp_.excess(oi)) return i;
  return bits.rank1_unchecked(m + 1) - 1;
}

size_t RmqIndex::query(size_t i, size_t j) const {
  if (i < 1 || i > j || j > length_)
    throw OutOfRange("rmq range [" + std::to_string(i) + ", " + std::to_string(j) + "] invalid for length " +
                     std::to_string(length_));
  return query_unchecked(i, j);
}

void RmqIndex::save(io::ByteWriter& out) const {
  out.put_u8(static_cast<uint8_t>(mode_));
  out.put_u64(length_);
  bp_.bits().save(out);
}

RmqIndex RmqIndex::load(io::ByteReader& in) {
  RmqIndex r;
  uint8_t mode = in.get_u8();
  if (mode > 1) throw FormatError("unknown rmq mode tag");
  r.mode_ = static_cast<Mode>(mode);
  r.length_ = in.get_u64();
  auto bits = succinct::BitVector::load(in);
  if (bits.size() != 2 * (r.length_ + 1) || bits.ones() != r.length_ + 1)
    throw FormatError("rmq payload does not match its length");
  r.bp_ = tree::BalancedParens(std::move(bits));
  return r;
}

}  // namespace tkdr::rmq
