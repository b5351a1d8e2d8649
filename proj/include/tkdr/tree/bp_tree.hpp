#pragma once

#include <cstddef>
#include <cstdint>

#include "tkdr/io/byte_stream.hpp"
#include "tkdr/tree/balanced_parens.hpp"

namespace tkdr::tree {

// A node is identified by the position of its open parenthesis.
struct NodeHandle {
  size_t pos = 0;
  friend bool operator==(NodeHandle, NodeHandle) = default;
  friend auto operator<=>(NodeHandle, NodeHandle) = default;
};

// Ordinal tree topology in balanced-parentheses form (depth-first order,
// open = 1). Preorder ranks are 1-based; the root has preorder 1 and depth 0.
class BpTree {
 public:
  BpTree() = default;
  explicit BpTree(succinct::BitVector parens);

  [[nodiscard]] size_t nodes() const { return bp_.size() / 2; }
  [[nodiscard]] NodeHandle root() const { return {1}; }
  [[nodiscard]] const succinct::BitVector& parens() const { return bp_.bits(); }

  [[nodiscard]] size_t preorder(NodeHandle v) const { return bp_.bits().rank1_unchecked(v.pos); }
  [[nodiscard]] NodeHandle preorderselect(size_t i) const;

  [[nodiscard]] size_t depth(NodeHandle v) const { return static_cast<size_t>(bp_.excess(v.pos) - 1); }
  [[nodiscard]] size_t close(NodeHandle v) const { return bp_.find_close(v.pos); }
  [[nodiscard]] size_t subtreesize(NodeHandle v) const { return (close(v) - v.pos + 1) / 2; }
  [[nodiscard]] bool is_leaf(NodeHandle v) const { return v.pos == bp_.size() || !bp_.bits()[v.pos + 1]; }
  // Throws OutOfRange for the root.
  [[nodiscard]] NodeHandle parent(NodeHandle v) const;
  // u is ancestor-or-self of v.
  [[nodiscard]] bool is_ancestor(NodeHandle u, NodeHandle v) const { return u.pos <= v.pos && v.pos < close(u); }
  [[nodiscard]] NodeHandle lca(NodeHandle u, NodeHandle v) const;

  [[nodiscard]] size_t size_in_bytes() const { return sizeof(*this) + bp_.size_in_bytes(); }

  void save(io::ByteWriter& out) const { bp_.bits().save(out); }
  static BpTree load(io::ByteReader& in);

 private:
  BalancedParens bp_;
};

}  // namespace tkdr::tree
