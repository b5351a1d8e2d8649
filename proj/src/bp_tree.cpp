#include "tkdr/tree/bp_tree.hpp"

#include <string>
#include <utility>

#include "tkdr/errors.hpp"

namespace tkdr::tree {

BpTree::BpTree(succinct::BitVector parens) : bp_(std::move(parens)) {
  const auto& bits = bp_.bits();
  if (bits.size() % 2 != 0 || bits.ones() * 2 != bits.size())
    throw BuildError("parentheses sequence is not balanced");
  if (bits.size() > 0 && (bp_.find_close(1) != bits.size()))
    throw BuildError("parentheses sequence is not a single tree");
}

NodeHandle BpTree::preorderselect(size_t i) const {
  if (i < 1 || i > nodes()) throw OutOfRange("preorder rank " + std::to_string(i) + " out of range");
  return {bp_.bits().select1(i)};
}

NodeHandle BpTree::parent(NodeHandle v) const {
  size_t p = bp_.enclose(v.pos);
  if (p == BalancedParens::npos) throw OutOfRange("root has no parent");
  return {p};
}

NodeHandle BpTree::lca(NodeHandle u, NodeHandle v) const {
  if (u.pos > v.pos) std::swap(u, v);
  if (u == v || v.pos < close(u)) return u;
  // The rightmost excess minimum in [u, v] sits just before the open of
  // the lca's child that contains v.
  size_t m = bp_.min_excess_pos(u.pos, v.pos, /*rightmost=*/true);
  return parent({m + 1});
}

BpTree BpTree::load(io::ByteReader& in) {
  try {
    return BpTree(succinct::BitVector::load(in));
  } catch (const BuildError& e) {
    throw FormatError(e.what());
  }
}

}  // namespace tkdr::tree
