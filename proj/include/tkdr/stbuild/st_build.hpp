#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tkdr/succinct/bit_vector.hpp"
#include "tkdr/tree/bp_tree.hpp"

namespace tkdr::stbuild {

// Generalized suffix tree topology plus the leaf bitmap L over preorder
// (1 = leaf). Leaves appear in suffix-array order, so the r-th leaf in
// preorder is the suffix of rank r.
struct TopologyBundle {
  tree::BpTree tree;
  succinct::BitVector leaves;

  [[nodiscard]] tree::NodeHandle leaf_of_rank(size_t r) const {
    return tree.preorderselect(leaves.select1(r));
  }
  [[nodiscard]] size_t internal_nodes() const { return leaves.zeros(); }
};

TopologyBundle topology_from_lcp(std::span<const uint32_t> lcp);

inline constexpr int32_t kRho = -1;

// Node `node` (a preorder rank) is the image of an internal node of
// document `doc`'s own suffix tree; `weight` is the number of that
// document's suffixes below it. target_depth is the tree depth of the
// nearest strict ancestor marked for the same document, or kRho.
struct MarkedNode {
  uint32_t node = 0;
  uint32_t doc = 0;
  uint32_t weight = 0;
  int32_t target_depth = kRho;

  friend bool operator==(const MarkedNode&, const MarkedNode&) = default;
};

// Marks, for every document, the lca of each pair of its consecutive
// leaves. Output is grouped by document (ascending) and sorted by preorder
// within a document, one entry per (node, doc).
std::vector<MarkedNode> mark_documents(const TopologyBundle& topo, std::span<const uint32_t> doc_array);
// Same work split across documents with OpenMP; output is identical.
std::vector<MarkedNode> mark_documents_parallel(const TopologyBundle& topo, std::span<const uint32_t> doc_array);

// Fills target_depth; marks must be in mark_documents order.
void compute_links(std::span<MarkedNode> marks, const tree::BpTree& tree);
void compute_links_parallel(std::span<MarkedNode> marks, const tree::BpTree& tree);

// One grid point per stored link, in preorder of the origin node and
// ascending document id within a node. B interleaves a 1 per internal
// node with a 0 per point of that node.
struct GridPointSet {
  std::vector<uint32_t> y;
  std::vector<uint32_t> doc;
  std::vector<uint64_t> weight;
  succinct::BitVector node_map;

  [[nodiscard]] size_t width() const { return y.size(); }
};

// Links targeting the dummy root are dropped; every other mark has
// weight >= 2, which is the frequency threshold.
GridPointSet emit_grid(const TopologyBundle& topo, std::span<const MarkedNode> marks);

}  // namespace tkdr::stbuild
