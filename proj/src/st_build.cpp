#include "tkdr/stbuild/st_build.hpp"

#include <algorithm>

#include <omp.h>

#include "tkdr/errors.hpp"

namespace tkdr::stbuild {

TopologyBundle topology_from_lcp(std::span<const uint32_t> lcp) {
  const size_t n = lcp.size();
  if (n == 0) throw BuildError("cannot build a suffix tree over an empty text");

  // opens_before[r]: internal nodes whose leftmost leaf is rank r
  // closes_after[r]: internal nodes whose rightmost leaf is rank r
  std::vector<uint32_t> opens_before(n + 1, 0), closes_after(n + 1, 0);
  struct Interval {
    uint32_t depth;
    size_t lb;
  };
  std::vector<Interval> stack{{0, 1}};
  opens_before[1] = 1;
  bool root_split = false;
  for (size_t r = 2; r <= n; ++r) {
    uint32_t l = lcp[r - 1];
    if (l == 0) root_split = true;
    size_t lb = r - 1;
    while (stack.back().depth > l) {
      lb = stack.back().lb;
      stack.pop_back();
      ++closes_after[r - 1];
    }
    if (stack.back().depth < l) {
      stack.push_back({l, lb});
      ++opens_before[lb];
    }
  }
  closes_after[n] += static_cast<uint32_t>(stack.size());
  // Without a depth-0 boundary the root would have a single child spanning
  // every leaf; that child is the root.
  if (!root_split) {
    --opens_before[1];
    --closes_after[n];
  }

  succinct::BitBuffer parens, leaves;
  for (size_t r = 1; r <= n; ++r) {
    parens.append(true, opens_before[r]);
    leaves.append(false, opens_before[r]);
    parens.push_back(true);
    parens.push_back(false);
    leaves.push_back(true);
    parens.append(false, closes_after[r]);
  }
  return {tree::BpTree(succinct::BitVector(std::move(parens))), succinct::BitVector(std::move(leaves))};
}

namespace {

struct DocLeaves {
  std::vector<size_t> start;    // start[i] .. start[i+1] are the ranks of document i+1
  std::vector<uint32_t> ranks;  // ascending within each document
};

DocLeaves group_by_doc(std::span<const uint32_t> da) {
  uint32_t d = 0;
  for (uint32_t x : da) d = std::max(d, x);
  DocLeaves g;
  g.start.assign(d + 1, 0);
  for (uint32_t x : da) ++g.start[x];
  for (uint32_t i = 1; i <= d; ++i) g.start[i] += g.start[i - 1];
  g.ranks.resize(da.size());
  std::vector<size_t> fill(g.start.begin(), g.start.end() - 1);
  for (size_t r = 0; r < da.size(); ++r) g.ranks[fill[da[r] - 1]++] = static_cast<uint32_t>(r + 1);
  return g;
}

void mark_one_document(const TopologyBundle& topo, std::span<const uint32_t> ranks, uint32_t doc,
                       std::vector<MarkedNode>& out) {
  if (ranks.size() < 2) return;
  const auto& t = topo.tree;
  std::vector<uint32_t> nodes;
  nodes.reserve(ranks.size() - 1);
  tree::NodeHandle prev = topo.leaf_of_rank(ranks[0]);
  for (size_t j = 1; j < ranks.size(); ++j) {
    tree::NodeHandle cur = topo.leaf_of_rank(ranks[j]);
    nodes.push_back(static_cast<uint32_t>(t.preorder(t.lca(prev, cur))));
    prev = cur;
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  for (uint32_t p : nodes) {
    size_t size = t.subtreesize(t.preorderselect(p));
    size_t lo = topo.leaves.rank1_unchecked(p - 1) + 1;
    size_t hi = topo.leaves.rank1_unchecked(p + size - 1);
    auto first = std::lower_bound(ranks.begin(), ranks.end(), lo);
    auto last = std::upper_bound(first, ranks.end(), hi);
    out.push_back({p, doc, static_cast<uint32_t>(last - first), kRho});
  }
}

void link_one_document(std::span<MarkedNode> marks, const tree::BpTree& t) {
  struct Open {
    size_t last_preorder;
    int32_t depth;
  };
  std::vector<Open> stack;
  for (auto& m : marks) {
    tree::NodeHandle v = t.preorderselect(m.node);
    while (!stack.empty() && stack.back().last_preorder < m.node) stack.pop_back();
    m.target_depth = stack.empty() ? kRho : stack.back().depth;
    stack.push_back({m.node + t.subtreesize(v) - 1, static_cast<int32_t>(t.depth(v))});
  }
}

// [begin, end) slices of marks sharing a document
std::vector<std::pair<size_t, size_t>> doc_slices(std::span<const MarkedNode> marks) {
  std::vector<std::pair<size_t, size_t>> slices;
  for (size_t i = 0; i < marks.size();) {
    size_t j = i;
    while (j < marks.size() && marks[j].doc == marks[i].doc) ++j;
    slices.emplace_back(i, j);
    i = j;
  }
  return slices;
}

}  // namespace

std::vector<MarkedNode> mark_documents(const TopologyBundle& topo, std::span<const uint32_t> doc_array) {
  DocLeaves g = group_by_doc(doc_array);
  std::vector<MarkedNode> out;
  for (size_t i = 0; i + 1 < g.start.size(); ++i) {
    std::span<const uint32_t> ranks(g.ranks.data() + g.start[i], g.start[i + 1] - g.start[i]);
    mark_one_document(topo, ranks, static_cast<uint32_t>(i + 1), out);
  }
  return out;
}

std::vector<MarkedNode> mark_documents_parallel(const TopologyBundle& topo, std::span<const uint32_t> doc_array) {
  DocLeaves g = group_by_doc(doc_array);
  const int64_t docs = static_cast<int64_t>(g.start.size()) - 1;
  std::vector<std::vector<MarkedNode>> per_doc(std::max<int64_t>(docs, 0));
#pragma omp parallel for schedule(dynamic, 16)
  for (int64_t i = 0; i < docs; ++i) {
    std::span<const uint32_t> ranks(g.ranks.data() + g.start[i], g.start[i + 1] - g.start[i]);
    mark_one_document(topo, ranks, static_cast<uint32_t>(i + 1), per_doc[i]);
  }
  size_t total = 0;
  for (auto& v : per_doc) total += v.size();
  std::vector<MarkedNode> out;
  out.reserve(total);
  for (auto& v : per_doc) out.insert(out.end(), v.begin(), v.end());
  return out;
}

void compute_links(std::span<MarkedNode> marks, const tree::BpTree& tree) {
  for (auto [b, e] : doc_slices(marks)) link_one_document(marks.subspan(b, e - b), tree);
}

void compute_links_parallel(std::span<MarkedNode> marks, const tree::BpTree& tree) {
  auto slices = doc_slices(marks);
  const int64_t count = static_cast<int64_t>(slices.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (int64_t s = 0; s < count; ++s) {
    auto [b, e] = slices[s];
    link_one_document(marks.subspan(b, e - b), tree);
  }
}

GridPointSet emit_grid(const TopologyBundle& topo, std::span<const MarkedNode> marks) {
  std::vector<MarkedNode> stored;
  stored.reserve(marks.size());
  for (const auto& m : marks)
    if (m.target_depth != kRho) stored.push_back(m);
  std::sort(stored.begin(), stored.end(),
            [](const MarkedNode& a, const MarkedNode& b) { return a.node != b.node ? a.node < b.node : a.doc < b.doc; });

  GridPointSet g;
  g.y.reserve(stored.size());
  g.doc.reserve(stored.size());
  g.weight.reserve(stored.size());
  succinct::BitBuffer b;
  size_t k = 0;
  const size_t t = topo.leaves.size();
  for (size_t p = 1; p <= t; ++p) {
    if (topo.leaves[p]) continue;
    b.push_back(true);
    for (; k < stored.size() && stored[k].node == p; ++k) {
      b.push_back(false);
      g.y.push_back(static_cast<uint32_t>(stored[k].target_depth));
      g.doc.push_back(stored[k].doc);
      g.weight.push_back(stored[k].weight);
    }
  }
  if (k != stored.size()) throw BuildError("marks reference nodes that are not internal");
  g.node_map = succinct::BitVector(std::move(b));
  return g;
}

}  // namespace tkdr::stbuild
