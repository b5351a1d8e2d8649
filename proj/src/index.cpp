#include "tkdr/index.hpp"

#include <algorithm>
#include <exception>
#include <unordered_set>

#include "tkdr/errors.hpp"

namespace tkdr {

Index Index::build(std::span<const std::string> docs, const BuildOptions& options) {
  if (docs.empty()) throw BuildError("cannot index an empty collection");
  Index ix;
  for (const auto& d : docs) ix.collection_bytes_ += d.size();

  text::Symbols sym = text::remap(docs);
  std::vector<uint32_t> sa = text::build_suffix_array(sym.seq);
  {
    std::vector<uint32_t> lcp = text::build_lcp(sym.seq, sa);
    ix.topo_ = stbuild::topology_from_lcp(lcp);
  }
  const uint32_t d = sym.doc_count;
  ix.text_ = text::TextIndex(std::move(sym), std::move(sa), options.keep_text);
  std::vector<uint32_t> da = ix.text_.doc_array();

  std::vector<stbuild::MarkedNode> marks;
  if (options.parallel) {
    marks = stbuild::mark_documents_parallel(ix.topo_, da);
    stbuild::compute_links_parallel(marks, ix.topo_.tree);
  } else {
    marks = stbuild::mark_documents(ix.topo_, da);
    stbuild::compute_links(marks, ix.topo_.tree);
  }
  stbuild::GridPointSet points = stbuild::emit_grid(ix.topo_, marks);
  marks = {};
  for (auto& w : points.weight) {
    int64_t skewed = static_cast<int64_t>(w) + options.weight_skew;
    w = static_cast<uint64_t>(std::max<int64_t>(0, skewed));
  }
  ix.node_map_ = std::move(points.node_map);
  ix.grid_ = grid::WaveletGrid(points, d);
  points = {};
  ix.clist_ = doclist::CArray(da);
  return ix;
}

std::optional<text::SuffixRange> Index::range(std::string_view pattern) const {
  if (pattern.empty()) throw InvalidArgument("the pattern must not be empty");
  if (!has_text()) throw DataError("index was saved without its text; rebuild it to run queries");
  return text_.count(pattern);
}

Locus Index::locus_and_range(size_t sp, size_t ep) const {
  if (sp < 1 || sp > ep || ep > size()) throw OutOfRange("suffix range is outside the index");
  const auto& t = topo_.tree;
  Locus loc;
  loc.node = t.lca(topo_.leaf_of_rank(sp), topo_.leaf_of_rank(ep));
  if (sp == ep) return loc;
  const size_t p1 = t.preorder(loc.node), p2 = p1 + t.subtreesize(loc.node);
  const size_t l1 = topo_.leaves.rank1(p1), l2 = topo_.leaves.rank1(p2 - 1);
  const size_t j1 = p1 - l1, j2 = p2 - l2;
  loc.x1 = node_map_.select1(j1) - j1 + 1;
  loc.x2 = (j2 > node_map_.ones() ? node_map_.size() + 1 : node_map_.select1(j2)) - j2;
  loc.ymax = static_cast<int64_t>(t.depth(loc.node)) - 1;
  return loc;
}

std::vector<QueryHit> Index::finish(QueryTrace& trace) const {
  std::vector<QueryHit> out(trace.grid);
  out.insert(out.end(), trace.completion.begin(), trace.completion.end());
  std::sort(out.begin(), out.end(),
            [](const QueryHit& a, const QueryHit& b) { return a.score != b.score ? a.score > b.score : a.doc < b.doc; });
  return out;
}

std::vector<QueryHit> Index::topk(std::string_view pattern, size_t k, QueryTrace* trace) const {
  auto r = range(pattern);
  QueryTrace local;
  QueryTrace& tr = trace ? *trace : local;
  tr = {};
  if (k == 0 || !r) return {};
  Locus loc = locus_and_range(r->sp, r->ep);
  if (!loc.empty())
    for (const auto& h : grid_.topk(loc.x1, loc.x2, static_cast<uint64_t>(loc.ymax), k))
      tr.grid.push_back({h.doc, h.weight});
  if (tr.grid.size() < k) {
    std::unordered_set<uint32_t> reported;
    for (const auto& h : tr.grid) reported.insert(h.doc);
    auto doc_at = [this](size_t i) { return text_.doc_at(i); };
    for (uint32_t doc : clist_.list_distinct(doc_at, r->sp, r->ep, k - tr.grid.size(), reported))
      tr.completion.push_back({doc, 1});
  }
  return finish(tr);
}

std::vector<QueryHit> Index::mine(std::string_view pattern, uint64_t f, QueryTrace* trace) const {
  if (f == 0) throw InvalidArgument("the mining threshold must be at least 1");
  auto r = range(pattern);
  QueryTrace local;
  QueryTrace& tr = trace ? *trace : local;
  tr = {};
  if (!r) return {};
  Locus loc = locus_and_range(r->sp, r->ep);
  if (!loc.empty())
    for (const auto& h : grid_.mine(loc.x1, loc.x2, static_cast<uint64_t>(loc.ymax), std::max<uint64_t>(f, 2)))
      tr.grid.push_back({h.doc, h.weight});
  if (f == 1) {
    std::unordered_set<uint32_t> reported;
    for (const auto& h : tr.grid) reported.insert(h.doc);
    auto doc_at = [this](size_t i) { return text_.doc_at(i); };
    for (uint32_t doc : clist_.list_distinct(doc_at, r->sp, r->ep, doc_count(), reported))
      tr.completion.push_back({doc, 1});
  }
  return finish(tr);
}

std::vector<std::vector<QueryHit>> Index::topk_batch(std::span<const std::string> patterns, size_t k) const {
  std::vector<std::vector<QueryHit>> out;
  out.reserve(patterns.size());
  for (const auto& p : patterns) out.push_back(topk(p, k));
  return out;
}

std::vector<std::vector<QueryHit>> Index::topk_batch_parallel(std::span<const std::string> patterns, size_t k) const {
  std::vector<std::vector<QueryHit>> out(patterns.size());
  const int64_t count = static_cast<int64_t>(patterns.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 16)
  for (int64_t i = 0; i < count; ++i) {
    try {
      out[i] = topk(patterns[i], k);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

size_t SpaceReport::total_serialized() const {
  size_t s = 0;
  for (const auto& c : categories) s += c.serialized;
  return s;
}

size_t SpaceReport::total_resident() const {
  size_t s = 0;
  for (const auto& c : categories) s += c.resident;
  return s;
}

size_t SpaceReport::structure_serialized() const {
  size_t s = 0;
  for (const auto& c : categories)
    if (c.name != "CSA") s += c.serialized;
  return s;
}

size_t SpaceReport::structure_resident() const {
  size_t s = 0;
  for (const auto& c : categories)
    if (c.name != "CSA") s += c.resident;
  return s;
}

}  // namespace tkdr
