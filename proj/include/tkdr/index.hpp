#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tkdr/doclist/doc_list.hpp"
#include "tkdr/grid/wavelet_grid.hpp"
#include "tkdr/stbuild/st_build.hpp"
#include "tkdr/text/text_index.hpp"

namespace tkdr {

struct BuildOptions {
  bool keep_text = true;
  // Run per-document marking and linking on all OpenMP threads.
  bool parallel = false;
  // Added to every stored grid weight. Only for fault-injection tests.
  int64_t weight_skew = 0;
};

struct QueryHit {
  uint32_t doc = 0;
  uint64_t score = 0;
  friend bool operator==(const QueryHit&, const QueryHit&) = default;
};

// Locus of a suffix range and the grid rectangle below it. The x-range is
// empty (x1 > x2) when the subtree stores no points.
struct Locus {
  tree::NodeHandle node;
  size_t x1 = 1, x2 = 0;
  int64_t ymax = -1;
  [[nodiscard]] bool empty() const { return x1 > x2 || ymax < 0; }
};

// Hits split by the phase that produced them, before the final ordering.
struct QueryTrace {
  std::vector<QueryHit> grid;
  std::vector<QueryHit> completion;
};

struct SpaceCategory {
  std::string name;
  size_t serialized = 0;
  size_t resident = 0;
};

struct SpaceReport {
  std::vector<SpaceCategory> categories;  // CSA, WT, F, T, DOC, M, C, D
  size_t symbols = 0;                     // n, terminators included
  size_t collection_bytes = 0;            // raw document bytes
  size_t grid_width = 0;
  size_t grid_height = 0;
  size_t grid_levels = 0;
  size_t max_stored_depth = 0;  // largest y, 0 for an empty grid

  [[nodiscard]] size_t total_serialized() const;
  [[nodiscard]] size_t total_resident() const;
  // Every category except CSA.
  [[nodiscard]] size_t structure_serialized() const;
  [[nodiscard]] size_t structure_resident() const;
};

class Index {
 public:
  Index() = default;
  static Index build(std::span<const std::string> docs, const BuildOptions& options = {});

  [[nodiscard]] size_t size() const { return text_.size(); }
  [[nodiscard]] uint32_t doc_count() const { return text_.doc_count(); }
  [[nodiscard]] bool has_text() const { return text_.has_text(); }
  [[nodiscard]] const text::TextIndex& text() const { return text_; }
  [[nodiscard]] const stbuild::TopologyBundle& topology() const { return topo_; }
  [[nodiscard]] const succinct::BitVector& node_map() const { return node_map_; }
  [[nodiscard]] const grid::WaveletGrid& grid() const { return grid_; }
  [[nodiscard]] const doclist::CArray& listing() const { return clist_; }

  // Suffix range of a nonempty pattern, or nullopt when it does not occur.
  [[nodiscard]] std::optional<text::SuffixRange> range(std::string_view pattern) const;
  [[nodiscard]] Locus locus_and_range(size_t sp, size_t ep) const;

  // Score descending, then document ascending.
  [[nodiscard]] std::vector<QueryHit> topk(std::string_view pattern, size_t k, QueryTrace* trace = nullptr) const;
  // Documents holding the pattern at least f >= 1 times.
  [[nodiscard]] std::vector<QueryHit> mine(std::string_view pattern, uint64_t f, QueryTrace* trace = nullptr) const;

  // One top-k answer per pattern; the parallel form spreads patterns over
  // OpenMP threads and returns the same answers.
  [[nodiscard]] std::vector<std::vector<QueryHit>> topk_batch(std::span<const std::string> patterns, size_t k) const;
  [[nodiscard]] std::vector<std::vector<QueryHit>> topk_batch_parallel(std::span<const std::string> patterns,
                                                                       size_t k) const;

  [[nodiscard]] SpaceReport space_report() const;

  [[nodiscard]] std::vector<uint8_t> serialize() const;
  static Index deserialize(std::span<const uint8_t> bytes);
  void save(const std::string& path) const;
  static Index load(const std::string& path);

 private:
  std::vector<QueryHit> finish(QueryTrace& trace) const;

  size_t collection_bytes_ = 0;
  text::TextIndex text_;
  stbuild::TopologyBundle topo_;
  succinct::BitVector node_map_;
  grid::WaveletGrid grid_;
  doclist::CArray clist_;
};

}  // namespace tkdr
