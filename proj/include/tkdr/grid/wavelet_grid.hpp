#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tkdr/io/byte_stream.hpp"
#include "tkdr/rmq/rmq_index.hpp"
#include "tkdr/stbuild/st_build.hpp"
#include "tkdr/succinct/bit_vector.hpp"
#include "tkdr/succinct/dac_array.hpp"
#include "tkdr/succinct/int_vector.hpp"

namespace tkdr::grid {

struct GridHit {
  uint32_t doc = 0;
  uint64_t weight = 0;
  friend bool operator==(const GridHit&, const GridHit&) = default;
};

struct GridPoint {
  uint32_t y = 0;
  uint32_t doc = 0;
  uint64_t weight = 0;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

// A wavelet tree node reached by a query, with the part of the query's
// x-range that maps into it. Positions are 1-based within the level.
struct CoverNode {
  size_t level;
  size_t lo, hi;  // node extent
  size_t a, b;    // mapped query range, lo <= a <= b <= hi
};

// Grid of one point per x-coordinate, y-coordinates held in a pointerless
// wavelet tree (levels laid out one after another, nodes contiguous inside
// each level). Weights are reachable only through the per-level max RMQs
// and the leaf-aligned DAC array.
class WaveletGrid {
 public:
  WaveletGrid() = default;
  WaveletGrid(const stbuild::GridPointSet& points, uint32_t doc_count);

  [[nodiscard]] size_t width() const { return width_; }
  // max y + 1, or 0 for an empty grid.
  [[nodiscard]] size_t height() const { return height_; }
  [[nodiscard]] size_t levels() const { return bits_.size(); }

  // Points in [x1, x2] x [y1, y2]; 0 when x1 > x2 or y1 > y2.
  [[nodiscard]] size_t count(size_t x1, size_t x2, uint64_t y1, uint64_t y2) const;
  // Nodes whose mapped ranges together hold exactly the points of
  // [x1, x2] x [0, ymax].
  [[nodiscard]] std::vector<CoverNode> cover(size_t x1, size_t x2, uint64_t ymax) const;

  // k heaviest points of [x1, x2] x [0, ymax], heaviest first.
  [[nodiscard]] std::vector<GridHit> topk(size_t x1, size_t x2, uint64_t ymax, size_t k) const;
  // Every point of the rectangle with weight >= f, heaviest first; f >= 2.
  [[nodiscard]] std::vector<GridHit> mine(size_t x1, size_t x2, uint64_t ymax, uint64_t f) const;

  // The point stored at x, recovered by tracking it to the bottom level.
  [[nodiscard]] GridPoint point(size_t x) const;

  [[nodiscard]] size_t levels_bytes() const;
  [[nodiscard]] size_t rmq_bytes() const;
  [[nodiscard]] size_t docs_bytes() const { return docs_.size_in_bytes(); }
  [[nodiscard]] size_t weights_bytes() const { return weights_.size_in_bytes(); }
  [[nodiscard]] size_t size_in_bytes() const {
    return sizeof(*this) + levels_bytes() + rmq_bytes() + docs_bytes() + weights_bytes();
  }

  void save_levels(io::ByteWriter& out) const;
  void save_rmqs(io::ByteWriter& out) const;
  void save_docs(io::ByteWriter& out) const { docs_.save(out); }
  void save_weights(io::ByteWriter& out) const { weights_.save(out); }
  static WaveletGrid load(io::ByteReader& levels, io::ByteReader& rmqs, io::ByteReader& docs,
                          io::ByteReader& weights);

 private:
  template <class Accept>
  std::vector<GridHit> extract(size_t x1, size_t x2, uint64_t ymax, Accept accept) const;
  // Follows position p of node [lo, hi] at `level` down to the bottom;
  // returns the bottom-level position and accumulates the y bits.
  size_t track(size_t level, size_t lo, size_t hi, size_t p, uint64_t* y) const;
  void validate() const;

  size_t width_ = 0;
  size_t height_ = 0;
  std::vector<succinct::BitVector> bits_;  // one per level
  std::vector<rmq::RmqIndex> rmqs_;        // levels() + 1, the last in bottom order
  succinct::IntVector docs_;               // doc - 1, bottom order
  succinct::DacArray weights_;             // bottom order
};

}  // namespace tkdr::grid
