#include "tkdr/grid/wavelet_grid.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "tkdr/errors.hpp"

namespace tkdr::grid {

WaveletGrid::WaveletGrid(const stbuild::GridPointSet& points, uint32_t doc_count) : width_(points.width()) {
  if (width_ == 0) return;
  uint32_t max_y = *std::max_element(points.y.begin(), points.y.end());
  height_ = static_cast<size_t>(max_y) + 1;
  const int L = std::max(1, succinct::bit_width_of(max_y));

  std::vector<uint32_t> order(width_);
  std::iota(order.begin(), order.end(), 0u);
  std::vector<uint64_t> w(width_);
  for (int l = 0; l < L; ++l) {
    const int shift = L - 1 - l;
    succinct::BitBuffer bits;
    for (size_t p = 0; p < width_; ++p) {
      bits.push_back((points.y[order[p]] >> shift) & 1);
      w[p] = points.weight[order[p]];
    }
    bits_.emplace_back(std::move(bits));
    rmqs_.emplace_back(std::span<const uint64_t>(w), rmq::Mode::kMax);
    // nodes of level l+1 are the runs of equal top l+1 bits
    std::stable_sort(order.begin(), order.end(),
                     [&](uint32_t a, uint32_t b) { return (points.y[a] >> shift) < (points.y[b] >> shift); });
  }
  std::vector<uint64_t> docs(width_);
  for (size_t p = 0; p < width_; ++p) {
    w[p] = points.weight[order[p]];
    docs[p] = points.doc[order[p]] - 1;
  }
  rmqs_.emplace_back(std::span<const uint64_t>(w), rmq::Mode::kMax);
  docs_ = succinct::IntVector(docs, doc_count > 1 ? succinct::bit_width_of(doc_count - 1) : 0);
  weights_ = succinct::DacArray(w);
}

size_t WaveletGrid::track(size_t level, size_t lo, size_t hi, size_t p, uint64_t* y) const {
  for (size_t l = level; l < bits_.size(); ++l) {
    const auto& bv = bits_[l];
    size_t r0lo = bv.rank0(lo - 1);
    size_t z = bv.rank0(hi) - r0lo;
    bool bit = bv[p];
    *y = (*y << 1) | bit;
    if (!bit) {
      p = lo + bv.rank0(p - 1) - r0lo;
      hi = lo + z - 1;
    } else {
      p = lo + z + bv.rank1_unchecked(p - 1) - (lo - 1 - r0lo);
      lo += z;
    }
  }
  return p;
}

GridPoint WaveletGrid::point(size_t x) const {
  if (x < 1 || x > width_) throw OutOfRange("grid column " + std::to_string(x) + " out of range");
  uint64_t y = 0;
  size_t q = track(0, 1, width_, x, &y);
  return {static_cast<uint32_t>(y), static_cast<uint32_t>(docs_[q - 1] + 1), weights_[q]};
}

std::vector<CoverNode> WaveletGrid::cover(size_t x1, size_t x2, uint64_t ymax) const {
  std::vector<CoverNode> out;
  if (x1 > x2) return out;
  if (x1 < 1 || x2 > width_) throw OutOfRange("grid x-range exceeds the grid width");
  const size_t L = bits_.size();
  if (L >= 64 || ymax >= (uint64_t{1} << L) - 1) {
    out.push_back({0, 1, width_, x1, x2});
    return out;
  }
  size_t lo = 1, hi = width_, a = x1, b = x2;
  for (size_t l = 0; l < L; ++l) {
    const auto& bv = bits_[l];
    size_t r0lo = bv.rank0(lo - 1), r1lo = (lo - 1) - r0lo;
    size_t z = bv.rank0(hi) - r0lo;
    size_t a0 = lo + bv.rank0(a - 1) - r0lo, b0 = lo + bv.rank0(b) - r0lo;  // [a0, b0)
    if ((ymax >> (L - 1 - l)) & 1) {
      if (a0 < b0) out.push_back({l + 1, lo, lo + z - 1, a0, b0 - 1});
      size_t a1 = lo + z + bv.rank1_unchecked(a - 1) - r1lo, b1 = lo + z + bv.rank1_unchecked(b) - r1lo;
      lo += z;
      a = a1;
      if (a1 >= b1) return out;
      b = b1 - 1;
    } else {
      hi = lo + z - 1;
      a = a0;
      if (a0 >= b0) return out;
      b = b0 - 1;
    }
  }
  out.push_back({L, lo, hi, a, b});
  return out;
}

size_t WaveletGrid::count(size_t x1, size_t x2, uint64_t y1, uint64_t y2) const {
  if (x1 > x2 || y1 > y2) return 0;
  auto leq = [&](uint64_t ymax) {
    size_t c = 0;
    for (const auto& node : cover(x1, x2, ymax)) c += node.b - node.a + 1;
    return c;
  };
  return leq(y2) - (y1 > 0 ? leq(y1 - 1) : 0);
}

template <class Accept>
std::vector<GridHit> WaveletGrid::extract(size_t x1, size_t x2, uint64_t ymax, Accept accept) const {
  struct Candidate {
    size_t level, lo, hi, a, b, x;
    GridHit hit;
    uint64_t seq;
  };
  auto later = [](const Candidate& p, const Candidate& q) {
    return p.hit.weight != q.hit.weight ? p.hit.weight < q.hit.weight : p.seq > q.seq;
  };
  std::priority_queue<Candidate, std::vector<Candidate>, decltype(later)> heap(later);
  uint64_t seq = 0;
  auto push = [&](size_t level, size_t lo, size_t hi, size_t a, size_t b) {
    if (a > b) return;
    size_t x = rmqs_[level].query_unchecked(a, b);
    uint64_t y = 0;
    size_t q = track(level, lo, hi, x, &y);
    heap.push({level, lo, hi, a, b, x, {static_cast<uint32_t>(docs_[q - 1] + 1), weights_[q]}, seq++});
  };
  for (const auto& node : cover(x1, x2, ymax)) push(node.level, node.lo, node.hi, node.a, node.b);

  std::vector<GridHit> out;
  while (!heap.empty()) {
    Candidate c = heap.top();
    if (!accept(out.size(), c.hit.weight)) break;
    heap.pop();
    out.push_back(c.hit);
    push(c.level, c.lo, c.hi, c.a, c.x - 1);
    push(c.level, c.lo, c.hi, c.x + 1, c.b);
  }
  return out;
}

std::vector<GridHit> WaveletGrid::topk(size_t x1, size_t x2, uint64_t ymax, size_t k) const {
  if (k == 0 || x1 > x2) return {};
  return extract(x1, x2, ymax, [k](size_t found, uint64_t) { return found < k; });
}

std::vector<GridHit> WaveletGrid::mine(size_t x1, size_t x2, uint64_t ymax, uint64_t f) const {
  if (f < 2) throw InvalidArgument("grid mining needs a frequency threshold of at least 2");
  if (x1 > x2) return {};
  return extract(x1, x2, ymax, [f](size_t, uint64_t w) { return w >= f; });
}

size_t WaveletGrid::levels_bytes() const {
  size_t s = 0;
  for (const auto& b : bits_) s += b.size_in_bytes();
  return s;
}

size_t WaveletGrid::rmq_bytes() const {
  size_t s = 0;
  for (const auto& r : rmqs_) s += r.size_in_bytes();
  return s;
}

void WaveletGrid::save_levels(io::ByteWriter& out) const {
  out.put_u64(width_);
  out.put_u64(height_);
  out.put_u64(bits_.size());
  for (const auto& b : bits_) b.save(out);
}

void WaveletGrid::save_rmqs(io::ByteWriter& out) const {
  out.put_u64(rmqs_.size());
  for (const auto& r : rmqs_) r.save(out);
}

void WaveletGrid::validate() const {
  if (width_ == 0) {
    if (height_ != 0 || !bits_.empty() || !rmqs_.empty() || docs_.size() != 0 || weights_.size() != 0)
      throw FormatError("empty grid carries data");
    return;
  }
  if (height_ == 0 || bits_.empty() || bits_.size() >= 64 || rmqs_.size() != bits_.size() + 1 ||
      (height_ - 1) >> bits_.size() != 0)
    throw FormatError("grid level structure is inconsistent");
  for (const auto& b : bits_)
    if (b.size() != width_) throw FormatError("grid level has the wrong width");
  for (const auto& r : rmqs_)
    if (r.size() != width_ || r.mode() != rmq::Mode::kMax) throw FormatError("grid weight index is inconsistent");
  if (docs_.size() != width_ || weights_.size() != width_) throw FormatError("grid labels have the wrong width");
}

WaveletGrid WaveletGrid::load(io::ByteReader& levels, io::ByteReader& rmqs, io::ByteReader& docs,
                              io::ByteReader& weights) {
  WaveletGrid g;
  g.width_ = levels.get_u64();
  g.height_ = levels.get_u64();
  uint64_t L = levels.get_u64();
  if (L > 64) throw FormatError("grid level count is implausible");
  for (uint64_t l = 0; l < L; ++l) g.bits_.push_back(succinct::BitVector::load(levels));
  uint64_t R = rmqs.get_u64();
  if (R > 65) throw FormatError("grid weight index count is implausible");
  for (uint64_t l = 0; l < R; ++l) g.rmqs_.push_back(rmq::RmqIndex::load(rmqs));
  g.docs_ = succinct::IntVector::load(docs);
  g.weights_ = succinct::DacArray::load(weights);
  g.validate();
  return g;
}

}  // namespace tkdr::grid
