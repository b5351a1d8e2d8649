#include "tkdr/text/text_index.hpp"

#include <algorithm>
#include <string>

#include "tkdr/errors.hpp"

namespace tkdr::text {

Symbols remap(std::span<const std::string> docs) {
  Symbols out;
  size_t total = docs.size();
  for (const auto& d : docs) total += d.size();
  out.seq.reserve(total);
  std::vector<bool> seen(257, false);
  for (const auto& d : docs) {
    for (unsigned char b : d) {
      out.seq.push_back(code_of(b));
      seen[code_of(b)] = true;
    }
    out.seq.push_back(kTerminator);
    seen[kTerminator] = true;
  }
  out.sigma = static_cast<uint32_t>(std::count(seen.begin(), seen.end(), true));
  out.doc_count = static_cast<uint32_t>(docs.size());
  return out;
}

namespace {

// <0, 0, >0 as the suffix at 0-based position p is below, prefixed by, or above the pattern.
int compare_suffix(std::span<const uint16_t> seq, size_t p, std::string_view pattern) {
  for (size_t k = 0; k < pattern.size(); ++k) {
    if (p + k == seq.size()) return -1;
    uint16_t c = seq[p + k], q = code_of(static_cast<unsigned char>(pattern[k]));
    if (c != q) return c < q ? -1 : 1;
  }
  return 0;
}

}  // namespace

std::optional<SuffixRange> count(std::span<const uint16_t> seq, std::span<const uint32_t> sa,
                                 std::string_view pattern) {
  auto lo = std::partition_point(sa.begin(), sa.end(),
                                 [&](uint32_t p) { return compare_suffix(seq, p - 1, pattern) < 0; });
  auto hi = std::partition_point(lo, sa.end(), [&](uint32_t p) { return compare_suffix(seq, p - 1, pattern) == 0; });
  if (lo == hi) return std::nullopt;
  return SuffixRange{static_cast<size_t>(lo - sa.begin()) + 1, static_cast<size_t>(hi - sa.begin())};
}

succinct::SparseBitVector doc_bounds(const Symbols& symbols) {
  std::vector<uint64_t> starts;
  starts.reserve(symbols.doc_count);
  bool at_start = true;
  for (size_t i = 0; i < symbols.seq.size(); ++i) {
    if (at_start) starts.push_back(i + 1);
    at_start = symbols.seq[i] == kTerminator;
  }
  return succinct::SparseBitVector(starts, symbols.seq.size());
}

uint32_t doc_of(std::span<const uint32_t> sa, const succinct::SparseBitVector& bounds, size_t i) {
  if (i < 1 || i > sa.size()) throw OutOfRange("suffix rank " + std::to_string(i) + " out of range");
  return static_cast<uint32_t>(bounds.rank1(sa[i - 1]));
}

std::vector<uint32_t> doc_array(std::span<const uint32_t> sa, const succinct::SparseBitVector& bounds) {
  std::vector<uint32_t> da(sa.size());
  for (size_t i = 0; i < sa.size(); ++i) da[i] = static_cast<uint32_t>(bounds.rank1(sa[i]));
  return da;
}

TextIndex::TextIndex(Symbols symbols, std::vector<uint32_t> sa, bool keep_text)
    : n_(symbols.size()), doc_count_(symbols.doc_count), sigma_(symbols.sigma), sa_(std::move(sa)) {
  if (sa_.size() != n_) throw BuildError("suffix array length differs from text length");
  bounds_ = doc_bounds(symbols);
  std::vector<uint32_t> da = text::doc_array(sa_, bounds_);
  std::vector<uint64_t> shifted(da.begin(), da.end());
  for (auto& v : shifted) --v;
  da_ = succinct::IntVector(shifted, doc_count_ > 1 ? succinct::bit_width_of(doc_count_ - 1) : 0);
  if (keep_text) seq_ = std::move(symbols.seq);
}

std::optional<SuffixRange> TextIndex::count(std::string_view pattern) const {
  if (!has_text()) throw InvalidArgument("index was built without its text; counting is unavailable");
  return text::count(seq_, sa_, pattern);
}

std::vector<uint32_t> TextIndex::doc_array() const {
  std::vector<uint32_t> out(n_);
  for (size_t i = 0; i < n_; ++i) out[i] = doc_at(i + 1);
  return out;
}

void TextIndex::save_text(io::ByteWriter& out) const { out.put_array<uint16_t>(seq_); }
void TextIndex::save_sa(io::ByteWriter& out) const { out.put_array<uint32_t>(sa_); }

TextIndex TextIndex::load(size_t n, uint32_t doc_count, uint32_t sigma, io::ByteReader* text, io::ByteReader& sa,
                          io::ByteReader& bounds, io::ByteReader& docs) {
  TextIndex t;
  t.n_ = n;
  t.doc_count_ = doc_count;
  t.sigma_ = sigma;
  if (text) t.seq_ = text->get_array<uint16_t>();
  t.sa_ = sa.get_array<uint32_t>();
  t.bounds_ = succinct::SparseBitVector::load(bounds);
  t.da_ = succinct::IntVector::load(docs);
  if ((text && t.seq_.size() != n) || t.sa_.size() != n || t.bounds_.size() != n || t.da_.size() != n ||
      t.bounds_.ones() != doc_count)
    throw FormatError("text sections disagree on collection size");
  return t;
}

}  // namespace tkdr::text
