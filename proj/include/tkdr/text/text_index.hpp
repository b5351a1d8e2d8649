#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tkdr/io/byte_stream.hpp"
#include "tkdr/succinct/int_vector.hpp"
#include "tkdr/succinct/sparse_bit_vector.hpp"

namespace tkdr::text {

// Byte b is stored as code b+1; code 0 terminates every document.
inline constexpr uint16_t kTerminator = 0;
inline uint16_t code_of(unsigned char b) { return static_cast<uint16_t>(b) + 1; }

struct Symbols {
  std::vector<uint16_t> seq;
  uint32_t sigma = 0;  // distinct codes present, terminator included
  uint32_t doc_count = 0;

  [[nodiscard]] size_t size() const { return seq.size(); }
};

Symbols remap(std::span<const std::string> docs);

// Suffix array with 1-based text positions, built by induced sorting.
std::vector<uint32_t> build_suffix_array(std::span<const uint16_t> seq);
// Kasai's algorithm; lcp[r-1] is the lcp of the suffixes ranked r-1 and r (lcp[0] = 0).
std::vector<uint32_t> build_lcp(std::span<const uint16_t> seq, std::span<const uint32_t> sa);

// Inclusive 1-based range of suffix ranks.
struct SuffixRange {
  size_t sp = 0;
  size_t ep = 0;
  [[nodiscard]] size_t size() const { return ep - sp + 1; }
  friend bool operator==(const SuffixRange&, const SuffixRange&) = default;
};

// Ranks of the suffixes prefixed by the remapped pattern; nullopt when absent.
std::optional<SuffixRange> count(std::span<const uint16_t> seq, std::span<const uint32_t> sa, std::string_view pattern);

// Sparse bitmap marking the first position of every document.
succinct::SparseBitVector doc_bounds(const Symbols& symbols);
// Document owning the suffix of rank i (1-based).
uint32_t doc_of(std::span<const uint32_t> sa, const succinct::SparseBitVector& bounds, size_t i);
std::vector<uint32_t> doc_array(std::span<const uint32_t> sa, const succinct::SparseBitVector& bounds);

// The text layer of the index: optional text, suffix array, document
// boundaries and the document array. The text is only required for
// counting; an index built without it can still report its space.
class TextIndex {
 public:
  TextIndex() = default;
  TextIndex(Symbols symbols, std::vector<uint32_t> sa, bool keep_text);

  [[nodiscard]] size_t size() const { return n_; }
  [[nodiscard]] uint32_t doc_count() const { return doc_count_; }
  [[nodiscard]] uint32_t sigma() const { return sigma_; }
  [[nodiscard]] bool has_text() const { return !seq_.empty() || n_ == 0; }

  [[nodiscard]] std::span<const uint16_t> text() const { return seq_; }
  [[nodiscard]] std::span<const uint32_t> suffix_array() const { return sa_; }
  [[nodiscard]] const succinct::SparseBitVector& bounds() const { return bounds_; }

  // Requires the text; throws InvalidArgument otherwise.
  [[nodiscard]] std::optional<SuffixRange> count(std::string_view pattern) const;
  // Document of suffix rank i via the document array.
  [[nodiscard]] uint32_t doc_at(size_t i) const { return static_cast<uint32_t>(da_[i - 1]) + 1; }
  [[nodiscard]] std::vector<uint32_t> doc_array() const;

  // Serialized pieces, one per index-file section.
  void save_text(io::ByteWriter& out) const;
  void save_sa(io::ByteWriter& out) const;
  void save_bounds(io::ByteWriter& out) const { bounds_.save(out); }
  void save_docs(io::ByteWriter& out) const { da_.save(out); }
  static TextIndex load(size_t n, uint32_t doc_count, uint32_t sigma, io::ByteReader* text, io::ByteReader& sa,
                        io::ByteReader& bounds, io::ByteReader& docs);

  [[nodiscard]] size_t text_bytes() const { return seq_.size() * sizeof(uint16_t); }
  [[nodiscard]] size_t sa_bytes() const { return sa_.size() * sizeof(uint32_t); }
  [[nodiscard]] size_t docs_bytes() const { return da_.size_in_bytes(); }
  [[nodiscard]] size_t bounds_bytes() const { return bounds_.size_in_bytes(); }

 private:
  size_t n_ = 0;
  uint32_t doc_count_ = 0;
  uint32_t sigma_ = 0;
  std::vector<uint16_t> seq_;
  std::vector<uint32_t> sa_;
  succinct::SparseBitVector bounds_;
  succinct::IntVector da_;  // doc id - 1 per suffix rank
};

}  // namespace tkdr::text
