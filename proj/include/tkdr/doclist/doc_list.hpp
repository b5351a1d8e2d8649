#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_set>
#include <vector>

#include "tkdr/errors.hpp"
#include "tkdr/io/byte_stream.hpp"
#include "tkdr/rmq/rmq_index.hpp"

namespace tkdr::doclist {

// c[i] = largest j < i with da[j] = da[i], or -1. Positions are 1-based,
// the returned vector is 0-based.
std::vector<int64_t> compute_c(std::span<const uint32_t> da);

struct ListStats {
  size_t rmq_calls = 0;
  size_t found = 0;
  size_t excluded_seen = 0;
};

// Distinct-document listing over the document array. Only a range-minimum
// index over c is kept; a per-query set of documents already met replaces
// the comparison of c against the range start.
class CArray {
 public:
  CArray() = default;
  explicit CArray(std::span<const uint32_t> da);

  [[nodiscard]] size_t size() const { return rmq_.size(); }

  // Up to `limit` documents of da[sp..ep] not in `exclude`, in recursion
  // order. doc_at(i) returns da[i] for 1-based i.
  template <class DocAt>
  std::vector<uint32_t> list_distinct(DocAt&& doc_at, size_t sp, size_t ep, size_t limit,
                                      const std::unordered_set<uint32_t>& exclude = {},
                                      ListStats* stats = nullptr) const;

  [[nodiscard]] size_t size_in_bytes() const { return sizeof(*this) + rmq_.size_in_bytes(); }
  void save(io::ByteWriter& out) const { rmq_.save(out); }
  static CArray load(io::ByteReader& in);

 private:
  rmq::RmqIndex rmq_;
};

template <class DocAt>
std::vector<uint32_t> CArray::list_distinct(DocAt&& doc_at, size_t sp, size_t ep, size_t limit,
                                            const std::unordered_set<uint32_t>& exclude, ListStats* stats) const {
  if (sp < 1 || sp > ep || ep > size()) throw OutOfRange("listing range is not inside the document array");
  std::vector<uint32_t> out;
  if (limit == 0) return out;
  ListStats local;
  std::unordered_set<uint32_t> seen;
  std::vector<std::pair<size_t, size_t>> todo{{sp, ep}};
  while (!todo.empty() && out.size() < limit) {
    auto [a, b] = todo.back();
    todo.pop_back();
    size_t m = rmq_.query_unchecked(a, b);
    ++local.rmq_calls;
    uint32_t d = doc_at(m);
    if (!seen.insert(d).second) continue;
    if (exclude.count(d)) {
      ++local.excluded_seen;
    } else {
      out.push_back(d);
    }
    if (m < b) todo.emplace_back(m + 1, b);
    if (m > a) todo.emplace_back(a, m - 1);
  }
  local.found = out.size();
  if (stats) *stats = local;
  return out;
}

}  // namespace tkdr::doclist
