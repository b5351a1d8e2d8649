#include "tkdr/doclist/doc_list.hpp"

#include <unordered_map>

namespace tkdr::doclist {

std::vector<int64_t> compute_c(std::span<const uint32_t> da) {
  std::vector<int64_t> c(da.size());
  std::unordered_map<uint32_t, int64_t> last;
  for (size_t i = 0; i < da.size(); ++i) {
    auto it = last.try_emplace(da[i], -1).first;
    c[i] = it->second;
    it->second = static_cast<int64_t>(i + 1);
  }
  return c;
}

CArray::CArray(std::span<const uint32_t> da) {
  if (da.empty()) return;
  auto c = compute_c(da);
  rmq_ = rmq::RmqIndex(std::span<const int64_t>(c), rmq::Mode::kMin);
}

CArray CArray::load(io::ByteReader& in) {
  CArray ca;
  ca.rmq_ = rmq::RmqIndex::load(in);
  if (ca.rmq_.size() > 0 && ca.rmq_.mode() != rmq::Mode::kMin) throw FormatError("listing index has the wrong mode");
  return ca;
}

}  // namespace tkdr::doclist
