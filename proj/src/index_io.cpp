#include <algorithm>
#include <array>
#include <cstring>
#include <fstream>
#include <iterator>
#include <map>

#include <zlib.h>

#include "tkdr/errors.hpp"
#include "tkdr/index.hpp"

namespace tkdr {

namespace {

constexpr std::array<char, 4> kMagic{'T', 'K', 'D', 'R'};
constexpr uint32_t kVersion = 1;
constexpr size_t kHeaderBytes = 16;
constexpr size_t kEntryBytes = 32;
constexpr uint32_t kMaxSections = 64;

struct Section {
  std::string name;  // at most 8 bytes
  io::ByteWriter body;
};

uint32_t crc_of(std::span<const uint8_t> bytes) {
  return static_cast<uint32_t>(crc32(0L, bytes.data(), static_cast<uInt>(bytes.size())));
}

std::vector<Section> write_sections(const Index& ix, size_t collection_bytes) {
  std::vector<Section> s;
  s.reserve(16);
  auto add = [&](const char* name) -> io::ByteWriter& { return s.emplace_back(Section{name, {}}).body; };
  const auto& t = ix.text();
  auto& meta = add("meta");
  meta.put_u64(t.size());
  meta.put_u32(t.doc_count());
  meta.put_u32(t.sigma());
  meta.put_u8(t.has_text() ? 1 : 0);
  meta.put_u64(collection_bytes);
  if (t.has_text()) t.save_text(add("text"));
  t.save_sa(add("sa"));
  t.save_bounds(add("docbnd"));
  t.save_docs(add("docarr"));
  ix.topology().tree.save(add("tree"));
  ix.topology().leaves.save(add("leafmap"));
  ix.node_map().save(add("nodemap"));
  ix.grid().save_levels(add("gridwt"));
  ix.grid().save_rmqs(add("gridrmq"));
  ix.grid().save_docs(add("griddoc"));
  ix.grid().save_weights(add("gridwgt"));
  ix.listing().save(add("crmq"));
  return s;
}

void expect_consumed(const io::ByteReader& r, const std::string& name) {
  if (!r.at_end()) throw FormatError("section '" + name + "' has trailing bytes");
}

}  // namespace

std::vector<uint8_t> Index::serialize() const {
  auto sections = write_sections(*this, collection_bytes_);
  io::ByteWriter out;
  for (char c : kMagic) out.put_u8(static_cast<uint8_t>(c));
  out.put_u32(kVersion);
  out.put_u32(static_cast<uint32_t>(sections.size()));
  out.put_u32(0);
  uint64_t offset = kHeaderBytes + kEntryBytes * sections.size();
  for (const auto& s : sections) {
    std::array<uint8_t, 8> name{};
    std::memcpy(name.data(), s.name.data(), std::min<size_t>(8, s.name.size()));
    out.put_bytes(name);
    out.put_u64(offset);
    out.put_u64(s.body.size());
    out.put_u32(crc_of(s.body.bytes()));
    out.put_u32(0);
    offset += s.body.size();
  }
  for (const auto& s : sections) out.put_bytes(s.body.bytes());
  return out.release();
}

Index Index::deserialize(std::span<const uint8_t> bytes) {
  const size_t head = std::min(bytes.size(), kMagic.size());
  if (!std::equal(bytes.begin(), bytes.begin() + head, reinterpret_cast<const uint8_t*>(kMagic.data())))
    throw MagicMismatch("not an index file (bad magic)");
  if (bytes.size() < kHeaderBytes) throw TruncatedData("index header is truncated");
  io::ByteReader header(bytes.subspan(4, kHeaderBytes - 4));
  uint32_t version = header.get_u32();
  if (version != kVersion)
    throw VersionMismatch("index format version " + std::to_string(version) + " is not supported (expected " +
                          std::to_string(kVersion) + ")");
  uint32_t count = header.get_u32();
  if (count > kMaxSections) throw FormatError("index section table is implausibly large");
  if (bytes.size() < kHeaderBytes + size_t{count} * kEntryBytes) throw TruncatedData("section table is truncated");

  std::map<std::string, std::span<const uint8_t>> sections;
  io::ByteReader table(bytes.subspan(kHeaderBytes, size_t{count} * kEntryBytes));
  for (uint32_t i = 0; i < count; ++i) {
    auto raw = table.get_bytes(8);
    std::string name(reinterpret_cast<const char*>(raw.data()), 8);
    name.resize(std::strlen(name.c_str()));
    uint64_t offset = table.get_u64(), length = table.get_u64();
    uint32_t crc = table.get_u32();
    (void)table.get_u32();
    if (offset > bytes.size() || length > bytes.size() - offset)
      throw TruncatedData("section '" + name + "' runs past the end of the file");
    auto body = bytes.subspan(offset, length);
    if (crc_of(body) != crc) throw ChecksumMismatch("section '" + name + "' fails its checksum");
    sections[name] = body;
  }
  auto need = [&](const std::string& name) {
    auto it = sections.find(name);
    if (it == sections.end()) throw FormatError("index file lacks section '" + name + "'");
    return io::ByteReader(it->second);
  };

  Index ix;
  auto meta = need("meta");
  uint64_t n = meta.get_u64();
  uint32_t d = meta.get_u32(), sigma = meta.get_u32();
  bool with_text = meta.get_u8() != 0;
  ix.collection_bytes_ = meta.get_u64();
  expect_consumed(meta, "meta");
  if (n == 0 || d == 0) throw FormatError("index describes an empty collection");

  std::optional<io::ByteReader> text;
  if (with_text) text = need("text");
  auto sa = need("sa"), bnd = need("docbnd"), docs = need("docarr");
  ix.text_ = text::TextIndex::load(n, d, sigma, text ? &*text : nullptr, sa, bnd, docs);
  if (text) expect_consumed(*text, "text");
  expect_consumed(sa, "sa");
  expect_consumed(bnd, "docbnd");
  expect_consumed(docs, "docarr");

  auto tree = need("tree"), leaves = need("leafmap"), nodes = need("nodemap");
  ix.topo_ = {tree::BpTree::load(tree), succinct::BitVector::load(leaves)};
  ix.node_map_ = succinct::BitVector::load(nodes);
  expect_consumed(tree, "tree");
  expect_consumed(leaves, "leafmap");
  expect_consumed(nodes, "nodemap");

  auto gw = need("gridwt"), gr = need("gridrmq"), gd = need("griddoc"), gf = need("gridwgt");
  ix.grid_ = grid::WaveletGrid::load(gw, gr, gd, gf);
  expect_consumed(gw, "gridwt");
  expect_consumed(gr, "gridrmq");
  expect_consumed(gd, "griddoc");
  expect_consumed(gf, "gridwgt");

  auto cr = need("crmq");
  ix.clist_ = doclist::CArray::load(cr);
  expect_consumed(cr, "crmq");

  const auto& L = ix.topo_.leaves;
  if (L.size() != ix.topo_.tree.nodes() || L.ones() != n || ix.node_map_.ones() != L.zeros() ||
      ix.node_map_.zeros() != ix.grid_.width() || ix.clist_.size() != n)
    throw FormatError("index sections disagree with each other");
  return ix;
}

void Index::save(const std::string& path) const {
  auto bytes = serialize();
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot open '" + path + "' for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw DataError("failed writing '" + path + "'");
}

Index Index::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path + "'");
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return deserialize(bytes);
}

SpaceReport Index::space_report() const {
  auto sections = write_sections(*this, collection_bytes_);
  std::map<std::string, size_t> bytes;
  for (const auto& s : sections) bytes[s.name] = s.body.size();
  const size_t framing = kHeaderBytes + kEntryBytes * sections.size();

  SpaceReport r;
  r.symbols = size();
  r.collection_bytes = collection_bytes_;
  r.grid_width = grid_.width();
  r.grid_height = grid_.height();
  r.grid_levels = grid_.levels();
  r.max_stored_depth = grid_.height() > 0 ? grid_.height() - 1 : 0;
  r.categories = {
      {"CSA", framing + bytes["meta"] + bytes["text"] + bytes["sa"] + bytes["docarr"],
       sizeof(*this) + text_.text_bytes() + text_.sa_bytes() + text_.docs_bytes()},
      {"WT", bytes["gridwt"] + bytes["gridrmq"], grid_.levels_bytes() + grid_.rmq_bytes()},
      {"F", bytes["gridwgt"], grid_.weights_bytes()},
      {"T", bytes["tree"], topo_.tree.size_in_bytes()},
      {"DOC", bytes["griddoc"], grid_.docs_bytes()},
      {"M", bytes["leafmap"] + bytes["nodemap"], topo_.leaves.size_in_bytes() + node_map_.size_in_bytes()},
      {"C", bytes["crmq"], clist_.size_in_bytes()},
      {"D", bytes["docbnd"], text_.bounds_bytes()},
  };
  return r;
}

}  // namespace tkdr
