#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tkdr/errors.hpp"
#include "tkdr/succinct/bit_vector.hpp"
#include "tkdr/succinct/dac_array.hpp"
#include "tkdr/succinct/int_vector.hpp"
#include "tkdr/succinct/sparse_bit_vector.hpp"

using namespace tkdr;
using namespace tkdr::succinct;
using tkdr::testing::scan_rank;
using tkdr::testing::scan_select;

namespace {

BitVector from_vec(const std::vector<int>& bits) {
  BitBuffer buf;
  for (int b : bits) buf.push_back(b);
  return BitVector(std::move(buf));
}

std::vector<uint64_t> positions_of(const std::vector<int>& bits) {
  std::vector<uint64_t> pos;
  for (size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) pos.push_back(i + 1);
  return pos;
}

}  // namespace

TEST_CASE("bitvector examples") {
  BitVector empty;
  CHECK(empty.size() == 0);
  CHECK(empty.rank1(0) == 0);

  BitVector bv{1, 0, 1, 1, 0};
  CHECK(bv.size() == 5);
  CHECK(bv.rank1(3) == 2);
  CHECK(bv.rank0(0) == 0);
  CHECK(bv.rank1(0) == 0);
  CHECK(bv.rank0(5) == 2);
  CHECK(bv.rank1(5) == 3);
  CHECK(bv.select1(2) == 3);
  CHECK(bv.select0(1) == 2);
  CHECK_THROWS_AS((void)bv.rank1(6), OutOfRange);

  BitVector one{1};
  CHECK_THROWS_AS((void)one.select1(2), NotFound);
  CHECK_THROWS_AS((void)one.select0(1), NotFound);
}

TEST_CASE("bitvector agrees with linear scan") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    size_t n = std::uniform_int_distribution<size_t>(0, 9000)(rng);
    double density = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    std::vector<int> bits(n);
    for (auto& b : bits) b = std::bernoulli_distribution(density)(rng);
    BitVector bv = from_vec(bits);
    // prefix counts once, then compare everywhere
    std::vector<size_t> pre1(n + 1, 0);
    for (size_t i = 0; i < n; ++i) pre1[i + 1] = pre1[i] + bits[i];
    for (size_t i = 0; i <= n; ++i) {
      REQUIRE(bv.rank1(i) == pre1[i]);
      REQUIRE(bv.rank0(i) == i - pre1[i]);
    }
    size_t j1 = 0, j0 = 0;
    for (size_t i = 0; i < n; ++i) {
      if (bits[i]) REQUIRE(bv.select1(++j1) == i + 1);
      else REQUIRE(bv.select0(++j0) == i + 1);
    }
    CHECK(bv.ones() == j1);
    CHECK_THROWS_AS((void)bv.select1(j1 + 1), NotFound);
  }
}

TEST_CASE("select inverts rank") {
  std::mt19937_64 rng(11);
  std::vector<int> bits(20000);
  for (auto& b : bits) b = std::bernoulli_distribution(0.3)(rng);
  BitVector bv = from_vec(bits);
  size_t prev = 0;
  for (size_t j = 1; j <= bv.ones(); ++j) {
    size_t p = bv.select1(j);
    REQUIRE(p > prev);
    REQUIRE(bv.rank1(p) == j);
    prev = p;
  }
}

TEST_CASE("bitvector save/load") {
  BitVector bv{1, 1, 0, 0, 1, 0, 1};
  io::ByteWriter w;
  bv.save(w);
  io::ByteReader r(w.bytes());
  BitVector back = BitVector::load(r);
  CHECK(back == bv);
  CHECK(back.select1(4) == 7);
}

TEST_CASE("sparse bitvector examples") {
  std::vector<uint64_t> one{1};
  SparseBitVector s1(one, 10);
  CHECK(s1.rank1(10) == 1);

  std::vector<uint64_t> two{3, 7};
  SparseBitVector s2(two, 8);
  CHECK(s2.select1(2) == 7);
  CHECK(s2.rank1(6) == 1);
  CHECK(s2.rank0(8) == 6);
  CHECK(s2.select0(3) == 4);
  CHECK_THROWS_AS((void)s2.select1(3), NotFound);

  std::vector<uint64_t> bad{5, 5};
  CHECK_THROWS_AS(SparseBitVector(bad, 8), BuildError);
  std::vector<uint64_t> outside{9};
  CHECK_THROWS_AS(SparseBitVector(outside, 8), BuildError);
}

TEST_CASE("sparse and plain bitvectors agree exhaustively") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    size_t n = std::uniform_int_distribution<size_t>(1, 512)(rng);
    double density = std::uniform_real_distribution<double>(0.0, 0.5)(rng);
    std::vector<int> bits(n);
    for (auto& b : bits) b = std::bernoulli_distribution(density)(rng);
    BitVector plain = from_vec(bits);
    auto pos = positions_of(bits);
    SparseBitVector sparse(pos, n);
    REQUIRE(sparse.ones() == plain.ones());
    for (size_t i = 0; i <= n; ++i) REQUIRE(sparse.rank1(i) == plain.rank1(i));
    for (size_t j = 1; j <= plain.ones(); ++j) REQUIRE(sparse.select1(j) == plain.select1(j));
    for (size_t j = 1; j <= plain.zeros(); j += 7) REQUIRE(sparse.select0(j) == plain.select0(j));
    for (size_t i = 1; i <= n; ++i) REQUIRE(sparse.access(i) == plain[i]);
  }
}

TEST_CASE("int vector widths") {
  std::vector<uint64_t> vals{0, 1, 5, 63, 64, 1000};
  auto iv = IntVector::compact(vals);
  CHECK(iv.width() == 10);
  for (size_t i = 0; i < vals.size(); ++i) CHECK(iv[i] == vals[i]);
  std::vector<uint64_t> wide{~uint64_t{0}, 0, 12345678901234ULL};
  IntVector w64(wide, 64);
  for (size_t i = 0; i < wide.size(); ++i) CHECK(w64[i] == wide[i]);
}

TEST_CASE("dac examples") {
  std::vector<uint64_t> zeros{0, 0, 0};
  CHECK(DacArray(zeros).access(2) == 0);
  std::vector<uint64_t> a{3, 130, 7};
  CHECK(DacArray(a).access(2) == 130);
  std::vector<uint64_t> b{2, 2, 5, 2};
  CHECK(DacArray(b).access(3) == 5);
  CHECK_THROWS_AS((void)DacArray(b).access(5), OutOfRange);
}

TEST_CASE("dac round trip on random inputs") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    size_t n = std::uniform_int_distribution<size_t>(0, 3000)(rng);
    std::vector<uint64_t> vals(n);
    int max_bits = std::uniform_int_distribution<int>(1, 32)(rng);
    for (auto& v : vals) {
      int bits = std::uniform_int_distribution<int>(0, max_bits)(rng);
      v = bits == 0 ? 0 : rng() & ((uint64_t{1} << bits) - 1);
    }
    vals.push_back(0xFFFFFFFFULL);
    DacArray dac(vals);
    CHECK(dac.levels() <= DacArray::kMaxLevels);
    for (size_t i = 0; i < vals.size(); ++i) REQUIRE(dac[i + 1] == vals[i]);

    io::ByteWriter w;
    dac.save(w);
    io::ByteReader r(w.bytes());
    DacArray back = DacArray::load(r);
    for (size_t i = 0; i < vals.size(); ++i) REQUIRE(back[i + 1] == vals[i]);
  }
}

TEST_CASE("dac widths beat a single fixed-width level on skewed data") {
  std::vector<uint64_t> vals(10000, 2);
  for (size_t i = 0; i < vals.size(); i += 100) vals[i] = 100000;
  auto widths = DacArray::optimal_widths(vals);
  int total = 0;
  for (int w : widths) total += w;
  CHECK(total == 17);
  CHECK(widths.size() > 1);
  // cost of the chosen layout vs one flat level of 17 bits
  size_t cost = 0, reach = vals.size(), shift = 0;
  for (size_t l = 0; l < widths.size(); ++l) {
    cost += reach * widths[l] + (l + 1 < widths.size() ? reach : 0);
    shift += widths[l];
    reach = 0;
    for (uint64_t v : vals) reach += (v >> shift) != 0;
  }
  CHECK(cost < vals.size() * 17);
}
