#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tkdr/index.hpp"

namespace tkdr::verify {

// Term frequency of the pattern in every document containing it, by naive
// scanning; highest frequency first, then ascending document id.
std::vector<QueryHit> oracle_tf(std::span<const std::string> docs, std::string_view pattern);
std::vector<QueryHit> oracle_topk(std::span<const std::string> docs, std::string_view pattern, size_t k);

// `got` is an acceptable top-k answer against the complete oracle list:
// same score multiset as the first k oracle entries, same documents above
// the k-th score, and exact frequencies throughout.
bool topk_matches(const std::vector<QueryHit>& oracle_all, const std::vector<QueryHit>& got, size_t k);
// Same documents and scores as the oracle entries with score >= f.
bool mine_matches(const std::vector<QueryHit>& oracle_all, const std::vector<QueryHit>& got, uint64_t f);

struct VerifyOptions {
  uint64_t seed = 1;
  size_t trials = 1000;
  size_t max_docs = 64;
  size_t max_doc_len = 256;
  size_t patterns_per_trial = 12;
  BuildOptions build;
};

struct Mismatch {
  size_t trial = 0;
  std::string operation;  // "topk" or "mine"
  std::string pattern;
  uint64_t parameter = 0;  // k or f
  std::vector<QueryHit> expected;
  std::vector<QueryHit> got;
};

struct VerifyReport {
  size_t trials = 0;
  size_t queries = 0;
  size_t failures = 0;
  std::vector<Mismatch> mismatches;  // the first few failures
};

// Random collections over alphabets of 2, 4 and 26 letters, queried with
// substrings of length 1..8 and with random strings.
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace tkdr::verify
