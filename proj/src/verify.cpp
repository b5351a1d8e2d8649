#include "tkdr/verify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>

namespace tkdr::verify {

std::vector<QueryHit> oracle_tf(std::span<const std::string> docs, std::string_view pattern) {
  std::vector<QueryHit> out;
  if (pattern.empty()) return out;
  for (size_t i = 0; i < docs.size(); ++i) {
    uint64_t tf = 0;
    for (size_t p = docs[i].find(pattern); p != std::string::npos; p = docs[i].find(pattern, p + 1)) ++tf;
    if (tf > 0) out.push_back({static_cast<uint32_t>(i + 1), tf});
  }
  std::sort(out.begin(), out.end(),
            [](const QueryHit& a, const QueryHit& b) { return a.score != b.score ? a.score > b.score : a.doc < b.doc; });
  return out;
}

std::vector<QueryHit> oracle_topk(std::span<const std::string> docs, std::string_view pattern, size_t k) {
  auto all = oracle_tf(docs, pattern);
  if (all.size() > k) all.resize(k);
  return all;
}

bool topk_matches(const std::vector<QueryHit>& oracle_all, const std::vector<QueryHit>& got, size_t k) {
  const size_t take = std::min(k, oracle_all.size());
  if (got.size() != take) return false;
  if (take == 0) return true;
  std::map<uint32_t, uint64_t> tf;
  for (const auto& h : oracle_all) tf[h.doc] = h.score;
  std::multiset<uint64_t> want_scores, got_scores;
  std::set<uint32_t> want_above, got_above, seen;
  const uint64_t kth = oracle_all[take - 1].score;
  for (size_t i = 0; i < take; ++i) {
    want_scores.insert(oracle_all[i].score);
    if (oracle_all[i].score > kth) want_above.insert(oracle_all[i].doc);
    const auto& h = got[i];
    auto it = tf.find(h.doc);
    if (it == tf.end() || it->second != h.score || !seen.insert(h.doc).second) return false;
    got_scores.insert(h.score);
    if (h.score > kth) got_above.insert(h.doc);
  }
  return want_scores == got_scores && want_above == got_above;
}

bool mine_matches(const std::vector<QueryHit>& oracle_all, const std::vector<QueryHit>& got, uint64_t f) {
  std::set<std::pair<uint32_t, uint64_t>> want, have;
  for (const auto& h : oracle_all)
    if (h.score >= f) want.insert({h.doc, h.score});
  for (const auto& h : got) have.insert({h.doc, h.score});
  return have.size() == got.size() && want == have;
}

VerifyReport run_verify(const VerifyOptions& options) {
  constexpr size_t kKeptMismatches = 5;
  std::mt19937_64 rng(options.seed);
  auto uniform = [&](size_t lo, size_t hi) { return std::uniform_int_distribution<size_t>(lo, hi)(rng); };
  VerifyReport report;

  for (size_t trial = 0; trial < options.trials; ++trial) {
    const size_t sigma = std::array<size_t, 3>{2, 4, 26}[trial % 3];
    std::vector<std::string> docs(uniform(1, options.max_docs));
    for (auto& d : docs) {
      d.resize(uniform(0, options.max_doc_len));
      for (auto& c : d) c = static_cast<char>('a' + uniform(0, sigma - 1));
    }
    Index ix = Index::build(docs, options.build);

    std::string all;
    for (const auto& d : docs) all += d;
    std::vector<std::string> patterns;
    for (size_t p = 0; p < options.patterns_per_trial; ++p) {
      const size_t m = uniform(1, 8);
      if (p % 4 != 3 && all.size() >= m) {
        patterns.push_back(all.substr(uniform(0, all.size() - m), m));
      } else {
        std::string s(m, 'a');
        for (auto& c : s) c = static_cast<char>('a' + uniform(0, 27));
        patterns.push_back(s);
      }
    }

    bool failed = false;
    auto record = [&](const std::string& op, const std::string& pattern, uint64_t param,
                      std::vector<QueryHit> expected, std::vector<QueryHit> got) {
      failed = true;
      if (report.mismatches.size() < kKeptMismatches)
        report.mismatches.push_back({trial, op, pattern, param, std::move(expected), std::move(got)});
    };
    for (const auto& pat : patterns) {
      auto oracle = oracle_tf(docs, pat);
      for (size_t k : {size_t{1}, size_t{5}, size_t{10}, docs.size()}) {
        ++report.queries;
        auto got = ix.topk(pat, k);
        if (!topk_matches(oracle, got, k)) record("topk", pat, k, oracle_topk(docs, pat, k), got);
      }
      for (uint64_t f : {1, 2, 3}) {
        ++report.queries;
        auto got = ix.mine(pat, f);
        if (!mine_matches(oracle, got, f)) {
          std::vector<QueryHit> expected;
          for (const auto& h : oracle)
            if (h.score >= f) expected.push_back(h);
          record("mine", pat, f, expected, got);
        }
      }
    }
    ++report.trials;
    if (failed) ++report.failures;
  }
  return report;
}

}  // namespace tkdr::verify
