#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "tkdr/errors.hpp"
#include "tkdr/text/text_index.hpp"

namespace tkdr::text {

namespace {

// Induced sorting (SA-IS) over integers in [0, upper]. A shorter suffix
// that is a prefix of a longer one sorts first.
std::vector<int32_t> sa_is(const std::vector<int32_t>& s, int32_t upper) {
  const int32_t n = static_cast<int32_t>(s.size());
  if (n == 0) return {};
  if (n == 1) return {0};
  if (n == 2) return s[0] < s[1] ? std::vector<int32_t>{0, 1} : std::vector<int32_t>{1, 0};

  std::vector<int32_t> sa(n);
  std::vector<uint8_t> is_s(n, 0);  // S-type flags; the last suffix is L-type
  for (int32_t i = n - 2; i >= 0; --i) is_s[i] = s[i] == s[i + 1] ? is_s[i + 1] : (s[i] < s[i + 1]);

  // bucket heads: sum_l[c] = start of the L part of bucket c, sum_s[c] = start of its S part
  std::vector<int32_t> sum_l(upper + 1, 0), sum_s(upper + 1, 0);
  for (int32_t i = 0; i < n; ++i) {
    if (!is_s[i]) ++sum_s[s[i]];
    else if (s[i] + 1 <= upper) ++sum_l[s[i] + 1];
  }
  for (int32_t c = 0; c <= upper; ++c) {
    sum_s[c] += sum_l[c];
    if (c < upper) sum_l[c + 1] += sum_s[c];
  }

  auto induce = [&](const std::vector<int32_t>& lms) {
    std::fill(sa.begin(), sa.end(), -1);
    std::vector<int32_t> buf(sum_s);
    for (int32_t d : lms)
      if (d != n) sa[buf[s[d]]++] = d;
    buf = sum_l;
    sa[buf[s[n - 1]]++] = n - 1;
    for (int32_t i = 0; i < n; ++i) {
      int32_t v = sa[i];
      if (v >= 1 && !is_s[v - 1]) sa[buf[s[v - 1]]++] = v - 1;
    }
    buf = sum_l;
    for (int32_t i = n - 1; i >= 0; --i) {
      int32_t v = sa[i];
      if (v >= 1 && is_s[v - 1]) sa[--buf[s[v - 1] + 1]] = v - 1;
    }
  };

  std::vector<int32_t> lms_id(n + 1, -1);
  std::vector<int32_t> lms;
  for (int32_t i = 1; i < n; ++i) {
    if (!is_s[i - 1] && is_s[i]) {
      lms_id[i] = static_cast<int32_t>(lms.size());
      lms.push_back(i);
    }
  }
  const int32_t m = static_cast<int32_t>(lms.size());
  induce(lms);

  if (m > 0) {
    std::vector<int32_t> sorted_lms;
    sorted_lms.reserve(m);
    for (int32_t v : sa)
      if (lms_id[v] != -1) sorted_lms.push_back(v);

    // name LMS substrings; equal substrings share a name
    std::vector<int32_t> reduced(m);
    int32_t names = 0;
    reduced[lms_id[sorted_lms[0]]] = 0;
    for (int32_t i = 1; i < m; ++i) {
      int32_t l = sorted_lms[i - 1], r = sorted_lms[i];
      int32_t end_l = lms_id[l] + 1 < m ? lms[lms_id[l] + 1] : n;
      int32_t end_r = lms_id[r] + 1 < m ? lms[lms_id[r] + 1] : n;
      bool same = true;
      if (end_l - l != end_r - r) {
        same = false;
      } else {
        while (l < end_l && s[l] == s[r]) {
          ++l;
          ++r;
        }
        if (l == n || s[l] != s[r]) same = false;
      }
      if (!same) ++names;
      reduced[lms_id[sorted_lms[i]]] = names;
    }

    auto reduced_sa = sa_is(reduced, names);
    for (int32_t i = 0; i < m; ++i) sorted_lms[i] = lms[reduced_sa[i]];
    induce(sorted_lms);
  }
  return sa;
}

}  // namespace

std::vector<uint32_t> build_suffix_array(std::span<const uint16_t> seq) {
  if (seq.size() >= static_cast<size_t>(INT32_MAX)) throw BuildError("text too long for 32-bit suffix array");
  std::vector<int32_t> s(seq.begin(), seq.end());
  int32_t upper = 0;
  for (int32_t c : s) upper = std::max(upper, c);
  std::vector<int32_t> sa = sa_is(s, upper);
  std::vector<uint32_t> out(sa.size());
  for (size_t i = 0; i < sa.size(); ++i) out[i] = static_cast<uint32_t>(sa[i]) + 1;
  return out;
}

std::vector<uint32_t> build_lcp(std::span<const uint16_t> seq, std::span<const uint32_t> sa) {
  const size_t n = seq.size();
  std::vector<uint32_t> rank(n);
  for (size_t r = 0; r < n; ++r) rank[sa[r] - 1] = static_cast<uint32_t>(r);
  std::vector<uint32_t> lcp(n, 0);
  size_t h = 0;
  for (size_t i = 0; i < n; ++i) {
    if (rank[i] == 0) {
      h = 0;
      continue;
    }
    size_t j = sa[rank[i] - 1] - 1;
    while (i + h < n && j + h < n && seq[i + h] == seq[j + h]) ++h;
    lcp[rank[i]] = static_cast<uint32_t>(h);
    if (h > 0) --h;
  }
  return lcp;
}

}  // namespace tkdr::text
