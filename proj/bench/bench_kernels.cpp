// Serial versus OpenMP kernels: per-document marking/linking during
// construction and batched top-k queries.
//
//   tkdr_bench_kernels [--docs N] [--len L] [--queries Q] [--threads T]

#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include <omp.h>

#include "CLI11.hpp"
#include "tkdr/index.hpp"
#include "tkdr/text/text_index.hpp"

namespace {

template <class F>
double seconds(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compare serial and parallel kernels"};
  size_t docs_n = 2000, len = 1000, queries = 4000;
  int threads = omp_get_max_threads();
  uint64_t seed = 1;
  app.add_option("--docs", docs_n)->capture_default_str();
  app.add_option("--len", len)->capture_default_str();
  app.add_option("--queries", queries)->capture_default_str();
  app.add_option("--threads", threads)->capture_default_str();
  app.add_option("--seed", seed)->capture_default_str();
  CLI11_PARSE(app, argc, argv);
  omp_set_num_threads(std::max(1, threads));

  std::mt19937_64 rng(seed);
  std::vector<std::string> docs(docs_n, std::string(len, 'a'));
  for (auto& d : docs)
    for (auto& c : d) c = static_cast<char>('a' + rng() % 26);

  auto sym = tkdr::text::remap(docs);
  auto sa = tkdr::text::build_suffix_array(sym.seq);
  auto topo = tkdr::stbuild::topology_from_lcp(tkdr::text::build_lcp(sym.seq, sa));
  auto da = tkdr::text::doc_array(sa, tkdr::text::doc_bounds(sym));

  std::vector<tkdr::stbuild::MarkedNode> serial, parallel;
  double ts = seconds([&] {
    serial = tkdr::stbuild::mark_documents(topo, da);
    tkdr::stbuild::compute_links(serial, topo.tree);
  });
  double tp = seconds([&] {
    parallel = tkdr::stbuild::mark_documents_parallel(topo, da);
    tkdr::stbuild::compute_links_parallel(parallel, topo.tree);
  });

  auto ix = tkdr::Index::build(docs);
  std::vector<std::string> pats;
  for (size_t i = 0; i < queries; ++i) {
    size_t m = i % 2 ? 8 : 3;
    const auto& d = docs[rng() % docs.size()];
    pats.push_back(d.substr(rng() % (len - m + 1), m));
  }
  std::vector<std::vector<tkdr::QueryHit>> qs, qp;
  double bs = seconds([&] { qs = ix.topk_batch(pats, 10); });
  double bp = seconds([&] { qp = ix.topk_batch_parallel(pats, 10); });

  std::printf("n=%zu docs=%zu threads=%d\n", sym.size(), docs_n, threads);
  std::printf("kernel\tserial_s\tparallel_s\tspeedup\tidentical\n");
  std::printf("mark+link\t%.3f\t%.3f\t%.2f\t%s\n", ts, tp, ts / tp, serial == parallel ? "yes" : "NO");
  std::printf("topk_batch\t%.3f\t%.3f\t%.2f\t%s\n", bs, bp, bs / bp, qs == qp ? "yes" : "NO");
  return serial == parallel && qs == qp ? 0 : 1;
}
