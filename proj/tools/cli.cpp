#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>

#include <omp.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "tkdr/errors.hpp"
#include "tkdr/index.hpp"
#include "tkdr/verify.hpp"

namespace tkdr::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string decode_hex(const std::string& hex) {
  if (hex.size() % 2 != 0) throw InvalidArgument("hex pattern needs an even number of digits");
  std::string out;
  for (size_t i = 0; i < hex.size(); i += 2) {
    auto digit = [&](char c) -> int {
      if (c >= '0' && c <= '9') return c - '0';
      if (c >= 'a' && c <= 'f') return c - 'a' + 10;
      if (c >= 'A' && c <= 'F') return c - 'A' + 10;
      throw InvalidArgument(std::string("not a hex digit: '") + c + "'");
    };
    out.push_back(static_cast<char>(digit(hex[i]) * 16 + digit(hex[i + 1])));
  }
  return out;
}

std::vector<std::string> read_directory(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw DataError("'" + dir + "' is not a directory");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file()) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<std::string> docs;
  for (const auto& f : files) docs.push_back(read_file(f.string()));
  return docs;
}

void print_hits(std::ostream& out, const std::vector<QueryHit>& hits, bool json) {
  if (json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& h : hits) arr.push_back({{"doc", h.doc}, {"score", h.score}});
    out << arr.dump() << "\n";
    return;
  }
  for (const auto& h : hits) out << h.doc << "\t" << h.score << "\n";
}

std::string hit_list(const std::vector<QueryHit>& hits) {
  std::ostringstream s;
  s << "[";
  for (size_t i = 0; i < hits.size(); ++i) s << (i ? " " : "") << "(" << hits[i].doc << "," << hits[i].score << ")";
  s << "]";
  return s.str();
}

std::vector<size_t> parse_list(const std::string& spec) {
  std::vector<size_t> out;
  std::stringstream s(spec);
  std::string item;
  while (std::getline(s, item, ',')) {
    if (item.empty()) continue;
    size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size()) throw InvalidArgument("not a number: '" + item + "'");
    out.push_back(static_cast<size_t>(v));
  }
  if (out.empty()) throw InvalidArgument("empty list '" + spec + "'");
  return out;
}

// Substrings of the indexed text that stay inside one document.
std::vector<std::string> sample_patterns(const Index& ix, size_t m, size_t count, uint64_t seed) {
  auto seq = ix.text().text();
  std::mt19937_64 rng(seed + m);
  std::vector<std::string> out;
  if (seq.size() <= m) return out;
  for (size_t tries = 0; out.size() < count && tries < 100 * count; ++tries) {
    size_t start = std::uniform_int_distribution<size_t>(0, seq.size() - m)(rng);
    std::string p;
    for (size_t i = 0; i < m && seq[start + i] != text::kTerminator; ++i)
      p.push_back(static_cast<char>(seq[start + i] - 1));
    if (p.size() == m) out.push_back(p);
  }
  return out;
}

struct BenchCell {
  size_t m, k, queries;
  double median_us, p95_us;
  size_t results;
};

BenchCell bench_cell(const Index& ix, const std::vector<std::string>& pats, size_t m, size_t k, int threads) {
  std::vector<double> us(pats.size());
  std::vector<size_t> found(pats.size());
  const int64_t count = static_cast<int64_t>(pats.size());
#pragma omp parallel for num_threads(threads) schedule(dynamic, 8)
  for (int64_t i = 0; i < count; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    found[i] = ix.topk(pats[i], k).size();
    auto t1 = std::chrono::steady_clock::now();
    us[i] = std::chrono::duration<double, std::micro>(t1 - t0).count();
  }
  std::sort(us.begin(), us.end());
  BenchCell c{m, k, pats.size(), 0, 0, 0};
  if (!us.empty()) {
    c.median_us = us[us.size() / 2];
    c.p95_us = us[std::min(us.size() - 1, us.size() * 95 / 100)];
  }
  for (size_t f : found) c.results += f;
  return c;
}

}  // namespace

std::vector<std::string> split_collection(const std::string& data, char sep) {
  std::vector<std::string> docs;
  size_t start = 0;
  while (start <= data.size()) {
    size_t end = data.find(sep, start);
    if (end == std::string::npos) {
      if (start < data.size() || docs.empty()) docs.push_back(data.substr(start));
      break;
    }
    docs.push_back(data.substr(start, end - start));
    start = end + 1;
    if (start == data.size()) break;
  }
  return docs;
}

char parse_separator(const std::string& spec) {
  if (spec.size() == 1) return spec[0];
  const bool hex = spec.size() > 2 && (spec.rfind("0x", 0) == 0 || spec.rfind("0X", 0) == 0);
  const std::string digits = hex ? spec.substr(2) : spec;
  size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(digits, &pos, hex ? 16 : 10);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (digits.empty() || pos != digits.size() || v > 255) throw InvalidArgument("bad separator byte '" + spec + "'");
  return static_cast<char>(v);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Top-k document retrieval by term frequency over a compressed grid index"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tkdr 1.0");

  std::string input, output, index_path, pattern, hex, patterns_file;
  std::string sep = "0x0a", k_list = "10,20,30,40,50,60,70,80,90,100", lengths = "3,8";
  bool dir_mode = false, no_text = false, json = false;
  size_t k = 10, sample = 0;
  uint64_t f = 0, seed = 1;
  size_t trials = 1000;
  int threads = 1;

  auto* build = app.add_subcommand("build", "index a collection");
  build->add_option("--input", input, "collection file, or directory with --dir")->required();
  build->add_flag("--dir", dir_mode, "each regular file of the input directory is one document");
  build->add_option("--sep", sep, "document separator byte for a concatenated file (0x0a by default)");
  build->add_option("--output", output, "index file to write")->required();
  build->add_flag("--no-text", no_text, "omit the text; the index then only reports space");

  auto add_pattern = [&](CLI::App* cmd) {
    auto* p = cmd->add_option("--pattern", pattern, "pattern bytes");
    auto* h = cmd->add_option("--hex", hex, "pattern as hex digits");
    p->excludes(h);
  };
  auto* query = app.add_subcommand("query", "top-k documents for a pattern");
  query->add_option("--index", index_path)->required();
  add_pattern(query);
  query->add_option("-k", k, "number of documents")->capture_default_str();
  query->add_flag("--json", json, "print a JSON array");

  auto* mine = app.add_subcommand("mine", "documents holding a pattern at least f times");
  mine->add_option("--index", index_path)->required();
  add_pattern(mine);
  mine->add_option("-f", f, "minimum frequency")->required();
  mine->add_flag("--json", json, "print a JSON array");

  auto* verify = app.add_subcommand("verify", "compare the engine against brute force on random collections");
  verify->add_option("--seed", seed)->capture_default_str();
  verify->add_option("--trials", trials)->capture_default_str();

  auto* bench = app.add_subcommand("bench", "query latency per pattern length and k");
  bench->add_option("--index", index_path)->required();
  auto* pf = bench->add_option("--patterns", patterns_file, "file with one pattern per line");
  auto* ps = bench->add_option("--sample", sample, "sample this many patterns per length from the text");
  pf->excludes(ps);
  bench->add_option("--lengths", lengths, "pattern lengths for --sample")->capture_default_str();
  bench->add_option("--k", k_list, "comma-separated k values")->capture_default_str();
  bench->add_option("--threads", threads, "concurrent query workers")->capture_default_str();
  bench->add_option("--seed", seed, "sampling seed")->capture_default_str();

  auto* stats = app.add_subcommand("stats", "space used by each structure");
  stats->add_option("--index", index_path)->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  auto the_pattern = [&]() {
    if (pattern.empty() && hex.empty()) throw InvalidArgument("a nonempty --pattern or --hex is required");
    return hex.empty() ? pattern : decode_hex(hex);
  };

  try {
    if (*build) {
      std::vector<std::string> docs = dir_mode ? read_directory(input) : split_collection(read_file(input), parse_separator(sep));
      BuildOptions opt;
      opt.keep_text = !no_text;
      Index ix = Index::build(docs, opt);
      ix.save(output);
      out << "indexed " << ix.doc_count() << " documents, " << ix.size() << " symbols, grid width "
          << ix.grid().width() << " -> " << output << "\n";
    } else if (*query) {
      std::string p = the_pattern();
      Index ix = Index::load(index_path);
      print_hits(out, ix.topk(p, k), json);
    } else if (*mine) {
      std::string p = the_pattern();
      if (f == 0) throw InvalidArgument("-f must be at least 1");
      Index ix = Index::load(index_path);
      print_hits(out, ix.mine(p, f), json);
    } else if (*verify) {
      verify::VerifyOptions opt;
      opt.seed = seed;
      opt.trials = trials;
      auto rep = verify::run_verify(opt);
      for (const auto& m : rep.mismatches)
        out << "mismatch trial " << m.trial << " " << m.operation << " pattern '" << m.pattern << "' param "
            << m.parameter << " expected " << hit_list(m.expected) << " got " << hit_list(m.got) << "\n";
      out << (rep.failures == 0 ? "PASS" : "FAIL") << " " << rep.trials << " trials, " << rep.queries << " queries, "
          << rep.failures << " failing trials\n";
      return rep.failures == 0 ? kExitOk : kExitData;
    } else if (*bench) {
      if (patterns_file.empty() && sample == 0) throw InvalidArgument("bench needs --patterns or --sample");
      auto ks = parse_list(k_list);
      if (threads < 1) throw InvalidArgument("--threads must be at least 1");
      Index ix = Index::load(index_path);
      std::map<size_t, std::vector<std::string>> by_length;
      if (!patterns_file.empty()) {
        std::istringstream lines(read_file(patterns_file));
        std::string line;
        while (std::getline(lines, line))
          if (!line.empty()) by_length[line.size()].push_back(line);
        if (by_length.empty()) throw InvalidArgument("pattern file '" + patterns_file + "' holds no patterns");
      } else {
        if (!ix.has_text()) throw DataError("sampling needs an index built with its text");
        for (size_t m : parse_list(lengths)) by_length[m] = sample_patterns(ix, m, sample, seed);
      }
      out << "m\tk\tqueries\tmedian_us\tp95_us\tresults\n";
      out << std::fixed << std::setprecision(2);
      for (const auto& [m, pats] : by_length) {
        for (size_t kk : ks) {
          auto c = bench_cell(ix, pats, m, kk, threads);
          out << c.m << "\t" << c.k << "\t" << c.queries << "\t" << c.median_us << "\t" << c.p95_us << "\t"
              << c.results << "\n";
        }
      }
    } else if (*stats) {
      Index ix = Index::load(index_path);
      auto rep = ix.space_report();
      const double n = static_cast<double>(std::max<size_t>(rep.symbols, 1));
      out << "category\tbytes\tresident\tbytes_per_symbol\n" << std::fixed << std::setprecision(3);
      for (const auto& c : rep.categories)
        out << c.name << "\t" << c.serialized << "\t" << c.resident << "\t" << c.serialized / n << "\n";
      out << "total\t" << rep.total_serialized() << "\t" << rep.total_resident() << "\t" << rep.total_serialized() / n
          << "\n";
      out << "structures\t" << rep.structure_serialized() << "\t" << rep.structure_resident() << "\t"
          << rep.structure_serialized() / n << "\n";
      out << "symbols\t" << rep.symbols << "\n";
      out << "documents\t" << ix.doc_count() << "\n";
      out << "grid_width\t" << rep.grid_width << "\n";
      out << "grid_height\t" << rep.grid_height << "\n";
      out << "wavelet_levels\t" << rep.grid_levels << "\n";
    }
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitOk;
}

}  // namespace tkdr::cli
