#include <chrono>
#include <fstream>
#include <regex>

#include "indcover/enumerate.hpp"
#include "indcover/errors.hpp"
#include "indcover/graph6.hpp"
#include "indcover/parallel.hpp"
#include "indcover/stats.hpp"
#include "indcover/suite.hpp"
#include "suite_detail.hpp"

namespace indcover {

using nlohmann::json;

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::pass:
      return "pass";
    case Verdict::counterexample:
      return "counterexample";
    case Verdict::skip:
      return "skip";
  }
  return "?";
}

json to_json(const Record& record) {
  json out;
  out["graph6"] = record.graph6;
  out["verdict"] = to_string(record.verdict);
  if (!record.reason.empty()) out["reason"] = record.reason;
  out["data"] = record.data;
  if (record.elapsed_ms) out["elapsed_ms"] = *record.elapsed_ms;
  return out;
}

const std::vector<SuiteInfo>& suite_catalog() {
  static const std::vector<SuiteInfo> catalog = {
      {"brooks-alpha", "alpha * Delta >= n without K_{Delta+1}", 8, "enumerate:n8",
       CorpusFilter::connected},
      {"mic-basics", "mic = n-1 exactly for Gallai trees, else mic >= n", 8, "enumerate:n7",
       CorpusFilter::connected},
      {"main-lemma-d0", "certificates for f = d0 on non-Gallai trees", 8, "enumerate:n7",
       CorpusFilter::connected},
      {"at-classify", "d0-AT exactly for non-Gallai trees", 6, "enumerate:n6",
       CorpusFilter::connected},
      {"kp-classify", "d0-KP exactly for non-Gallai trees", 6, "enumerate:n6",
       CorpusFilter::connected},
      {"kernel-game", "kernel Painter beats every Lister", 6, "enumerate:n6",
       CorpusFilter::connected},
      {"in-orient-oracle", "flow orientations agree with brute force", 5, "enumerate:n5",
       CorpusFilter::all},
      {"mic-strength", "mic <= 2m - (delta-1)n - 1 for OC-irreducible graphs", 7,
       "enumerate:n7", CorpusFilter::connected},
      {"gallai-count", "Gallai forest counting inequality", 62, "random:3000",
       CorpusFilter::all},
      {"triangle-free-mic", "mic >= (1/4) sum lg d(v) without triangles", 10, "enumerate:n9",
       CorpusFilter::connected_triangle_free},
      {"edges-4critical", "edge count of 4-critical graphs with edgeless high part", 8,
       "enumerate:n7", CorpusFilter::all},
      {"ore-precursors", "inequalities for OC-irreducible graphs", 7, "enumerate:n7",
       CorpusFilter::connected},
      {"cut-lemma", "online choosability glues across an induced cut", 6, "random:500",
       CorpusFilter::all},
  };
  return catalog;
}

const SuiteInfo& suite_info(const std::string& name) {
  for (const SuiteInfo& info : suite_catalog()) {
    if (info.name == name) return info;
  }
  throw ArgumentError("unknown suite '" + name + "'");
}

int SuiteReport::count(Verdict verdict) const {
  int total = 0;
  for (const Record& r : records) total += r.verdict == verdict;
  return total;
}

json SuiteReport::summary() const {
  std::map<std::string, int> skip_reasons;
  std::map<std::string, int> notes;
  for (const Record& r : records) {
    if (r.verdict == Verdict::skip) ++skip_reasons[r.reason];
    for (const std::string& note : r.notes) ++notes[note];
  }
  json out;
  out["suite"] = suite;
  out["source"] = source;
  out["seed"] = seed;
  out["records"] = records.size();
  out["passed"] = count(Verdict::pass);
  out["counterexamples"] = count(Verdict::counterexample);
  out["skipped"] = count(Verdict::skip);
  out["skip_reasons"] = skip_reasons;
  out["notes"] = notes;
  out["result"] = passed() ? "pass" : "fail";
  return out;
}

void write_jsonl(std::ostream& out, const SuiteReport& report) {
  for (const Record& r : report.records) out << to_json(r).dump() << '\n';
  out << json{{"summary", report.summary()}}.dump() << '\n';
}

namespace detail {

std::mt19937_64 sample_rng(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(static_cast<std::uint64_t>(index) >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace detail

namespace {

using detail::CorpusItem;

struct Source {
  enum Kind { enumerate, random, file } kind = enumerate;
  int count = 0;  ///< max order or sample count
  std::string path;
};

Source parse_source(const std::string& text) {
  static const std::regex enumerate_form(R"(enumerate:n(?:<=|≤)?(\d+))");
  static const std::regex random_form(R"(random:(\d+))");
  std::smatch m;
  if (std::regex_match(text, m, enumerate_form)) return {Source::enumerate, std::stoi(m[1]), {}};
  if (std::regex_match(text, m, random_form)) return {Source::random, std::stoi(m[1]), {}};
  if (text.rfind("enumerate:", 0) == 0 || text.rfind("random:", 0) == 0) {
    throw ArgumentError("malformed source '" + text + "'");
  }
  return {Source::file, 0, text};
}

std::vector<CorpusItem> enumerated(int max_n, CorpusFilter filter) {
  std::vector<CorpusItem> out;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<Graph> level;
    if (filter == CorpusFilter::connected_triangle_free) {
      level = enumerate_hereditary(n, true, [](const Graph& g) { return is_triangle_free(g); });
    } else {
      level = enumerate_graphs(n, filter == CorpusFilter::connected);
    }
    for (Graph& g : level) {
      CorpusItem item;
      item.index = out.size();
      item.text = encode_graph6(g);
      item.graph = std::move(g);
      out.push_back(std::move(item));
    }
  }
  return out;
}

std::vector<CorpusItem> from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot read corpus '" + path + "'");
  std::vector<CorpusItem> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    CorpusItem item;
    item.index = out.size();
    item.text = line;
    try {
      item.graph = parse_graph6(line);
    } catch (const FormatError& e) {
      item.parse_error = e.what();
    }
    out.push_back(std::move(item));
  }
  return out;
}

bool fits_filter(const Graph& g, CorpusFilter filter, std::string& reason) {
  if (filter == CorpusFilter::all) return true;
  if (!is_connected(g)) {
    reason = "disconnected";
    return false;
  }
  if (filter == CorpusFilter::connected_triangle_free && !is_triangle_free(g)) {
    reason = "contains a triangle";
    return false;
  }
  return true;
}

Record run_one(detail::SuiteBody body, const CorpusItem& item, const detail::SuiteContext& ctx,
               CorpusFilter filter, bool sampled) {
  Record r;
  r.graph6 = item.text;
  if (!sampled) {
    if (!item.graph) {
      r.verdict = Verdict::skip;
      r.reason = "unparsable graph6: " + item.parse_error;
      return r;
    }
    if (item.graph->order() > ctx.max_n) {
      r.verdict = Verdict::skip;
      r.reason = "order above limit";
      return r;
    }
    std::string reason;
    if (!fits_filter(*item.graph, filter, reason)) {
      r.verdict = Verdict::skip;
      r.reason = reason;
      return r;
    }
  }
  try {
    return body(item, ctx);
  } catch (const SizeError& e) {
    r.verdict = Verdict::skip;
    r.reason = std::string("size limit: ") + e.what();
  } catch (const std::exception& e) {
    r.verdict = Verdict::counterexample;
    r.reason = std::string("internal error: ") + e.what();
  }
  return r;
}

}  // namespace

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  const SuiteInfo& info = suite_info(name);
  detail::SuiteBody body = detail::find_suite_body(name);
  if (!body) throw ArgumentError("suite '" + name + "' has no body");

  const std::string source_text = options.source.empty() ? info.default_source : options.source;
  Source source = parse_source(source_text);
  const bool wants_random = info.default_source.rfind("random:", 0) == 0;
  if (wants_random != (source.kind == Source::random)) {
    throw ArgumentError("suite '" + name + "' takes " +
                        (wants_random ? std::string("a random:N source")
                                      : std::string("an enumerate:nK or file source")));
  }
  const int max_n = options.max_n.value_or(info.ceiling);
  if (max_n < 1) throw ArgumentError("--max-n must be positive");
  const int requested = source.kind == Source::enumerate ? std::max(max_n, source.count) : max_n;
  if (requested > info.ceiling && !options.override_limits) {
    throw ArgumentError("suite '" + name + "' is limited to n <= " +
                        std::to_string(info.ceiling) + " (use --override-limits)");
  }
  if (source.kind == Source::enumerate && std::min(source.count, max_n) > kMaxHereditaryOrder) {
    throw ArgumentError("enumeration is limited to n <= " + std::to_string(kMaxHereditaryOrder));
  }
  if (options.samples) {
    if (source.kind != Source::random) throw ArgumentError("--samples needs a random source");
    source.count = *options.samples;
  }

  std::vector<CorpusItem> corpus;
  switch (source.kind) {
    case Source::enumerate: {
      const int top = std::min(source.count, max_n);
      if (info.filter != CorpusFilter::connected_triangle_free && top > kMaxEnumerateOrder) {
        throw ArgumentError("enumeration is limited to n <= " +
                            std::to_string(kMaxEnumerateOrder));
      }
      corpus = enumerated(top, info.filter);
      break;
    }
    case Source::random:
      corpus.resize(static_cast<std::size_t>(source.count));
      for (std::size_t i = 0; i < corpus.size(); ++i) corpus[i].index = i;
      break;
    case Source::file:
      corpus = from_file(source.path);
      break;
  }

  const detail::SuiteContext ctx{options.seed, max_n};
  const bool sampled = source.kind == Source::random;
  const Execution exec = options.jobs == 1 ? Execution::serial() : Execution::parallel(options.jobs);
  SuiteReport report;
  report.suite = name;
  report.source = source.kind == Source::random ? "random:" + std::to_string(source.count)
                                                : source_text;
  report.seed = options.seed;
  report.records = map_indexed(
      corpus.size(),
      [&](std::size_t i) {
        const auto start = std::chrono::steady_clock::now();
        Record r = run_one(body, corpus[i], ctx, info.filter, sampled);
        if (options.timing) {
          r.elapsed_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count();
        }
        return r;
      },
      exec);
  return report;
}

}  // namespace indcover
