#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "indcover/graph.hpp"

namespace indcover {

enum class Verdict { pass, counterexample, skip };
const char* to_string(Verdict verdict);

struct Record {
  std::string graph6;  ///< tested graph, or the raw line when it failed to parse
  Verdict verdict = Verdict::pass;
  std::string reason;                ///< skip reason or what went wrong
  nlohmann::json data = nlohmann::json::object();
  std::vector<std::string> notes;    ///< tallied in the summary
  std::optional<double> elapsed_ms;  ///< only with timing enabled
};

nlohmann::json to_json(const Record& record);

enum class CorpusFilter { all, connected, connected_triangle_free };

struct SuiteInfo {
  std::string name;
  std::string summary;
  int ceiling = 0;             ///< largest order the suite accepts without an override
  std::string default_source;  ///< "enumerate:nK" or "random:N"
  CorpusFilter filter = CorpusFilter::connected;
};

/// The thirteen suites, in a fixed order.
const std::vector<SuiteInfo>& suite_catalog();
/// Throws ArgumentError on an unknown name.
const SuiteInfo& suite_info(const std::string& name);

struct SuiteOptions {
  std::string source;           ///< empty: the suite default
  std::optional<int> max_n;     ///< defaults to the suite ceiling
  std::uint64_t seed = 1;
  int jobs = 1;                 ///< 0: all cores
  std::optional<int> samples;   ///< overrides the N of a random source
  bool timing = false;
  bool override_limits = false;
};

struct SuiteReport {
  std::string suite;
  std::string source;
  std::uint64_t seed = 0;
  std::vector<Record> records;

  int count(Verdict verdict) const;
  bool passed() const { return count(Verdict::counterexample) == 0; }
  nlohmann::json summary() const;
};

/// Runs one suite. Unknown suites, malformed sources, unreadable files and limits above the
/// suite ceiling (without override_limits) throw ArgumentError. Graphs the suite cannot
/// handle become skip records.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

/// One JSON record per line, then {"summary": ...}.
void write_jsonl(std::ostream& out, const SuiteReport& report);

}  // namespace indcover
