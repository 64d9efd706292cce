#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "indcover/graph.hpp"
#include "indcover/suite.hpp"

namespace indcover::detail {

/// A parsed corpus line, or an index into a random sample stream.
struct CorpusItem {
  std::size_t index = 0;
  std::optional<Graph> graph;
  std::string text;
  std::string parse_error;
};

struct SuiteContext {
  std::uint64_t seed = 0;
  int max_n = 0;
};

using SuiteBody = Record (*)(const CorpusItem& item, const SuiteContext& ctx);

/// Body for a suite name, or nullptr.
SuiteBody find_suite_body(const std::string& name);

/// Independent stream per (seed, index).
std::mt19937_64 sample_rng(std::uint64_t seed, std::size_t index);

}  // namespace indcover::detail
