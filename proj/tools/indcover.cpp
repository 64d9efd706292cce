#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "indcover/certificate_io.hpp"
#include "indcover/dot.hpp"
#include "indcover/errors.hpp"
#include "indcover/generators.hpp"
#include "indcover/graph6.hpp"
#include "indcover/suite.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw indcover::ArgumentError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Independent covers, kernel-perfect orientations and online list colouring"};
  app.require_subcommand(1);

  auto* suite = app.add_subcommand("suite", "run a theorem suite over a corpus");
  std::string suite_name;
  indcover::SuiteOptions options;
  std::optional<int> max_n;
  std::optional<int> samples;
  std::string out_path;
  std::string format = "jsonl";
  suite->add_option("name", suite_name, "suite name (see `indcover list`)")->required();
  suite->add_option("--source", options.source, "enumerate:nK, random:N or a graph6 file");
  suite->add_option("--max-n", max_n, "largest order to test");
  suite->add_option("--seed", options.seed, "seed for random sources")->capture_default_str();
  suite->add_option("--jobs", options.jobs, "worker threads, 0 = all cores")
      ->capture_default_str();
  suite->add_option("--samples", samples, "sample count for random sources");
  suite->add_option("--out", out_path, "write the report here instead of stdout");
  suite->add_option("--format", format, "jsonl or summary")
      ->check(CLI::IsMember({"jsonl", "summary"}))
      ->capture_default_str();
  suite->add_flag("--timing", options.timing, "add elapsed_ms to every record");
  suite->add_flag("--override-limits", options.override_limits,
                  "allow orders above the suite ceiling");

  auto* list = app.add_subcommand("list", "list the suites");

  auto* gen = app.add_subcommand("gen", "print a named graph");
  std::string family;
  std::vector<int> params;
  bool as_dot = false;
  gen->add_option("family", family, "family name")->required();
  gen->add_option("params", params, "integer parameters");
  auto* g6_flag = gen->add_flag("--g6", "graph6 output (default)");
  gen->add_flag("--dot", as_dot, "DOT output")->excludes(g6_flag);

  auto* cert = app.add_subcommand("cert", "certificate tools");
  cert->require_subcommand(1);
  auto* validate = cert->add_subcommand("validate", "recheck a certificate file");
  std::string cert_path;
  validate->add_option("file", cert_path, "certificate JSON")->required();
  auto* extract = cert->add_subcommand("extract", "issue a certificate for a graph");
  std::string graph6;
  std::vector<int> f_values;
  std::vector<int> cover;
  extract->add_option("graph6", graph6, "graph in graph6")->required();
  extract->add_option("--f", f_values, "list sizes (default: degrees)")->delimiter(',');
  extract->add_option("--a", cover, "independent set (default: mic witness)")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*list) {
      for (const auto& info : indcover::suite_catalog()) {
        std::cout << info.name << "  n<=" << info.ceiling << "  " << info.default_source << "  "
                  << info.summary << '\n';
      }
      return kExitPass;
    }

    if (*suite) {
      options.max_n = max_n;
      options.samples = samples;
      const indcover::SuiteReport report = indcover::run_suite(suite_name, options);
      std::ofstream file;
      if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw indcover::ArgumentError("cannot write '" + out_path + "'");
      }
      std::ostream& out = out_path.empty() ? std::cout : file;
      if (format == "summary") {
        out << report.summary().dump(2) << '\n';
      } else {
        indcover::write_jsonl(out, report);
      }
      if (!out_path.empty()) std::cerr << report.summary().dump() << '\n';
      return report.passed() ? kExitPass : kExitCounterexample;
    }

    if (*gen) {
      const indcover::Graph g = indcover::make_named(family, params);
      std::cout << (as_dot ? indcover::to_dot(g) : indcover::encode_graph6(g) + "\n");
      return kExitPass;
    }

    if (*validate) {
      const auto file = indcover::parse_certificate(read_file(cert_path));
      const auto check = indcover::validate_certificate(file.certificate, file.graph, file.f);
      if (check.valid) {
        std::cout << "valid\n";
        return kExitPass;
      }
      std::cout << "invalid\n";
      for (const auto& problem : check.problems) std::cout << "  " << problem << '\n';
      return kExitCounterexample;
    }

    if (*extract) {
      const indcover::Graph g = indcover::parse_graph6(graph6);
      const indcover::DegreeTable f = f_values.empty() ? indcover::degree_table(g) : f_values;
      std::optional<indcover::VertexSet> a;
      if (!cover.empty()) {
        a.emplace();
        for (int v : cover) {
          if (v < 0 || v >= g.order()) throw indcover::ArgumentError("--a vertex out of range");
          a->insert(v);
        }
      }
      const auto certificate = indcover::extract_reducible(g, f, a);
      std::cout << indcover::certificate_to_json(g, f, certificate).dump(2) << '\n';
      return kExitPass;
    }
  } catch (const indcover::HypothesisNotMet& e) {
    std::cerr << "hypothesis not met: " << e.what() << '\n';
    return kExitCounterexample;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
