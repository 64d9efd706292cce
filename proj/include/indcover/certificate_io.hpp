#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "indcover/graph.hpp"
#include "indcover/reduce.hpp"

namespace indcover {

/// A certificate together with the graph and f it was issued for.
struct CertificateFile {
  Graph graph;
  DegreeTable f;
  Certificate certificate;
};

/// {"graph6", "f", "h_vertices", "f_h" (parallel to h_vertices), "arcs": [[from, to, count]]}
nlohmann::json certificate_to_json(const Graph& g, const DegreeTable& f, const Certificate& cert);

/// Throws FormatError on malformed JSON, missing fields or bad graph6.
CertificateFile certificate_from_json(const nlohmann::json& doc);
CertificateFile parse_certificate(const std::string& text);

struct CertificateCheck {
  bool valid = true;
  std::vector<std::string> problems;
};

/// H nonempty inside V(g), f_h = f + d_H - d_G, arcs inside H covering its edges,
/// kernel-perfect, and f_h(v) >= d+(v) + 1.
CertificateCheck validate_certificate(const Certificate& cert, const Graph& g, const DegreeTable& f);

}  // namespace indcover
