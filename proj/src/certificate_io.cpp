#include <map>

#include "indcover/certificate_io.hpp"
#include "indcover/errors.hpp"
#include "indcover/graph6.hpp"
#include "indcover/orient.hpp"

namespace indcover {

using nlohmann::json;

json certificate_to_json(const Graph& g, const DegreeTable& f, const Certificate& cert) {
  json doc;
  doc["graph6"] = encode_graph6(g);
  doc["f"] = f;
  doc["h_vertices"] = cert.h_vertices.to_vector();
  json f_h = json::array();
  for (int v : cert.h_vertices) f_h.push_back(cert.f_h[v]);
  doc["f_h"] = f_h;
  std::map<Arc, int> counts;
  for (const Arc& arc : cert.digraph.arcs()) ++counts[arc];
  json arcs = json::array();
  for (auto [arc, count] : counts) arcs.push_back({arc.first, arc.second, count});
  doc["arcs"] = arcs;
  return doc;
}

CertificateFile certificate_from_json(const json& doc) {
  try {
    CertificateFile out;
    out.graph = parse_graph6(doc.at("graph6").get<std::string>());
    const int n = out.graph.order();
    out.f = doc.at("f").get<DegreeTable>();
    if (static_cast<int>(out.f.size()) != n) throw FormatError("f has the wrong length");

    Certificate& cert = out.certificate;
    for (int v : doc.at("h_vertices").get<std::vector<int>>()) {
      if (v < 0 || v >= n) throw FormatError("h vertex out of range");
      cert.h_vertices.insert(v);
    }
    const auto f_h = doc.at("f_h").get<std::vector<int>>();
    if (static_cast<int>(f_h.size()) != cert.h_vertices.size()) {
      throw FormatError("f_h length differs from h_vertices");
    }
    cert.f_h.assign(n, 0);
    std::size_t i = 0;
    for (int v : cert.h_vertices) cert.f_h[v] = f_h[i++];

    cert.digraph = Digraph(n);
    for (const json& arc : doc.at("arcs")) {
      const auto triple = arc.get<std::vector<int>>();
      if (triple.size() != 3 || triple[2] < 1) throw FormatError("arc must be [from, to, count]");
      if (triple[0] < 0 || triple[0] >= n || triple[1] < 0 || triple[1] >= n ||
          triple[0] == triple[1]) {
        throw FormatError("arc endpoint out of range");
      }
      for (int k = 0; k < triple[2]; ++k) cert.digraph.add_arc(triple[0], triple[1]);
    }
    return out;
  } catch (const json::exception& e) {
    throw FormatError(std::string("certificate: ") + e.what());
  }
}

CertificateFile parse_certificate(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("certificate is not JSON: ") + e.what());
  }
  return certificate_from_json(doc);
}

CertificateCheck validate_certificate(const Certificate& cert, const Graph& g,
                                      const DegreeTable& f) {
  CertificateCheck out;
  auto fail = [&](std::string problem) {
    out.valid = false;
    out.problems.push_back(std::move(problem));
  };
  const VertexSet h = cert.h_vertices;
  if (h.empty()) fail("h is empty");
  if (!h.is_subset_of(g.vertices())) fail("h leaves the vertex set");
  if (static_cast<int>(f.size()) != g.order()) fail("f has the wrong length");
  if (cert.digraph.order() != g.order()) fail("digraph order differs from graph order");
  if (static_cast<int>(cert.f_h.size()) != g.order()) fail("f_h has the wrong length");
  if (!out.valid) return out;

  const DegreeTable expected = reduced_budget(g, f, h);
  for (int v : h) {
    if (cert.f_h[v] != expected[v]) {
      fail("f_h(" + std::to_string(v) + ") = " + std::to_string(cert.f_h[v]) + ", expected " +
           std::to_string(expected[v]));
    }
  }
  for (auto [u, v] : cert.digraph.arcs()) {
    if (!h.contains(u) || !h.contains(v)) {
      fail("arc " + std::to_string(u) + "->" + std::to_string(v) + " leaves h");
    }
  }
  for (auto [u, v] : g.edges()) {
    if (h.contains(u) && h.contains(v) && !cert.digraph.adjacent(u).contains(v)) {
      fail("edge " + std::to_string(u) + "-" + std::to_string(v) + " carries no arc");
    }
  }
  for (int v : h) {
    if (cert.f_h[v] < cert.digraph.out_degree(v) + 1) {
      fail("out-degree of " + std::to_string(v) + " is not below f_h");
    }
  }
  if (!out.valid) return out;
  if (h.size() > kMaxKernelPerfectOrder) {
    fail("h too large for the exhaustive kernel check");
    return out;
  }
  const KernelPerfectVerdict kp = is_kernel_perfect(cert.digraph.induced(h));
  if (!kp.perfect) fail("induced subdigraph without a kernel");
  return out;
}

}  // namespace indcover
