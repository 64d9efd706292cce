#include "indcover/dot.hpp"

#include <map>
#include <sstream>

namespace indcover {

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const Digraph& d, const std::string& name) {
  std::map<Arc, int> counts;
  for (const Arc& a : d.arcs()) ++counts[a];
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (int v = 0; v < d.order(); ++v) out << "  " << v << ";\n";
  for (const auto& [arc, mult] : counts) {
    out << "  " << arc.first << " -> " << arc.second;
    if (mult > 1) out << " [label=\"x" << mult << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace indcover
