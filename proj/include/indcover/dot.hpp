#pragma once

#include <string>

#include "indcover/digraph.hpp"
#include "indcover/graph.hpp"

namespace indcover {

/// Graphviz text for visual inspection.
std::string to_dot(const Graph& g, const std::string& name = "G");
/// Each distinct arc appears once, annotated with its multiplicity when greater than one.
/// Opposite arcs are rendered as two arcs.
std::string to_dot(const Digraph& d, const std::string& name = "D");

}  // namespace indcover
