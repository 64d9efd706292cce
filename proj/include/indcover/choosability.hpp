#pragma once

#include <optional>
#include <vector>

#include "indcover/graph.hpp"

namespace indcover {

inline constexpr int kMaxChoosabilityOrder = 8;
inline constexpr int kMaxChoosabilityListTotal = 20;

/// Colour list per vertex.
using ListAssignment = std::vector<std::vector<int>>;

/// A proper colouring with every vertex coloured from its list, or nullopt.
std::optional<std::vector<int>> list_coloring(const Graph& g, const ListAssignment& lists);

struct ChoosabilityVerdict {
  bool choosable = true;
  std::optional<ListAssignment> counterexample;  ///< an f-assignment with no colouring
};

/// Exhaustive over f-assignments up to colour renaming: each list takes some earlier colours
/// and numbers its new colours consecutively. Vertices with f(v) > d(v) are set aside first.
/// Throws SizeError above 8 vertices or when sum f > 20; ArgumentError on a size mismatch.
ChoosabilityVerdict is_f_choosable(const Graph& g, const DegreeTable& f);

}  // namespace indcover
