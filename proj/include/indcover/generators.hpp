#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "indcover/graph.hpp"

namespace indcover {

/// Named families and their canonical labelings:
///   complete n          vertices 0..n-1
///   empty n             no edges
///   cycle n (n>=3)      edges i~i+1 mod n
///   path n (n>=1)       edges i~i+1
///   complete_bipartite a b   parts {0..a-1}, {a..a+b-1}
///   star k              K_{1,k} with centre 0
///   wheel k (k>=3)      hub 0 on the cycle 1..k
///   bowtie              triangles {0,1,2}, {2,3,4}
///   petersen            outer cycle 0..4, spokes i~i+5, inner pentagram i+5~(i+2 mod 5)+5
///   moser_spindle       apex 0; diamonds {0,1,2,3}, {0,4,5,6}; bridge 3~6
///   K4_minus_e          x=0, y=1 nonadjacent; a=2, b=3
///   O_n n (n>=3)        x=0, y=1, rest of K_n is 2..n-1; K_{n-1} is n..2n-2 with its first
///                       floor((n-1)/2) vertices joined to x and the others to y
/// Throws ArgumentError for unknown names or invalid parameters.
Graph make_named(std::string_view name, const std::vector<int>& params = {});

std::vector<std::string> named_families();

/// Disjoint union; vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace indcover
