#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "indcover/digraph.hpp"
#include "indcover/graph.hpp"
#include "indcover/parallel.hpp"

namespace indcover {

/// Either an orientation meeting the demands or a vertex set X with
/// sum_{v in X} demand(v) - ||X|| - ||X, V\X|| = deficiency > 0.
struct OrientationResult {
  std::optional<Digraph> orientation;
  VertexSet violating;
  int deficiency = 0;

  bool feasible() const { return orientation.has_value(); }
};

/// Orientation with in-degree(v) >= demand(v) for all v, decided by max-flow. On failure the
/// violating set is the sink side of the minimum cut nearest the sink (inclusion-minimal among
/// maximally deficient sets). Throws ArgumentError on negative demands or a size mismatch.
OrientationResult orient_with_indegrees(const Graph& g, const DegreeTable& demand);

/// sum_{v in X} demand(v) - ||X|| - ||X, V\X||.
int orientation_deficiency(const Graph& g, const DegreeTable& demand, VertexSet x);

/// Kernel-perfect digraph on g[within] from an independent set A ⊆ within:
/// edges inside B = within\A doubled, edges between A and B oriented by
/// orient_with_indegrees on the bipartite part with demand d(v)+1-f(v), so out-degree(v) <=
/// f(v)-1. On failure returns the violating set of that orientation problem.
/// Throws ArgumentError if A is not independent, A ⊄ within, or f(v) > d(v)+1 somewhere.
OrientationResult build_kernel_perfect(const Graph& g, VertexSet a, const DegreeTable& f,
                                       VertexSet within);
inline OrientationResult build_kernel_perfect(const Graph& g, VertexSet a, const DegreeTable& f) {
  return build_kernel_perfect(g, a, f, g.vertices());
}

/// K ⊆ within is independent in d and every vertex of within\K has an arc into K.
bool is_kernel(const Digraph& d, VertexSet k, VertexSet within);

/// Exhaustive: the kernel of d[within] with the smallest bitmask, or nullopt.
std::optional<VertexSet> find_kernel_exhaustive(const Digraph& d, VertexSet within);

/// With `a`: the constructive kernel of a digraph whose arcs inside V\A all come in
/// opposite pairs and with A independent (ArgumentError otherwise). Without `a`: exhaustive.
std::optional<VertexSet> find_kernel(const Digraph& d, std::optional<VertexSet> a = std::nullopt);

/// Largest digraph order is_kernel_perfect accepts.
inline constexpr int kMaxKernelPerfectOrder = 10;

struct KernelPerfectVerdict {
  bool perfect = true;
  std::optional<VertexSet> offending;  ///< induced subdigraph without a kernel
};

/// Every induced subdigraph has a kernel. Throws SizeError above 10 vertices.
KernelPerfectVerdict is_kernel_perfect(const Digraph& d, Execution exec = Execution::serial());

struct AlonTarsiCount {
  std::int64_t even = 0;  ///< EE: even spanning Eulerian subgraphs
  std::int64_t odd = 0;   ///< EO
  std::int64_t diff() const { return even - odd; }
};

inline constexpr int kMaxAlonTarsiArcs = 24;

/// Counts arc subsets with in-degree = out-degree everywhere, split by parity.
/// Depth-first over arcs, pruning a branch once a vertex whose last arc has been decided is
/// unbalanced. Throws SizeError above 24 arcs.
AlonTarsiCount alon_tarsi_diff(const Digraph& d);

struct AtVerdict {
  bool is_at = false;
  std::optional<Digraph> witness;
  std::uint64_t witness_index = 0;  ///< reversal bitmask, see orientation_from_bits
  AlonTarsiCount counts;
};

inline constexpr int kMaxAtEdges = 14;

/// Some orientation has out-degree(v) <= f(v)-1 and EE != EO. The witness is the lowest
/// reversal bitmask. Throws SizeError above 14 edges.
AtVerdict is_f_AT(const Graph& g, const DegreeTable& f, Execution exec = Execution::serial());

/// Which supergraph arcs the f-KP search may use.
struct KpSearchSpace {
  bool allow_doubled_edges = true;  ///< an edge may carry arcs both ways
  bool allow_extra_arcs = true;     ///< a non-edge may carry arcs

  static constexpr KpSearchSpace full() { return {true, true}; }
  static constexpr KpSearchSpace strict_orientations() { return {false, false}; }
};

inline constexpr int kMaxKpOrder = 5;

struct KpVerdict {
  bool is_kp = false;
  std::optional<Digraph> witness;
};

/// Kernel-perfect digraph on V(g), at most one arc per direction per pair, carrying every edge
/// of g, with out-degree(v) <= f(v)-1. Throws SizeError above 5 vertices.
KpVerdict is_f_KP(const Graph& g, const DegreeTable& f, KpSearchSpace space = KpSearchSpace::full());

/// Every witness in the search space, in search order.
std::vector<Digraph> f_KP_witnesses(const Graph& g, const DegreeTable& f,
                                    KpSearchSpace space = KpSearchSpace::full());

/// Grows a d0-KP witness on g[h] to g[h ∪ S], S = N(h)\h: arcs from h into S and doubled
/// arcs inside S. Throws ArgumentError if h = V(g), S is empty, the witness has arcs leaving h
/// or out-degree(v) >= d_h(v) for some v in h.
Digraph extend_d0_kp(const Graph& g, VertexSet h, const Digraph& h_witness);

}  // namespace indcover
