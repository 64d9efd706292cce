#pragma once

#include <optional>
#include <string>
#include <vector>

#include "indcover/digraph.hpp"
#include "indcover/graph.hpp"
#include "indcover/parallel.hpp"
#include "indcover/structure.hpp"

namespace indcover {

/// An induced subgraph H with a kernel-perfect digraph whose out-degrees stay below f_h.
/// The digraph and f_h use the labels of the originating graph; f_h is 0 outside H.
struct Certificate {
  VertexSet h_vertices;
  Digraph digraph;
  DegreeTable f_h;
};

/// f(v) + d_H(v) - d_G(v) on h, 0 elsewhere.
DegreeTable reduced_budget(const Graph& g, const DegreeTable& f, VertexSet h);

/// Peels violating sets off G until build_kernel_perfect succeeds on (H, A ∩ V(H), f_H).
/// `a` defaults to the mic witness. Throws HypothesisNotMet when ||A, V|| < sum (d(v)+1-f(v)),
/// ArgumentError when A is not independent or f(v) > d(v)+1 somewhere.
Certificate extract_reducible(const Graph& g, const DegreeTable& f,
                              std::optional<VertexSet> a = std::nullopt);

inline constexpr int kMaxReducibleOrder = 7;

struct OcWitness {
  VertexSet h;
  DegreeTable f_h;  ///< delta(G) + d_H - d_G on h
};

/// First nonempty induced H, by size then lexicographically, that is online f_H-choosable
/// with f_H = delta(G) + d_H - d_G. Parallel runs return the same witness.
/// Throws SizeError above 7 vertices.
std::optional<OcWitness> is_oc_reducible(const Graph& g, Execution exec = Execution::serial());

struct MicStrength {
  bool irreducible = false;
  int mic = 0;
  int bound = 0;  ///< 2||G|| - (delta-1)|G| - 1
  bool holds = true;
  std::optional<OcWitness> reduction;
};

/// Throws SizeError above 7 vertices, ArgumentError on the empty graph.
MicStrength check_mic_strength(const Graph& g, Execution exec = Execution::serial());

inline constexpr int kMaxCutLemmaOrder = 6;

struct CutLemmaCheck {
  bool rest_choosable = false;   ///< G - H online f-choosable
  bool part_choosable = false;   ///< H online f_H-choosable
  bool whole_choosable = false;  ///< G online f-choosable
  bool holds() const { return !(rest_choosable && part_choosable) || whole_choosable; }
};

/// Throws SizeError above 6 vertices.
CutLemmaCheck cut_lemma_check(const Graph& g, const DegreeTable& f, VertexSet h);

/// One of the inequalities about OC-irreducible graphs with an edgeless high part.
struct PrecursorCheck {
  std::string name;
  bool applicable = false;
  std::string skip_reason;
  std::optional<InequalitySides> sides;  ///< absent for the Gallai-forest statement
  bool holds = true;
};

/// mic < |H|+|G|, (delta-1)|H| < |L|, 2||G|| < (delta+1/delta)|G|, sigma < (4-2/delta)|H|,
/// |H| < delta(delta-3)/((delta-1)(delta-5)) c(L) when Delta >= 7 without K_Delta, and
/// L(G) a Gallai forest. `irreducible` is the caller's OC-irreducibility verdict.
/// The sigma bound is only asserted for delta >= 3: below that the strict inequality fails
/// (P3 is irreducible with sigma = 4 > 2), and sigma_bound_gap gives the exact excess.
std::vector<PrecursorCheck> ore_precursor_checks(const Graph& g, bool irreducible);

/// sigma - (4-2/delta)|H| = (2/delta-1)(|L| - (delta-1)|H|) for an edgeless high part and
/// Delta = delta+1. Returns the left side; ArgumentError when those hypotheses fail.
Rational sigma_bound_gap(const Graph& g);

/// d0-KP witness of a connected non-Gallai tree: an extracted certificate for f = d0, then
/// extend_d0_kp until the whole vertex set is covered. Throws HypothesisNotMet on a Gallai
/// tree, ArgumentError when g is disconnected.
Digraph d0_kp_witness(const Graph& g);

}  // namespace indcover
