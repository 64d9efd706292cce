#include <string>

#include "indcover/errors.hpp"
#include "indcover/orient.hpp"

namespace indcover {

namespace {

// Constructive shape: A independent and every arc inside V\A has its reverse.
void check_kernel_shape(const Digraph& d, VertexSet a) {
  if (!a.is_subset_of(d.vertices())) throw ArgumentError("A out of range");
  if (!d.is_independent(a)) throw ArgumentError("A is not independent in the digraph");
  const VertexSet b = d.vertices() - a;
  for (auto [u, v] : d.arcs()) {
    if (b.contains(u) && b.contains(v) && !d.out_neighbors(v).contains(u)) {
      throw ArgumentError("arc " + std::to_string(u) + "->" + std::to_string(v) +
                          " inside V\\A has no opposite arc");
    }
  }
}

VertexSet constructive_kernel(const Digraph& d, VertexSet a, VertexSet within) {
  VertexSet kernel;
  while (!within.empty()) {
    const VertexSet here_a = a & within;
    int undominated = -1;
    for (int v : within - here_a) {
      if (!d.out_neighbors(v).intersects(here_a)) {
        undominated = v;
        break;
      }
    }
    if (undominated < 0) return kernel | here_a;
    // Every neighbour of v has an arc into v, so v joins the kernel and N[v] leaves.
    kernel.insert(undominated);
    within -= d.adjacent(undominated) | VertexSet::single(undominated);
  }
  return kernel;
}

bool has_kernel(const Digraph& d, VertexSet within) {
  return find_kernel_exhaustive(d, within).has_value();
}

}  // namespace

bool is_kernel(const Digraph& d, VertexSet k, VertexSet within) {
  if (!k.is_subset_of(within) || !d.is_independent(k)) return false;
  for (int v : within - k) {
    if (!d.out_neighbors(v).intersects(k)) return false;
  }
  return true;
}

std::optional<VertexSet> find_kernel_exhaustive(const Digraph& d, VertexSet within) {
  const std::uint64_t all = within.bits();
  std::uint64_t sub = 0;
  while (true) {
    if (is_kernel(d, VertexSet(sub), within)) return VertexSet(sub);
    if (sub == all) return std::nullopt;
    sub = (sub - all) & all;
  }
}

std::optional<VertexSet> find_kernel(const Digraph& d, std::optional<VertexSet> a) {
  if (!a) return find_kernel_exhaustive(d, d.vertices());
  check_kernel_shape(d, *a);
  return constructive_kernel(d, *a, d.vertices());
}

KernelPerfectVerdict is_kernel_perfect(const Digraph& d, Execution exec) {
  if (d.order() > kMaxKernelPerfectOrder) {
    throw SizeError("is_kernel_perfect supports at most 10 vertices, got " +
                    std::to_string(d.order()));
  }
  const std::uint64_t count = std::uint64_t{1} << d.order();
  auto missing = first_index_where(
      count, [&](std::uint64_t bits) { return bits != 0 && !has_kernel(d, VertexSet(bits)); }, exec);
  KernelPerfectVerdict out;
  if (missing) {
    out.perfect = false;
    out.offending = VertexSet(*missing);
  }
  return out;
}

namespace {

// Depth-first over vertex pairs ordered by (larger, smaller); after the last pair touching
// vertex j the digraph on {0..j} is final and its subsets containing j are checked.
class KpSearch {
 public:
  KpSearch(const Graph& g, const DegreeTable& f, KpSearchSpace space, bool collect)
      : g_(g), space_(space), collect_(collect) {
    for (int j = 0; j < g.order(); ++j) {
      for (int i = 0; i < j; ++i) pairs_.emplace_back(i, j);
    }
    room_.resize(f.size());
    for (std::size_t v = 0; v < f.size(); ++v) room_[v] = f[v] - 1;
  }

  void run() {
    for (int r : room_) {
      if (r < 0) return;
    }
    descend(0, Digraph(g_.order()));
  }

  std::vector<Digraph> found;

 private:
  enum State { kNone, kForward, kBackward, kBoth };

  bool stop() const { return !collect_ && !found.empty(); }

  bool prefix_ok(const Digraph& d, int j) const {
    const VertexSet prefix = VertexSet::range(j);
    const VertexSet top = VertexSet::single(j);
    bool ok = true;
    for_each_subset(prefix, [&](VertexSet s) {
      if (ok && !has_kernel(d, s | top)) ok = false;
    });
    return ok;
  }

  void descend(std::size_t index, const Digraph& d) {
    if (stop()) return;
    if (index == pairs_.size()) {
      found.push_back(d);
      return;
    }
    auto [i, j] = pairs_[index];
    const bool edge = g_.has_edge(i, j);
    const bool closes_vertex = index + 1 == pairs_.size() || pairs_[index + 1].second != j;
    for (State s : {kNone, kForward, kBackward, kBoth}) {
      if (edge && s == kNone) continue;
      if (edge && s == kBoth && !space_.allow_doubled_edges) continue;
      if (!edge && s != kNone && !space_.allow_extra_arcs) continue;
      const int out_i = (s == kForward || s == kBoth) ? 1 : 0;
      const int out_j = (s == kBackward || s == kBoth) ? 1 : 0;
      if (room_[i] < out_i || room_[j] < out_j) continue;
      Digraph next = d;
      if (out_i) next.add_arc(i, j);
      if (out_j) next.add_arc(j, i);
      if (closes_vertex && !prefix_ok(next, j)) continue;
      room_[i] -= out_i;
      room_[j] -= out_j;
      descend(index + 1, next);
      room_[i] += out_i;
      room_[j] += out_j;
      if (stop()) return;
    }
  }

  const Graph& g_;
  KpSearchSpace space_;
  bool collect_;
  std::vector<Edge> pairs_;
  std::vector<int> room_;
};

void check_kp_input(const Graph& g, const DegreeTable& f) {
  if (g.order() > kMaxKpOrder) {
    throw SizeError("is_f_KP supports at most 5 vertices, got " + std::to_string(g.order()));
  }
  if (static_cast<int>(f.size()) != g.order()) throw ArgumentError("f table size mismatch");
}

}  // namespace

KpVerdict is_f_KP(const Graph& g, const DegreeTable& f, KpSearchSpace space) {
  check_kp_input(g, f);
  KpSearch search(g, f, space, false);
  search.run();
  KpVerdict out;
  if (!search.found.empty()) {
    out.is_kp = true;
    out.witness = search.found.front();
  }
  return out;
}

std::vector<Digraph> f_KP_witnesses(const Graph& g, const DegreeTable& f, KpSearchSpace space) {
  check_kp_input(g, f);
  KpSearch search(g, f, space, true);
  search.run();
  return std::move(search.found);
}

Digraph extend_d0_kp(const Graph& g, VertexSet h, const Digraph& h_witness) {
  if (h_witness.order() != g.order()) throw ArgumentError("witness order differs from graph order");
  if (h.empty()) throw ArgumentError("extend_d0_kp needs a nonempty starting set");
  if (h == g.vertices()) throw ArgumentError("nothing to extend: h already spans the graph");
  const VertexSet s = g.boundary(h);
  if (s.empty()) throw ArgumentError("no neighbours outside h: graph is disconnected");
  for (auto [u, v] : h_witness.arcs()) {
    if (!h.contains(u) || !h.contains(v)) throw ArgumentError("witness has an arc leaving h");
  }
  for (int v : h) {
    if (h_witness.out_degree(v) >= g.degree_in(v, h)) {
      throw ArgumentError("witness out-degree at " + std::to_string(v) + " is not below d_h");
    }
  }

  Digraph q = h_witness;
  for (int v : h) {
    for (int w : g.neighbors(v) & s) q.add_arc(v, w);
  }
  for (int v : s) {
    for (int w : g.neighbors(v) & s) {
      if (v < w) q.add_double(v, w);
    }
  }
  return q;
}

}  // namespace indcover
