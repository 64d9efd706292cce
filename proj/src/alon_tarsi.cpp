#include <string>

#include "indcover/errors.hpp"
#include "indcover/orient.hpp"

namespace indcover {

namespace {

class EulerianCounter {
 public:
  explicit EulerianCounter(const Digraph& d)
      : arcs_(d.arcs()), balance_(d.order(), 0), closing_(arcs_.size()) {
    std::vector<int> last(d.order(), -1);
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
      last[arcs_[i].first] = static_cast<int>(i);
      last[arcs_[i].second] = static_cast<int>(i);
    }
    for (int v = 0; v < d.order(); ++v) {
      if (last[v] >= 0) closing_[last[v]].push_back(v);
    }
  }

  AlonTarsiCount run() {
    descend(0, 0);
    return count_;
  }

 private:
  bool settled(std::size_t index) const {
    for (int v : closing_[index]) {
      if (balance_[v] != 0) return false;
    }
    return true;
  }

  void descend(std::size_t index, int taken) {
    if (index == arcs_.size()) {
      (taken % 2 == 0 ? count_.even : count_.odd) += 1;
      return;
    }
    if (settled(index)) descend(index + 1, taken);
    auto [u, v] = arcs_[index];
    ++balance_[u];
    --balance_[v];
    if (settled(index)) descend(index + 1, taken + 1);
    --balance_[u];
    ++balance_[v];
  }

  const std::vector<Arc>& arcs_;
  std::vector<int> balance_;
  std::vector<std::vector<int>> closing_;
  AlonTarsiCount count_;
};

}  // namespace

AlonTarsiCount alon_tarsi_diff(const Digraph& d) {
  if (d.arc_count() > kMaxAlonTarsiArcs) {
    throw SizeError("alon_tarsi_diff supports at most 24 arcs, got " +
                    std::to_string(d.arc_count()));
  }
  return EulerianCounter(d).run();
}

AtVerdict is_f_AT(const Graph& g, const DegreeTable& f, Execution exec) {
  if (g.size() > kMaxAtEdges) {
    throw SizeError("is_f_AT supports at most 14 edges, got " + std::to_string(g.size()));
  }
  if (static_cast<int>(f.size()) != g.order()) throw ArgumentError("f table size mismatch");
  const std::uint64_t count = std::uint64_t{1} << g.size();
  auto fits = [&](const Digraph& d) {
    for (int v = 0; v < g.order(); ++v) {
      if (d.out_degree(v) > f[v] - 1) return false;
    }
    return true;
  };
  auto hit = first_index_where(
      count,
      [&](std::uint64_t bits) {
        const Digraph d = orientation_from_bits(g, bits);
        return fits(d) && alon_tarsi_diff(d).diff() != 0;
      },
      exec);
  AtVerdict out;
  if (hit) {
    out.is_at = true;
    out.witness_index = *hit;
    out.witness = orientation_from_bits(g, *hit);
    out.counts = alon_tarsi_diff(*out.witness);
  }
  return out;
}

}  // namespace indcover
