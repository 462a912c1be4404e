#include <algorithm>
#include <numeric>

#include "sgi/candidates.hpp"

namespace sgi {

namespace {

// Simple projection of a sample or of an intermediate query: nodes sorted
// by id, pairwise multiplicities (0 = not adjacent).
struct Operand {
  std::vector<std::string> ids;
  std::vector<AttrMap> attrs;
  std::vector<std::vector<std::uint32_t>> mult;

  std::size_t size() const { return ids.size(); }
  std::size_t edge_count() const {
    std::size_t m = 0;
    for (std::size_t a = 0; a < size(); ++a)
      for (std::size_t b = a + 1; b < size(); ++b) m += mult[a][b] > 0;
    return m;
  }
};

Operand operand_of(const Subgraph& s) {
  const Multigraph& g = s.parent();
  std::vector<NodeIndex> nodes(s.nodes().begin(), s.nodes().end());
  std::sort(nodes.begin(), nodes.end(),
            [&](NodeIndex a, NodeIndex b) { return g.node_rank(a) < g.node_rank(b); });
  Operand op;
  const std::size_t n = nodes.size();
  op.mult.assign(n, std::vector<std::uint32_t>(n, 0));
  for (NodeIndex v : nodes) {
    op.ids.push_back(g.node_id(v));
    op.attrs.push_back(g.node_attrs(v));
  }
  auto local = [&](NodeIndex v) {
    return static_cast<std::size_t>(
        std::find(nodes.begin(), nodes.end(), v) - nodes.begin());
  };
  for (EdgeIndex e : s.edges()) {
    const Edge& ed = g.edge(e);
    const auto a = local(ed.u), b = local(ed.v);
    ++op.mult[a][b];
    ++op.mult[b][a];
  }
  return op;
}

QueryGraph query_of(const Operand& op, const std::vector<int>& keep) {
  std::vector<NodeRecord> nodes;
  std::vector<std::size_t> kept;
  for (std::size_t a = 0; a < op.size(); ++a) {
    if (keep[a]) {
      nodes.push_back({op.ids[a], op.attrs[a]});
      kept.push_back(a);
    }
  }
  std::vector<EdgeRecord> edges;
  std::vector<std::uint32_t> mins;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (std::size_t j = i + 1; j < kept.size(); ++j) {
      const auto m = op.mult[kept[i]][kept[j]];
      if (m > 0) {
        edges.push_back({op.ids[kept[i]], op.ids[kept[j]], {}, "q" + std::to_string(edges.size())});
        mins.push_back(m);
      }
    }
  }
  return QueryGraph{Multigraph::build(std::move(nodes), std::move(edges)), std::move(mins)};
}

// Exact branch and bound over partial injective maps A -> B. Vertices of A
// are decided in id order, trying images in id order before exclusion, so
// leaves are met in lexicographic order of the mapping and the first
// optimum found is the tie-break winner; later equal-size subtrees are cut.
class PairwiseMcs {
 public:
  PairwiseMcs(const Operand& a, const Operand& b) : a_(a), b_(b) {
    map_.assign(a_.size(), kUndecided);
    used_.assign(b_.size(), false);
  }

  // Returns the image of each A vertex (-1 = unmapped) for the best
  // solution, or empty when A and B share no edge.
  std::vector<int> solve() {
    search(0, 0);
    return best_map_;
  }

 private:
  static constexpr int kUndecided = -2;
  static constexpr int kExcluded = -1;

  bool common(std::size_t x, std::size_t y) const {
    return map_[x] >= 0 && map_[y] >= 0 && a_.mult[x][y] > 0 &&
           b_.mult[static_cast<std::size_t>(map_[x])][static_cast<std::size_t>(map_[y])] > 0;
  }

  // Mapped vertices must end up in one component of the common graph; a
  // component is closed once all its A-neighbours are decided.
  bool can_still_connect(std::size_t next) const {
    const std::size_t n = a_.size();
    std::vector<int> comp(n, -1);
    int components = 0;
    bool closed_found = false;
    for (std::size_t s = 0; s < n; ++s) {
      if (map_[s] < 0 || comp[s] >= 0) continue;
      bool open = false;
      std::vector<std::size_t> stack{s};
      comp[s] = components;
      while (!stack.empty()) {
        const auto x = stack.back();
        stack.pop_back();
        for (std::size_t y = 0; y < n; ++y) {
          if (a_.mult[x][y] == 0) continue;
          if (y >= next) open = true;
          if (comp[y] < 0 && common(x, y)) {
            comp[y] = components;
            stack.push_back(y);
          }
        }
      }
      closed_found = closed_found || !open;
      ++components;
    }
    if (components == 0) return true;
    if (components == 1) return true;
    return !closed_found;
  }

  void evaluate_leaf() {
    std::size_t edges = 0, nodes = 0;
    const std::size_t n = a_.size();
    for (std::size_t x = 0; x < n; ++x) {
      if (map_[x] < 0) continue;
      ++nodes;
      bool touched = false;
      for (std::size_t y = 0; y < n; ++y) {
        if (common(x, y)) {
          touched = true;
          if (x < y) ++edges;
        }
      }
      if (!touched) return;
    }
    if (edges == 0 || !can_still_connect(n)) return;
    if (!best_map_.empty() && std::pair(edges, nodes) <= std::pair(best_edges_, best_nodes_)) return;
    best_edges_ = edges;
    best_nodes_ = nodes;
    best_map_ = map_;
  }

  std::pair<std::size_t, std::size_t> bound(std::size_t next, std::size_t current_edges,
                                            std::size_t mapped) const {
    const std::size_t n = a_.size(), m = b_.size();
    std::size_t rem_a = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (map_[x] == kExcluded) continue;
      for (std::size_t y = x + 1; y < n; ++y) {
        if (map_[y] == kExcluded || a_.mult[x][y] == 0) continue;
        if (x >= next || y >= next) ++rem_a;
      }
    }
    std::size_t rem_b = 0;
    std::size_t free_b = 0;
    for (std::size_t p = 0; p < m; ++p) {
      free_b += !used_[p];
      for (std::size_t q = p + 1; q < m; ++q) {
        if (b_.mult[p][q] > 0 && (!used_[p] || !used_[q])) ++rem_b;
      }
    }
    return {current_edges + std::min(rem_a, rem_b), mapped + std::min(n - next, free_b)};
  }

  void search(std::size_t next, std::size_t current_edges) {
    const std::size_t n = a_.size();
    if (next == n) {
      evaluate_leaf();
      return;
    }
    std::size_t mapped = 0;
    for (std::size_t x = 0; x < next; ++x) mapped += map_[x] >= 0;
    const auto [be, bn] = bound(next, current_edges, mapped);
    if (be == 0) return;
    if (!best_map_.empty() && std::pair(be, bn) <= std::pair(best_edges_, best_nodes_)) return;
    if (!can_still_connect(next)) return;

    bool has_neighbor = false;
    for (std::size_t y = 0; y < n; ++y) has_neighbor = has_neighbor || a_.mult[next][y] > 0;
    if (has_neighbor) {
      for (std::size_t w = 0; w < b_.size(); ++w) {
        if (used_[w]) continue;
        map_[next] = static_cast<int>(w);
        used_[w] = true;
        std::size_t gained = 0;
        for (std::size_t x = 0; x < next; ++x) gained += common(x, next);
        search(next + 1, current_edges + gained);
        used_[w] = false;
      }
    }
    map_[next] = kExcluded;
    search(next + 1, current_edges);
    map_[next] = kUndecided;
  }

  const Operand& a_;
  const Operand& b_;
  std::vector<int> map_;
  std::vector<bool> used_;
  std::vector<int> best_map_;
  std::size_t best_edges_ = 0;
  std::size_t best_nodes_ = 0;
};

Operand pairwise(const Operand& a, const Operand& b) {
  const auto map = PairwiseMcs(a, b).solve();
  if (map.empty()) throw CandidateError("samples share no structure");
  Operand out = a;
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = 0; y < a.size(); ++y) {
      const bool kept = map[x] >= 0 && map[y] >= 0 && a.mult[x][y] > 0 &&
                        b.mult[static_cast<std::size_t>(map[x])][static_cast<std::size_t>(map[y])] > 0;
      out.mult[x][y] =
          kept ? std::min(a.mult[x][y],
                          b.mult[static_cast<std::size_t>(map[x])][static_cast<std::size_t>(map[y])])
               : 0;
    }
  }
  // Drop unmapped vertices.
  std::vector<std::size_t> keep;
  for (std::size_t x = 0; x < a.size(); ++x)
    if (map[x] >= 0) keep.push_back(x);
  Operand packed;
  for (auto x : keep) {
    packed.ids.push_back(out.ids[x]);
    packed.attrs.push_back(out.attrs[x]);
  }
  packed.mult.assign(keep.size(), std::vector<std::uint32_t>(keep.size(), 0));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) packed.mult[i][j] = out.mult[keep[i]][keep[j]];
  return packed;
}

bool operand_connected(const Operand& op) {
  if (op.size() == 0) return false;
  std::vector<bool> seen(op.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 0;
  while (!stack.empty()) {
    const auto x = stack.back();
    stack.pop_back();
    ++reached;
    for (std::size_t y = 0; y < op.size(); ++y) {
      if (op.mult[x][y] > 0 && !seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  return reached == op.size();
}

}  // namespace

QueryGraph maximum_common_subgraph(const SgiSet& samples) {
  if (samples.empty()) throw CandidateError("maximum common subgraph of an empty sample set");
  samples.validate();
  for (const auto& s : samples.members) {
    if (s.node_count() > kMaxMcsNodes) {
      throw CandidateError("sample of " + std::to_string(s.node_count()) +
                           " nodes exceeds the exact search bound of " +
                           std::to_string(kMaxMcsNodes));
    }
  }
  Operand acc = operand_of(samples.members.front());
  if (samples.size() == 1) {
    if (acc.edge_count() == 0) throw CandidateError("samples share no structure");
    if (!operand_connected(acc)) acc = pairwise(acc, acc);
  }
  for (std::size_t k = 1; k < samples.size(); ++k) {
    acc = pairwise(acc, operand_of(samples.members[k]));
  }
  return query_of(acc, std::vector<int>(acc.size(), 1));
}

}  // namespace sgi
