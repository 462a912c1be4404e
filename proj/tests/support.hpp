#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sgi/graph.hpp"
#include "sgi/graph_io.hpp"
#include "sgi/random.hpp"

#ifndef SGI_FIXTURE_DIR
#error "SGI_FIXTURE_DIR must point at tests/fixtures"
#endif

namespace sgi::test {

using Pairs = std::vector<std::pair<std::string, std::string>>;

inline GraphPtr make_graph(const std::vector<std::string>& ids, const Pairs& edges) {
  std::vector<NodeRecord> nodes;
  for (const auto& id : ids) nodes.push_back({id, {}});
  std::vector<EdgeRecord> es;
  for (const auto& [u, v] : edges) es.push_back({u, v, {}, {}});
  return build_graph(std::move(nodes), std::move(es));
}

inline std::string nid(std::size_t i) { return (i < 10 ? "n0" : "n") + std::to_string(i); }

inline GraphPtr clique(std::size_t n) {
  std::vector<std::string> ids;
  Pairs es;
  for (std::size_t i = 0; i < n; ++i) ids.push_back(nid(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) es.emplace_back(nid(i), nid(j));
  return make_graph(ids, es);
}

inline GraphPtr path(std::size_t n) {
  std::vector<std::string> ids;
  Pairs es;
  for (std::size_t i = 0; i < n; ++i) ids.push_back(nid(i));
  for (std::size_t i = 1; i < n; ++i) es.emplace_back(nid(i - 1), nid(i));
  return make_graph(ids, es);
}

inline GraphPtr star(std::size_t leaves) {
  std::vector<std::string> ids{nid(0)};
  Pairs es;
  for (std::size_t i = 1; i <= leaves; ++i) {
    ids.push_back(nid(i));
    es.emplace_back(nid(0), nid(i));
  }
  return make_graph(ids, es);
}

// Hub A with five parallel edges to B and single edges to C and D.
inline GraphPtr sample_motif() {
  return make_graph({"A", "B", "C", "D"},
                    {{"A", "B"}, {"A", "B"}, {"A", "B"}, {"A", "B"}, {"A", "B"}, {"A", "C"}, {"A", "D"}});
}

inline GraphPtr three_groups() { return load_graph(std::string(SGI_FIXTURE_DIR) + "/three_groups.json"); }

inline Subgraph induced(const GraphPtr& g, std::vector<std::string> ids) {
  return induced_subgraph(g, ids);
}

inline NodeSet ids_of(const Multigraph& g) {
  NodeSet out;
  for (NodeIndex v = 0; v < g.node_count(); ++v) out.push_back(g.node_id(v));
  std::sort(out.begin(), out.end());
  return out;
}

// Random multigraph on n nodes: each pair joined with probability p by
// 1..max_mult parallel edges.
inline GraphPtr random_multigraph(Rng& rng, std::size_t n, double p, int max_mult = 3) {
  std::vector<std::string> ids;
  Pairs es;
  for (std::size_t i = 0; i < n; ++i) ids.push_back(nid(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.unit() >= p) continue;
      const auto m = rng.between(1, max_mult);
      for (int k = 0; k < m; ++k) es.emplace_back(nid(i), nid(j));
    }
  }
  // Shuffle edge order so parallel copies are not always adjacent.
  rng.shuffle(std::span(es));
  return make_graph(ids, es);
}

// The whole of s as a graph of its own (ids kept).
inline GraphPtr as_graph(const Subgraph& s) {
  const Multigraph& g = s.parent();
  std::vector<bool> keep_n(g.node_count(), false), keep_e(g.edge_count(), false);
  for (NodeIndex v : s.nodes()) keep_n[v] = true;
  for (EdgeIndex e : s.edges()) keep_e[e] = true;
  return g.restrict_to(keep_n, keep_e);
}

}  // namespace sgi::test
