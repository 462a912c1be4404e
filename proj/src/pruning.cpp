#include "sgi/pruning.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include <spdlog/spdlog.h>

#include "sgi/selection.hpp"

namespace sgi {

BadSets BadSets::none(const Multigraph& g) {
  return {std::vector<bool>(g.node_count(), false), std::vector<bool>(g.edge_count(), false)};
}

BadSets BadSets::all(const Multigraph& g) {
  return {std::vector<bool>(g.node_count(), true), std::vector<bool>(g.edge_count(), true)};
}

std::size_t BadSets::node_count() const { return static_cast<std::size_t>(std::count(nodes.begin(), nodes.end(), true)); }
std::size_t BadSets::edge_count() const { return static_cast<std::size_t>(std::count(edges.begin(), edges.end(), true)); }

Json bad_sets_to_json(const Multigraph& g, const BadSets& bad) {
  std::vector<std::string> nodes, edges;
  for (NodeIndex v = 0; v < g.node_count(); ++v)
    if (bad.nodes[v]) nodes.push_back(g.node_id(v));
  for (EdgeIndex e = 0; e < g.edge_count(); ++e)
    if (bad.edges[e]) edges.push_back(g.edge(e).id);
  std::sort(nodes.begin(), nodes.end());
  std::sort(edges.begin(), edges.end());
  return Json{{"v_bad", nodes}, {"e_bad", edges}};
}

std::string to_string(PruneStrategy s) {
  switch (s) {
    case PruneStrategy::simple: return "simple";
    case PruneStrategy::node: return "node";
    case PruneStrategy::edge: return "edge";
    case PruneStrategy::majority: return "majority";
  }
  return "?";
}

PruneStrategy prune_strategy_from_string(std::string_view s) {
  if (s == "simple") return PruneStrategy::simple;
  if (s == "node") return PruneStrategy::node;
  if (s == "edge") return PruneStrategy::edge;
  if (s == "majority") return PruneStrategy::majority;
  throw std::invalid_argument("unknown pruning strategy '" + std::string(s) + "'");
}

BadSets compute_bad_sets(const GraphPtr& g, const SgiSet& samples, const PruneConfig& cfg) {
  if (samples.empty()) throw std::invalid_argument("samples nonempty required");
  if (!(cfg.gamma_node > 0.0) || !(cfg.gamma_edge > 0.0)) {
    throw std::invalid_argument("pruning thresholds must be > 0");
  }
  for (const auto& s : samples.members) {
    if (s.parent_ptr() != g) throw GraphError("sample is not a subgraph of the input graph");
  }

  // Sample element features, deduplicated across overlapping samples.
  std::set<NodeIndex> sample_nodes;
  std::set<EdgeIndex> sample_edges;
  for (const auto& s : samples.members) {
    sample_nodes.insert(s.nodes().begin(), s.nodes().end());
    sample_edges.insert(s.edges().begin(), s.edges().end());
  }
  std::vector<FeatureVector> node_refs, edge_refs;
  for (NodeIndex v : sample_nodes) node_refs.push_back(node_features(*g, v, cfg.node_schema));
  for (EdgeIndex e : sample_edges) edge_refs.push_back(edge_features(*g, e, cfg.edge_schema));
  Standardizer zn, ze;
  if (cfg.node_schema.standardize()) {
    zn = Standardizer(node_refs);
    for (auto& f : node_refs) f = zn.apply(f);
  }
  if (cfg.edge_schema.standardize()) {
    ze = Standardizer(edge_refs);
    for (auto& f : edge_refs) f = ze.apply(f);
  }

  BadSets bad = BadSets::all(*g);
  for (NodeIndex v = 0; v < g->node_count(); ++v) {
    if (check(zn.apply(node_features(*g, v, cfg.node_schema)), node_refs, cfg.gamma_node)) {
      bad.nodes[v] = false;
    }
  }
  for (EdgeIndex e = 0; e < g->edge_count(); ++e) {
    if (check(ze.apply(edge_features(*g, e, cfg.edge_schema)), edge_refs, cfg.gamma_edge)) {
      bad.edges[e] = false;
    }
  }
  return bad;
}

double edge_majority(const Multigraph& g, NodeIndex v, const std::vector<bool>& e_bad) {
  if (v >= g.node_count()) throw GraphError("unknown node index " + std::to_string(v));
  const auto incident = g.incident_edges(v);
  if (incident.empty()) return 0.0;
  std::size_t good = 0;
  for (EdgeIndex e : incident) good += !e_bad[e];
  return static_cast<double>(good) / static_cast<double>(incident.size());
}

GraphPtr prune(const Multigraph& g, const BadSets& bad, PruneStrategy strategy) {
  if (bad.nodes.size() != g.node_count() || bad.edges.size() != g.edge_count()) {
    throw GraphError("bad sets do not match the graph");
  }
  std::vector<bool> keep_nodes(g.node_count(), true);
  std::vector<bool> keep_edges(g.edge_count(), true);
  const bool drop_nodes = strategy != PruneStrategy::edge;
  const bool drop_edges = strategy != PruneStrategy::node;
  if (drop_nodes) {
    for (NodeIndex v = 0; v < g.node_count(); ++v) {
      if (!bad.nodes[v]) continue;
      const bool spared = strategy == PruneStrategy::majority && edge_majority(g, v, bad.edges) >= 0.5;
      keep_nodes[v] = spared;
    }
  }
  if (drop_edges) {
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) keep_edges[e] = !bad.edges[e];
  }
  return g.restrict_to(keep_nodes, keep_edges);
}

SgiSet components_as_predictions(const GraphPtr& g, const Multigraph& pruned,
                                 std::size_t min_component_size, std::string goi_type) {
  SgiSet out;
  out.goi_type = std::move(goi_type);
  // Components of the pruned graph, mapped back to original indices.
  std::vector<bool> seen(pruned.node_count(), false);
  for (NodeIndex root : pruned.nodes_by_id()) {
    if (seen[root]) continue;
    std::vector<NodeIndex> stack{root};
    std::vector<NodeIndex> members;
    seen[root] = true;
    while (!stack.empty()) {
      const NodeIndex v = stack.back();
      stack.pop_back();
      members.push_back(g->node_index(pruned.node_id(v)));
      for (const auto& a : pruned.adjacency(v)) {
        if (!seen[a.node]) {
          seen[a.node] = true;
          stack.push_back(a.node);
        }
      }
    }
    if (members.size() >= min_component_size) out.members.push_back(Subgraph::induced(g, std::move(members)));
  }
  return out;
}

SgiSet second_approach(const GraphPtr& g, const SgiSet& samples, const PruneConfig& cfg,
                       BadSets* bad_out) {
  const auto t0 = std::chrono::steady_clock::now();
  BadSets bad = compute_bad_sets(g, samples, cfg);
  spdlog::info("second approach: |V_bad| = {}, |E_bad| = {}", bad.node_count(), bad.edge_count());
  const auto pruned = prune(*g, bad, cfg.strategy);
  spdlog::info("second approach: {} pruning left {} nodes, {} edges", to_string(cfg.strategy),
               pruned->node_count(), pruned->edge_count());
  auto out = components_as_predictions(g, *pruned, cfg.min_component_size, samples.goi_type);
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  spdlog::info("second approach: {} components in {:.1f} ms", out.size(), ms);
  if (bad_out) *bad_out = std::move(bad);
  return out;
}

}  // namespace sgi
