#pragma once

// Second approach: flag nodes and edges unlike every sample element, prune
// them, and report the surviving connected components.

#include <vector>

#include "sgi/features.hpp"
#include "sgi/graph.hpp"
#include "sgi/graph_io.hpp"

namespace sgi {

// Elements predicted to lie outside every SGI, as masks over the parent
// graph's node and edge indices.
struct BadSets {
  std::vector<bool> nodes;
  std::vector<bool> edges;

  static BadSets none(const Multigraph& g);
  static BadSets all(const Multigraph& g);
  std::size_t node_count() const;
  std::size_t edge_count() const;
};

Json bad_sets_to_json(const Multigraph& g, const BadSets& bad);

enum class PruneStrategy { simple, node, edge, majority };

std::string to_string(PruneStrategy s);
PruneStrategy prune_strategy_from_string(std::string_view s);

struct PruneConfig {
  FeatureSchema node_schema;
  FeatureSchema edge_schema;
  double gamma_node = 0.1;
  double gamma_edge = 0.1;
  PruneStrategy strategy = PruneStrategy::majority;
  std::size_t min_component_size = 2;
};

// Element features of samples are taken in the context of the full graph.
BadSets compute_bad_sets(const GraphPtr& g, const SgiSet& samples, const PruneConfig& cfg);

// Share of v's incident edges (parallel edges counted) outside e_bad; 0 for
// isolated nodes.
double edge_majority(const Multigraph& g, NodeIndex v, const std::vector<bool>& e_bad);

// simple:   drop bad nodes and bad edges
// node:     drop bad nodes only
// edge:     drop bad edges only
// majority: drop bad edges, and bad nodes unless edge_majority >= 0.5
// Removing a node always removes its incident edges.
GraphPtr prune(const Multigraph& g, const BadSets& bad, PruneStrategy strategy);

// Components of the pruned graph with at least min_component_size nodes,
// each returned as the node-induced subgraph of the original graph.
SgiSet components_as_predictions(const GraphPtr& g, const Multigraph& pruned,
                                 std::size_t min_component_size, std::string goi_type);

SgiSet second_approach(const GraphPtr& g, const SgiSet& samples, const PruneConfig& cfg,
                       BadSets* bad_out = nullptr);

}  // namespace sgi
