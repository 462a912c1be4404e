#pragma once

// Transactional multigraph model: nodes with attribute maps, parallel
// attributed edges, subgraph views and connected components.
//
// Graphs are immutable once built and are shared through GraphPtr so that
// every Subgraph can keep its parent alive.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace sgi {

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using NodeIndex = std::uint32_t;
using EdgeIndex = std::uint32_t;

// null | number | boolean | string
using AttrValue = std::variant<std::monostate, double, bool, std::string>;
using AttrMap = std::map<std::string, AttrValue>;

struct NodeRecord {
  std::string id;
  AttrMap attrs;
};

struct EdgeRecord {
  std::string src;
  std::string dst;
  AttrMap attrs;
  std::string id;  // empty: assigned from the input position
};

struct Edge {
  std::string id;
  NodeIndex u = 0;
  NodeIndex v = 0;
  AttrMap attrs;

  NodeIndex other(NodeIndex x) const { return x == u ? v : u; }
};

class Multigraph;
using GraphPtr = std::shared_ptr<const Multigraph>;

class Multigraph {
 public:
  struct Adjacent {
    NodeIndex node;
    std::uint32_t multiplicity;
  };

  // Throws GraphError on duplicate ids, dangling endpoints or self-loops.
  // Missing attribute keys are filled with null so every node (and every
  // edge) carries the same key set.
  static GraphPtr build(std::vector<NodeRecord> nodes, std::vector<EdgeRecord> edges);

  std::size_t node_count() const { return node_ids_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& node_id(NodeIndex v) const { return node_ids_.at(v); }
  const AttrMap& node_attrs(NodeIndex v) const { return node_attrs_.at(v); }
  std::optional<NodeIndex> find_node(std::string_view id) const;
  NodeIndex node_index(std::string_view id) const;  // throws on unknown id

  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }
  std::optional<EdgeIndex> find_edge(std::string_view id) const;
  EdgeIndex edge_index(std::string_view id) const;

  // Incident edges in index order; parallel edges appear individually.
  std::span<const EdgeIndex> incident_edges(NodeIndex v) const { return incident_.at(v); }
  // Distinct neighbours sorted by index, with the number of parallel edges.
  std::span<const Adjacent> adjacency(NodeIndex v) const { return adjacency_.at(v); }

  std::size_t degree(NodeIndex v) const { return incident_.at(v).size(); }
  std::size_t neighbor_count(NodeIndex v) const { return adjacency_.at(v).size(); }
  std::uint32_t multiplicity(NodeIndex a, NodeIndex b) const;

  // Position of a node when all nodes are sorted by id.
  std::uint32_t node_rank(NodeIndex v) const { return node_rank_.at(v); }
  std::span<const NodeIndex> nodes_by_id() const { return nodes_by_id_; }

  const std::vector<std::string>& node_attribute_keys() const { return node_keys_; }
  const std::vector<std::string>& edge_attribute_keys() const { return edge_keys_; }

  // New graph keeping the flagged nodes and edges. Edges with a dropped
  // endpoint are dropped as well. Ids and attributes are preserved.
  GraphPtr restrict_to(const std::vector<bool>& keep_nodes,
                       const std::vector<bool>& keep_edges) const;

 private:
  Multigraph() = default;

  std::vector<std::string> node_ids_;
  std::vector<AttrMap> node_attrs_;
  std::unordered_map<std::string, NodeIndex> node_lookup_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, EdgeIndex> edge_lookup_;
  std::vector<std::vector<EdgeIndex>> incident_;
  std::vector<std::vector<Adjacent>> adjacency_;
  std::vector<std::uint32_t> node_rank_;
  std::vector<NodeIndex> nodes_by_id_;
  std::vector<std::string> node_keys_;
  std::vector<std::string> edge_keys_;
};

// Node records plus (src, dst, attrs) edge records; edge ids become
// "e<position>" in input order.
GraphPtr build_graph(std::vector<NodeRecord> nodes, std::vector<EdgeRecord> edges);

// A node set plus an edge subset of a parent graph. Every edge has both
// endpoints in the node set. Nodes and edges are kept sorted by index.
class Subgraph {
 public:
  Subgraph(GraphPtr parent, std::vector<NodeIndex> nodes, std::vector<EdgeIndex> edges);

  static Subgraph induced(GraphPtr parent, std::vector<NodeIndex> nodes);

  const Multigraph& parent() const { return *parent_; }
  const GraphPtr& parent_ptr() const { return parent_; }

  std::span<const NodeIndex> nodes() const { return nodes_; }
  std::span<const EdgeIndex> edges() const { return edges_; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool contains_node(NodeIndex v) const;
  bool contains_edge(EdgeIndex e) const;

  // Node ids in ascending id order.
  std::vector<std::string> node_ids() const;

  bool operator==(const Subgraph& other) const {
    return parent_ == other.parent_ && nodes_ == other.nodes_ && edges_ == other.edges_;
  }

 private:
  GraphPtr parent_;
  std::vector<NodeIndex> nodes_;
  std::vector<EdgeIndex> edges_;
};

// A collection of possibly overlapping subgraphs of one GoI type.
struct SgiSet {
  std::string goi_type;
  std::vector<Subgraph> members;

  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
  // Throws GraphError when members refer to different parent graphs.
  void validate() const;
};

// nodes must be node ids of g; all parallel copies of internal edges kept.
Subgraph induced_subgraph(const GraphPtr& g, std::span<const std::string> node_ids);

// Node-induced components ordered by their smallest node id.
std::vector<Subgraph> connected_components(const GraphPtr& g);

// Connectivity using only the edges of s. Empty subgraphs are not connected.
bool is_connected(const Subgraph& s);

}  // namespace sgi
