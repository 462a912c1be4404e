#include "sgi/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace sgi {

namespace {

void fill_missing_keys(std::vector<AttrMap>& maps, std::vector<std::string>& keys_out) {
  std::set<std::string> keys;
  for (const auto& m : maps) {
    for (const auto& kv : m) keys.insert(kv.first);
  }
  for (auto& m : maps) {
    for (const auto& k : keys) m.try_emplace(k, std::monostate{});
  }
  keys_out.assign(keys.begin(), keys.end());
}

}  // namespace

GraphPtr Multigraph::build(std::vector<NodeRecord> nodes, std::vector<EdgeRecord> edges) {
  std::shared_ptr<Multigraph> g(new Multigraph());
  const std::size_t n = nodes.size();
  g->node_ids_.reserve(n);
  g->node_attrs_.reserve(n);
  for (auto& rec : nodes) {
    const auto idx = static_cast<NodeIndex>(g->node_ids_.size());
    if (!g->node_lookup_.emplace(rec.id, idx).second) {
      throw GraphError("duplicate node id '" + rec.id + "'");
    }
    g->node_ids_.push_back(std::move(rec.id));
    g->node_attrs_.push_back(std::move(rec.attrs));
  }

  std::vector<AttrMap> edge_attrs;
  edge_attrs.reserve(edges.size());
  g->edges_.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto& rec = edges[i];
    const std::string label = rec.id.empty() ? "#" + std::to_string(i) : "'" + rec.id + "'";
    auto su = g->find_node(rec.src);
    auto sv = g->find_node(rec.dst);
    if (!su || !sv) {
      throw GraphError("edge record " + label + " (" + rec.src + ", " + rec.dst +
                       ") has a dangling endpoint '" + (su ? rec.dst : rec.src) + "'");
    }
    if (*su == *sv) {
      throw GraphError("edge record " + label + " is a self-loop on '" + rec.src + "'");
    }
    Edge e;
    e.id = rec.id.empty() ? "e" + std::to_string(i) : std::move(rec.id);
    e.u = *su;
    e.v = *sv;
    const auto eidx = static_cast<EdgeIndex>(g->edges_.size());
    if (!g->edge_lookup_.emplace(e.id, eidx).second) {
      throw GraphError("duplicate edge id '" + e.id + "'");
    }
    edge_attrs.push_back(std::move(rec.attrs));
    g->edges_.push_back(std::move(e));
  }

  fill_missing_keys(g->node_attrs_, g->node_keys_);
  fill_missing_keys(edge_attrs, g->edge_keys_);
  for (std::size_t i = 0; i < g->edges_.size(); ++i) g->edges_[i].attrs = std::move(edge_attrs[i]);

  g->incident_.assign(n, {});
  for (EdgeIndex e = 0; e < g->edges_.size(); ++e) {
    g->incident_[g->edges_[e].u].push_back(e);
    g->incident_[g->edges_[e].v].push_back(e);
  }
  g->adjacency_.assign(n, {});
  for (NodeIndex v = 0; v < n; ++v) {
    std::vector<NodeIndex> others;
    others.reserve(g->incident_[v].size());
    for (EdgeIndex e : g->incident_[v]) others.push_back(g->edges_[e].other(v));
    std::sort(others.begin(), others.end());
    auto& adj = g->adjacency_[v];
    for (std::size_t i = 0; i < others.size();) {
      std::size_t j = i;
      while (j < others.size() && others[j] == others[i]) ++j;
      adj.push_back({others[i], static_cast<std::uint32_t>(j - i)});
      i = j;
    }
  }

  g->nodes_by_id_.resize(n);
  std::iota(g->nodes_by_id_.begin(), g->nodes_by_id_.end(), NodeIndex{0});
  std::sort(g->nodes_by_id_.begin(), g->nodes_by_id_.end(),
            [&](NodeIndex a, NodeIndex b) { return g->node_ids_[a] < g->node_ids_[b]; });
  g->node_rank_.resize(n);
  for (std::uint32_t r = 0; r < n; ++r) g->node_rank_[g->nodes_by_id_[r]] = r;
  return g;
}

std::optional<NodeIndex> Multigraph::find_node(std::string_view id) const {
  auto it = node_lookup_.find(std::string(id));
  if (it == node_lookup_.end()) return std::nullopt;
  return it->second;
}

NodeIndex Multigraph::node_index(std::string_view id) const {
  if (auto v = find_node(id)) return *v;
  throw GraphError("unknown node id '" + std::string(id) + "'");
}

std::optional<EdgeIndex> Multigraph::find_edge(std::string_view id) const {
  auto it = edge_lookup_.find(std::string(id));
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

EdgeIndex Multigraph::edge_index(std::string_view id) const {
  if (auto e = find_edge(id)) return *e;
  throw GraphError("unknown edge id '" + std::string(id) + "'");
}

std::uint32_t Multigraph::multiplicity(NodeIndex a, NodeIndex b) const {
  const auto& adj = adjacency_.at(a);
  auto it = std::lower_bound(adj.begin(), adj.end(), b,
                             [](const Adjacent& x, NodeIndex y) { return x.node < y; });
  return (it != adj.end() && it->node == b) ? it->multiplicity : 0;
}

GraphPtr Multigraph::restrict_to(const std::vector<bool>& keep_nodes,
                                 const std::vector<bool>& keep_edges) const {
  if (keep_nodes.size() != node_count() || keep_edges.size() != edge_count()) {
    throw GraphError("restrict_to: mask size mismatch");
  }
  std::vector<NodeRecord> nodes;
  for (NodeIndex v = 0; v < node_count(); ++v) {
    if (keep_nodes[v]) nodes.push_back({node_ids_[v], node_attrs_[v]});
  }
  std::vector<EdgeRecord> edges;
  for (EdgeIndex e = 0; e < edge_count(); ++e) {
    const Edge& ed = edges_[e];
    if (keep_edges[e] && keep_nodes[ed.u] && keep_nodes[ed.v]) {
      edges.push_back({node_ids_[ed.u], node_ids_[ed.v], ed.attrs, ed.id});
    }
  }
  return build(std::move(nodes), std::move(edges));
}

GraphPtr build_graph(std::vector<NodeRecord> nodes, std::vector<EdgeRecord> edges) {
  for (auto& e : edges) e.id.clear();
  return Multigraph::build(std::move(nodes), std::move(edges));
}

Subgraph::Subgraph(GraphPtr parent, std::vector<NodeIndex> nodes, std::vector<EdgeIndex> edges)
    : parent_(std::move(parent)), nodes_(std::move(nodes)), edges_(std::move(edges)) {
  if (!parent_) throw GraphError("subgraph without parent graph");
  std::sort(nodes_.begin(), nodes_.end());
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  if (!nodes_.empty() && nodes_.back() >= parent_->node_count()) {
    throw GraphError("subgraph node index out of range");
  }
  for (EdgeIndex e : edges_) {
    if (e >= parent_->edge_count()) throw GraphError("subgraph edge index out of range");
    const Edge& ed = parent_->edge(e);
    if (!contains_node(ed.u) || !contains_node(ed.v)) {
      throw GraphError("subgraph edge '" + ed.id + "' has an endpoint outside the node set");
    }
  }
}

Subgraph Subgraph::induced(GraphPtr parent, std::vector<NodeIndex> nodes) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  std::vector<EdgeIndex> edges;
  for (NodeIndex v : nodes) {
    if (v >= parent->node_count()) throw GraphError("subgraph node index out of range");
    for (EdgeIndex e : parent->incident_edges(v)) {
      const NodeIndex w = parent->edge(e).other(v);
      if (v < w && std::binary_search(nodes.begin(), nodes.end(), w)) edges.push_back(e);
    }
  }
  return Subgraph(std::move(parent), std::move(nodes), std::move(edges));
}

bool Subgraph::contains_node(NodeIndex v) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), v);
}

bool Subgraph::contains_edge(EdgeIndex e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<std::string> Subgraph::node_ids() const {
  std::vector<std::string> ids;
  ids.reserve(nodes_.size());
  for (NodeIndex v : nodes_) ids.push_back(parent_->node_id(v));
  std::sort(ids.begin(), ids.end());
  return ids;
}

void SgiSet::validate() const {
  for (const auto& m : members) {
    if (m.parent_ptr() != members.front().parent_ptr()) {
      throw GraphError("SgiSet '" + goi_type + "' mixes subgraphs of different graphs");
    }
  }
}

Subgraph induced_subgraph(const GraphPtr& g, std::span<const std::string> node_ids) {
  std::vector<NodeIndex> nodes;
  nodes.reserve(node_ids.size());
  for (const auto& id : node_ids) nodes.push_back(g->node_index(id));
  return Subgraph::induced(g, std::move(nodes));
}

std::vector<Subgraph> connected_components(const GraphPtr& g) {
  const std::size_t n = g->node_count();
  std::vector<bool> seen(n, false);
  std::vector<Subgraph> out;
  std::vector<NodeIndex> stack;
  // Walking roots in id order yields components sorted by smallest id.
  for (NodeIndex root : g->nodes_by_id()) {
    if (seen[root]) continue;
    std::vector<NodeIndex> comp;
    seen[root] = true;
    stack.push_back(root);
    while (!stack.empty()) {
      const NodeIndex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (const auto& a : g->adjacency(v)) {
        if (!seen[a.node]) {
          seen[a.node] = true;
          stack.push_back(a.node);
        }
      }
    }
    out.push_back(Subgraph::induced(g, std::move(comp)));
  }
  return out;
}

bool is_connected(const Subgraph& s) {
  if (s.node_count() == 0) return false;
  const auto nodes = s.nodes();
  auto local = [&](NodeIndex v) {
    return static_cast<std::size_t>(std::lower_bound(nodes.begin(), nodes.end(), v) - nodes.begin());
  };
  std::vector<std::vector<std::size_t>> adj(nodes.size());
  for (EdgeIndex e : s.edges()) {
    const Edge& ed = s.parent().edge(e);
    adj[local(ed.u)].push_back(local(ed.v));
    adj[local(ed.v)].push_back(local(ed.u));
  }
  std::vector<bool> seen(nodes.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 0;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    ++reached;
    for (auto w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return reached == nodes.size();
}

}  // namespace sgi
