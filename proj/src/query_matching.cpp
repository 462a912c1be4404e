#include <algorithm>
#include <set>
#include <tuple>

#include "sgi/candidates.hpp"

namespace sgi {

QueryGraph QueryGraph::from_pattern(GraphPtr pattern) {
  QueryGraph q;
  q.min_multiplicity.assign(pattern->edge_count(), 1);
  q.pattern = std::move(pattern);
  return q;
}

std::uint32_t QueryGraph::required(NodeIndex a, NodeIndex b) const {
  std::uint32_t total = 0;
  for (EdgeIndex e : pattern->incident_edges(a)) {
    if (pattern->edge(e).other(a) == b) total += min_multiplicity.at(e);
  }
  return total;
}

void QueryGraph::validate() const {
  if (!pattern || pattern->node_count() == 0) throw CandidateError("query graph is empty");
  if (min_multiplicity.size() != pattern->edge_count()) {
    throw CandidateError("query graph: one min_multiplicity per edge required");
  }
  if (std::any_of(min_multiplicity.begin(), min_multiplicity.end(), [](auto m) { return m == 0; })) {
    throw CandidateError("query graph: min_multiplicity must be >= 1");
  }
  std::vector<NodeIndex> all(pattern->node_count());
  for (NodeIndex v = 0; v < all.size(); ++v) all[v] = v;
  if (!is_connected(Subgraph::induced(pattern, all))) throw CandidateError("query graph is not connected");
}

Json query_to_json(const QueryGraph& q) {
  Json j = graph_to_json(*q.pattern);
  for (std::size_t e = 0; e < q.min_multiplicity.size(); ++e) {
    j["edges"][e]["min_multiplicity"] = q.min_multiplicity[e];
  }
  return j;
}

QueryGraph query_from_json(const Json& j) {
  QueryGraph q = QueryGraph::from_pattern(graph_from_json(j));
  if (j.contains("edges")) {
    for (std::size_t e = 0; e < j.at("edges").size(); ++e) {
      const auto& item = j.at("edges")[e];
      if (item.contains("min_multiplicity")) {
        const auto m = item.at("min_multiplicity").get<long long>();
        if (m < 1) throw FormatError("min_multiplicity must be >= 1");
        q.min_multiplicity[e] = static_cast<std::uint32_t>(m);
      }
    }
  }
  return q;
}

namespace {

class Matcher {
 public:
  Matcher(const Multigraph& g, const QueryGraph& q) : g_(g) {
    const Multigraph& p = *q.pattern;
    const std::size_t n = p.node_count();
    req_.assign(n, std::vector<std::uint32_t>(n, 0));
    qdeg_.assign(n, 0);
    qmult_.assign(n, 0);
    for (NodeIndex a = 0; a < n; ++a) {
      for (const auto& adj : p.adjacency(a)) {
        req_[a][adj.node] = q.required(a, adj.node);
        qdeg_[a] += 1;
        qmult_[a] += req_[a][adj.node];
      }
    }
    plan_order();
    image_.assign(n, 0);
    used_.assign(g.node_count(), false);
  }

  std::set<std::vector<NodeIndex>> run() {
    std::vector<NodeIndex> roots;
    const NodeIndex first = order_.front();
    for (NodeIndex v = 0; v < g_.node_count(); ++v) {
      if (fits(first, v)) roots.push_back(v);
    }
    by_degree(roots);
    for (NodeIndex v : roots) {
      image_[first] = v;
      used_[v] = true;
      extend(1);
      used_[v] = false;
    }
    return std::move(found_);
  }

 private:
  // Most constrained first, then nodes with the most already-placed
  // neighbours so each step is anchored to a mapped parent.
  void plan_order() {
    const std::size_t n = req_.size();
    std::vector<bool> placed(n, false);
    parent_.assign(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
      int best = -1;
      std::size_t best_links = 0;
      for (NodeIndex a = 0; a < n; ++a) {
        if (placed[a]) continue;
        std::size_t links = 0;
        for (NodeIndex b = 0; b < n; ++b) links += placed[b] && req_[a][b] > 0;
        if (step > 0 && links == 0) continue;
        const auto key = std::tuple(links, qdeg_[a], qmult_[a]);
        if (best < 0 ||
            key > std::tuple(best_links, qdeg_[static_cast<NodeIndex>(best)], qmult_[static_cast<NodeIndex>(best)])) {
          best = static_cast<int>(a);
          best_links = links;
        }
      }
      const auto a = static_cast<NodeIndex>(best);
      placed[a] = true;
      for (NodeIndex b : order_) {
        if (req_[a][b] > 0) {
          parent_[a] = b;
          break;
        }
      }
      order_.push_back(a);
    }
  }

  bool fits(NodeIndex a, NodeIndex v) const {
    return g_.neighbor_count(v) >= qdeg_[a] && g_.degree(v) >= qmult_[a];
  }

  void by_degree(std::vector<NodeIndex>& vs) const {
    std::sort(vs.begin(), vs.end(), [&](NodeIndex x, NodeIndex y) {
      if (g_.degree(x) != g_.degree(y)) return g_.degree(x) > g_.degree(y);
      return g_.node_rank(x) < g_.node_rank(y);
    });
  }

  void extend(std::size_t depth) {
    if (depth == order_.size()) {
      std::vector<NodeIndex> nodes(image_);
      std::sort(nodes.begin(), nodes.end());
      found_.insert(std::move(nodes));
      return;
    }
    const NodeIndex a = order_[depth];
    std::vector<NodeIndex> cands;
    for (const auto& adj : g_.adjacency(image_[parent_[a]])) {
      const NodeIndex v = adj.node;
      if (used_[v] || !fits(a, v)) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const NodeIndex b = order_[k];
        if (req_[a][b] > 0) ok = g_.multiplicity(image_[b], v) >= req_[a][b];
      }
      if (ok) cands.push_back(v);
    }
    by_degree(cands);
    for (NodeIndex v : cands) {
      image_[a] = v;
      used_[v] = true;
      extend(depth + 1);
      used_[v] = false;
    }
  }

  const Multigraph& g_;
  std::vector<std::vector<std::uint32_t>> req_;
  std::vector<std::size_t> qdeg_;
  std::vector<std::size_t> qmult_;
  std::vector<NodeIndex> order_;
  std::vector<NodeIndex> parent_;
  std::vector<NodeIndex> image_;
  std::vector<bool> used_;
  std::set<std::vector<NodeIndex>> found_;
};

}  // namespace

std::vector<Subgraph> match_query(const GraphPtr& g, const QueryGraph& q) {
  q.validate();
  if (q.pattern->node_count() > g->node_count()) return {};
  auto found = Matcher(*g, q).run();
  std::vector<std::vector<NodeIndex>> sets(found.begin(), found.end());
  auto key = [&](const std::vector<NodeIndex>& s) {
    std::vector<std::uint32_t> r;
    for (NodeIndex v : s) r.push_back(g->node_rank(v));
    std::sort(r.begin(), r.end());
    return r;
  };
  std::sort(sets.begin(), sets.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  std::vector<Subgraph> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.push_back(Subgraph::induced(g, std::move(s)));
  return out;
}

}  // namespace sgi
