#include <algorithm>
#include <map>
#include <set>

#include "sgi/candidates.hpp"
#include "sgi/random.hpp"

namespace sgi {

namespace {

// Node sets compared through id ranks so the order matches id order.
std::vector<std::uint32_t> rank_key(const Multigraph& g, const std::vector<NodeIndex>& nodes) {
  std::vector<std::uint32_t> key;
  key.reserve(nodes.size());
  for (NodeIndex v : nodes) key.push_back(g.node_rank(v));
  std::sort(key.begin(), key.end());
  return key;
}

// Connected pieces of g restricted to members (sorted).
std::vector<std::vector<NodeIndex>> split_connected(const Multigraph& g,
                                                    const std::vector<NodeIndex>& members) {
  std::vector<std::vector<NodeIndex>> pieces;
  std::set<NodeIndex> left(members.begin(), members.end());
  while (!left.empty()) {
    std::vector<NodeIndex> piece;
    std::vector<NodeIndex> stack{*left.begin()};
    left.erase(left.begin());
    while (!stack.empty()) {
      const NodeIndex v = stack.back();
      stack.pop_back();
      piece.push_back(v);
      for (const auto& a : g.adjacency(v)) {
        auto it = left.find(a.node);
        if (it != left.end()) {
          left.erase(it);
          stack.push_back(a.node);
        }
      }
    }
    std::sort(piece.begin(), piece.end());
    pieces.push_back(std::move(piece));
  }
  return pieces;
}

}  // namespace

std::vector<Subgraph> overlapping_label_propagation(const GraphPtr& g, const LpaParams& params) {
  if (params.iterations < 1) throw CandidateError("label propagation needs at least one iteration");
  if (!(params.threshold > 0.0 && params.threshold <= 1.0)) {
    throw CandidateError("label propagation threshold must lie in (0, 1]");
  }
  const std::size_t n = g->node_count();
  std::vector<std::vector<NodeIndex>> memory(n);
  for (NodeIndex v = 0; v < n; ++v) {
    memory[v].reserve(static_cast<std::size_t>(params.iterations) + 1);
    memory[v].push_back(v);
  }

  Rng rng(params.seed);
  std::vector<NodeIndex> order(g->nodes_by_id().begin(), g->nodes_by_id().end());
  std::map<NodeIndex, std::uint32_t> received;
  std::vector<NodeIndex> best;
  std::vector<std::map<NodeIndex, std::uint32_t>> tally(n);
  for (NodeIndex v = 0; v < n; ++v) tally[v][v] = 1;
  std::vector<NodeIndex> top_labels;
  // Speakers send their most frequent memory label. A uniform draw from the
  // memory keeps early labels alive long enough to split small cliques.
  auto speak = [&](NodeIndex v) {
    std::uint32_t hi = 0;
    top_labels.clear();
    for (const auto& [label, count] : tally[v]) {
      if (count > hi) {
        hi = count;
        top_labels.assign(1, label);
      } else if (count == hi) {
        top_labels.push_back(label);
      }
    }
    return top_labels.size() == 1 ? top_labels.front() : top_labels[rng.below(top_labels.size())];
  };
  for (int round = 0; round < params.iterations; ++round) {
    rng.shuffle(std::span<NodeIndex>(order));
    for (NodeIndex listener : order) {
      const auto incident = g->incident_edges(listener);
      if (incident.empty()) continue;
      received.clear();
      for (EdgeIndex e : incident) {
        ++received[speak(g->edge(e).other(listener))];
      }
      std::uint32_t top = 0;
      best.clear();
      for (const auto& [label, count] : received) {
        if (count > top) {
          top = count;
          best.assign(1, label);
        } else if (count == top) {
          best.push_back(label);
        }
      }
      if (best.size() > 1) {
        // Ties go to the label the listener already holds most often.
        const auto& own = memory[listener];
        std::size_t held = 0;
        std::vector<NodeIndex> favoured;
        for (NodeIndex label : best) {
          const auto c = static_cast<std::size_t>(std::count(own.begin(), own.end(), label));
          if (c > held) {
            held = c;
            favoured.assign(1, label);
          } else if (c == held) {
            favoured.push_back(label);
          }
        }
        best.swap(favoured);
      }
      const NodeIndex chosen = best.size() == 1 ? best.front() : best[rng.below(best.size())];
      memory[listener].push_back(chosen);
      ++tally[listener][chosen];
    }
  }

  std::map<NodeIndex, std::vector<NodeIndex>> communities;
  std::map<NodeIndex, std::size_t> counts;
  for (NodeIndex v = 0; v < n; ++v) {
    counts.clear();
    for (NodeIndex label : memory[v]) ++counts[label];
    const double size = static_cast<double>(memory[v].size());
    for (const auto& [label, count] : counts) {
      if (static_cast<double>(count) / size >= params.threshold) communities[label].push_back(v);
    }
  }

  std::set<std::vector<NodeIndex>> unique;
  for (auto& [label, members] : communities) {
    std::sort(members.begin(), members.end());
    for (auto& piece : split_connected(*g, members)) {
      if (piece.size() >= 2) unique.insert(std::move(piece));
    }
  }
  std::vector<std::vector<NodeIndex>> sets(unique.begin(), unique.end());
  std::vector<bool> nested(sets.size(), false);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size() && !nested[i]; ++j) {
      nested[i] = sets[j].size() > sets[i].size() &&
                  std::includes(sets[j].begin(), sets[j].end(), sets[i].begin(), sets[i].end());
    }
  }
  std::vector<std::vector<NodeIndex>> kept;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (!nested[i]) kept.push_back(std::move(sets[i]));
  }
  std::sort(kept.begin(), kept.end(), [&](const auto& a, const auto& b) {
    return rank_key(*g, a) < rank_key(*g, b);
  });

  std::vector<Subgraph> out;
  out.reserve(kept.size());
  for (auto& nodes : kept) out.push_back(Subgraph::induced(g, std::move(nodes)));
  return out;
}

}  // namespace sgi
