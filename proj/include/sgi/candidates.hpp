#pragma once

// Candidate cluster generators: overlapping label propagation, and graph
// matching of a query distilled from the samples by maximum common
// subgraph.

#include <cstdint>
#include <vector>

#include "sgi/graph.hpp"
#include "sgi/graph_io.hpp"

namespace sgi {

class CandidateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LpaParams {
  int iterations = 20;     // T >= 1
  double threshold = 0.3;  // membership frequency r in (0, 1]
  std::uint64_t seed = 0;
};

// Speaker-listener propagation: every node remembers the labels it has
// adopted; each round listeners (in seeded random order) receive one label
// per incident edge copy, the speaker's most frequent one, and remember the
// most frequent label received. A node belongs to every label holding at
// least `threshold` of its memory.
//
// Each label's members are split into connected pieces of g; singletons,
// duplicates and pieces nested in a larger community are dropped. Output
// is sorted by node ids.
std::vector<Subgraph> overlapping_label_propagation(const GraphPtr& g, const LpaParams& params);

// A pattern graph whose edges carry a lower bound on host multiplicity. The
// requirement between two pattern nodes is the sum of min_multiplicity over
// the pattern edges joining them, so a plain multigraph used as a query
// asks for at least its own multiplicities.
struct QueryGraph {
  GraphPtr pattern;
  std::vector<std::uint32_t> min_multiplicity;  // per pattern edge, >= 1

  static QueryGraph from_pattern(GraphPtr pattern);
  std::uint32_t required(NodeIndex a, NodeIndex b) const;
  // Throws CandidateError when empty or disconnected.
  void validate() const;
};

Json query_to_json(const QueryGraph& q);
QueryGraph query_from_json(const Json& j);

// Left fold of pairwise maximum common connected subgraphs over samples in
// list order. Each pairwise step maximises the number of shared edges of a
// connected common subgraph of the simple projections (then the number of
// nodes), breaking ties by the lexicographically smallest mapping of the
// first operand's node ids. Query edges keep the smallest multiplicity seen
// in any operand. Samples are limited to kMaxMcsNodes nodes.
inline constexpr std::size_t kMaxMcsNodes = 12;
QueryGraph maximum_common_subgraph(const SgiSet& samples);

// Every node set of g hosting a (not necessarily induced) copy of q where
// each query edge lands on a pair of at least the required multiplicity.
// Results are node-induced subgraphs, one per distinct node set, sorted by
// node ids.
std::vector<Subgraph> match_query(const GraphPtr& g, const QueryGraph& q);

}  // namespace sgi
