#pragma once

// Synthetic benchmarks: a random background multigraph with planted groups
// whose subgraphs form the ground truth.
//
// Node attributes "activity" and "risk", edge attributes "volume" and
// "regularity". Group elements draw (low, high) values, everything else
// (high, low), so in separable mode attribute vectors of the two sides are
// at cosine distance above 0.5.

#include <cstdint>
#include <string>

#include "sgi/graph.hpp"
#include "sgi/graph_io.hpp"

namespace sgi {

enum class Motif { hub, clique, path };
enum class ContextType { none, A, B };
enum class Separability { separable, noisy };

std::string to_string(Motif m);
std::string to_string(ContextType c);
std::string to_string(Separability s);

struct BenchmarkConfig {
  std::size_t background_nodes = 1000;
  // Edge probability between background pairs; the background gets exactly
  // round(density * n(n-1)/2) distinct pairs.
  double background_density = 0.01;
  std::size_t group_count = 20;
  std::size_t group_size_min = 4;
  std::size_t group_size_max = 8;
  Motif motif = Motif::clique;
  // A: two K4 rings per group; B: two triangles. The first hangs off one
  // group node by one edge, the second off another by two edges.
  ContextType context = ContextType::none;
  // Share of group nodes that sit in two groups.
  double overlap_fraction = 0.0;
  // Parallel copies per planted group edge.
  std::uint32_t multiplicity_min = 1;
  std::uint32_t multiplicity_max = 3;
  Separability separability = Separability::separable;
  double noise_sigma = 0.1;
  // Random edges from each group to background nodes.
  std::size_t contact_edges = 2;
  std::size_t sample_count = 3;
  std::uint64_t seed = 1;
  std::string goi_type = "planted";

  void validate() const;  // throws std::invalid_argument
  Json to_json() const;
  // Missing keys keep their defaults; unknown keys are rejected.
  static BenchmarkConfig from_json(const Json& j);
};

struct Benchmark {
  GraphPtr graph;
  SgiSet truth;
  SgiSet samples;
};

Benchmark generate_benchmark(const BenchmarkConfig& cfg);

// n distinct members drawn uniformly, kept in truth order. 1 <= n <= |truth|.
SgiSet sample_training_set(const SgiSet& truth, std::size_t n, std::uint64_t seed);

}  // namespace sgi
