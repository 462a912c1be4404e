#pragma once

// Hand-crafted feature vectors for subgraphs, nodes and edges, and the
// cosine distance used by every similarity check.
//
// Degree and multiplicity metrics count parallel edges. Clustering,
// transitivity and common-neighbour counts use the simple projection.
// Degenerate statistics (no connected pairs, zero degree variance, nodes of
// degree < 2) evaluate to 0 so every vector stays finite.

#include <span>
#include <string>
#include <vector>

#include "sgi/graph.hpp"
#include "sgi/graph_io.hpp"

namespace sgi {

enum class FeatureLevel { subgraph, node, edge };

std::string to_string(FeatureLevel level);
FeatureLevel feature_level_from_string(std::string_view s);

struct FeatureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numeric and boolean attributes occupy one slot; string attributes are
// one-hot encoded against a vocabulary frozen when the schema is made.
struct AttributeEncoding {
  std::string key;
  bool categorical = false;
  std::vector<std::string> vocabulary;  // sorted

  std::size_t width() const { return categorical ? vocabulary.size() : 1; }
};

class FeatureSchema {
 public:
  FeatureSchema() = default;
  FeatureSchema(FeatureLevel level, std::vector<std::string> metrics,
                std::vector<AttributeEncoding> attributes, bool standardize = false);

  // Scans g to decide numeric vs categorical encoding and the vocabularies.
  // Subgraph schemas aggregate node attributes; edge schemas read edge ones.
  static FeatureSchema make(FeatureLevel level, std::vector<std::string> metrics,
                            const std::vector<std::string>& attribute_keys, const Multigraph& g,
                            bool standardize = false);

  static const std::vector<std::string>& available_metrics(FeatureLevel level);

  FeatureLevel level() const { return level_; }
  const std::vector<std::string>& metrics() const { return metrics_; }
  const std::vector<AttributeEncoding>& attributes() const { return attributes_; }
  bool standardize() const { return standardize_; }
  std::size_t dimension() const;
  const std::string& id() const { return id_; }
  // Column names, one per dimension.
  std::vector<std::string> column_names() const;

  Json to_json() const;
  static FeatureSchema from_json(const Json& j);

 private:
  FeatureLevel level_ = FeatureLevel::subgraph;
  std::vector<std::string> metrics_;
  std::vector<AttributeEncoding> attributes_;
  bool standardize_ = false;
  std::string id_;
};

struct FeatureVector {
  std::vector<double> values;
  std::string schema_id;

  std::size_t size() const { return values.size(); }
};

FeatureVector subgraph_features(const Multigraph& g, const Subgraph& s, const FeatureSchema& schema);
FeatureVector node_features(const Multigraph& g, NodeIndex v, const FeatureSchema& schema);
FeatureVector node_features(const Multigraph& g, std::string_view node_id, const FeatureSchema& schema);
FeatureVector edge_features(const Multigraph& g, EdgeIndex e, const FeatureSchema& schema);

// 1 - cos(a, b), clamped to [0, 2]. Both zero: 0. Exactly one zero: 1.
double cosine_distance(const FeatureVector& a, const FeatureVector& b);

// Per-dimension z-score fitted on training vectors. Dimensions with zero
// spread are only centred.
class Standardizer {
 public:
  Standardizer() = default;
  explicit Standardizer(std::span<const FeatureVector> training);

  FeatureVector apply(const FeatureVector& v) const;
  bool fitted() const { return !mean_.empty(); }

 private:
  std::vector<double> mean_;
  std::vector<double> scale_;
};

// Header row of schema column names, then one row per (label, vector).
std::string features_to_csv(const FeatureSchema& schema, std::span<const std::string> labels,
                            std::span<const FeatureVector> vectors);

}  // namespace sgi
