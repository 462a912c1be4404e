#pragma once

// First approach: generate candidate clusters, characterise them, keep the
// ones close enough to a training sample.

#include <functional>
#include <span>
#include <variant>

#include "sgi/candidates.hpp"
#include "sgi/features.hpp"

namespace sgi {

enum class GeneratorKind { label_propagation, mcs_query };

std::string to_string(GeneratorKind kind);
GeneratorKind generator_from_string(std::string_view s);

struct SelectionConfig {
  GeneratorKind generator = GeneratorKind::label_propagation;
  LpaParams lpa;
  FeatureSchema schema;  // subgraph level
  double gamma = 0.1;    // upper bound on cosine distance, > 0
};

// True iff some sample vector lies at cosine distance strictly below gamma.
bool check(const FeatureVector& candidate, std::span<const FeatureVector> samples, double gamma);

// Same test with the sample features produced on demand by extractor.
template <class Element>
bool check(const FeatureVector& candidate, std::span<const Element> samples, double gamma,
           const std::function<FeatureVector(const Element&)>& extractor) {
  for (const auto& psi : samples) {
    if (cosine_distance(candidate, extractor(psi)) < gamma) return true;
  }
  return false;
}

std::vector<Subgraph> generate_candidates(const GraphPtr& g, const SgiSet& samples,
                                          const SelectionConfig& cfg);

// Keeps every candidate of a precomputed generator output that passes check.
SgiSet select_candidates(const GraphPtr& g, const SgiSet& samples,
                         const std::vector<Subgraph>& candidates, const SelectionConfig& cfg);

SgiSet first_approach(const GraphPtr& g, const SgiSet& samples, const SelectionConfig& cfg);

}  // namespace sgi
