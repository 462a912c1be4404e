#include "sgi/selection.hpp"

#include <spdlog/spdlog.h>

namespace sgi {

std::string to_string(GeneratorKind kind) {
  return kind == GeneratorKind::label_propagation ? "lpa" : "mcs-query";
}

GeneratorKind generator_from_string(std::string_view s) {
  if (s == "lpa" || s == "label_propagation") return GeneratorKind::label_propagation;
  if (s == "mcs-query" || s == "mcs_query") return GeneratorKind::mcs_query;
  throw std::invalid_argument("unknown generator '" + std::string(s) + "'");
}

bool check(const FeatureVector& candidate, std::span<const FeatureVector> samples, double gamma) {
  for (const auto& s : samples) {
    if (cosine_distance(candidate, s) < gamma) return true;
  }
  return false;
}

std::vector<Subgraph> generate_candidates(const GraphPtr& g, const SgiSet& samples,
                                          const SelectionConfig& cfg) {
  if (cfg.generator == GeneratorKind::label_propagation) {
    return overlapping_label_propagation(g, cfg.lpa);
  }
  return match_query(g, maximum_common_subgraph(samples));
}

SgiSet select_candidates(const GraphPtr& g, const SgiSet& samples,
                         const std::vector<Subgraph>& candidates, const SelectionConfig& cfg) {
  if (!(cfg.gamma > 0.0)) throw std::invalid_argument("selection gamma must be > 0");
  if (samples.empty()) throw std::invalid_argument("samples nonempty required");
  samples.validate();

  std::vector<FeatureVector> sample_features;
  sample_features.reserve(samples.size());
  for (const auto& s : samples.members) sample_features.push_back(subgraph_features(*g, s, cfg.schema));
  Standardizer z;
  if (cfg.schema.standardize()) {
    z = Standardizer(sample_features);
    for (auto& f : sample_features) f = z.apply(f);
  }

  SgiSet out;
  out.goi_type = samples.goi_type;
  for (const auto& candidate : candidates) {
    const auto f = z.apply(subgraph_features(*g, candidate, cfg.schema));
    if (check(f, sample_features, cfg.gamma)) out.members.push_back(candidate);
  }
  return out;
}

SgiSet first_approach(const GraphPtr& g, const SgiSet& samples, const SelectionConfig& cfg) {
  if (samples.empty()) throw std::invalid_argument("samples nonempty required");
  const auto candidates = generate_candidates(g, samples, cfg);
  spdlog::info("first approach: {} candidates from {}", candidates.size(), to_string(cfg.generator));
  auto out = select_candidates(g, samples, candidates, cfg);
  spdlog::info("first approach: {} selected at gamma {}", out.size(), cfg.gamma);
  return out;
}

}  // namespace sgi
