#include "sgi/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

#include <fmt/format.h>

namespace sgi {

void MatchThresholds::validate() const {
  for (double g : {extra, missing, size}) {
    if (std::isnan(g) || g < 0.0) throw EvaluationError("match thresholds must be >= 0");
  }
}

bool ratio_below(std::size_t a, std::size_t b, double gamma) {
  // The fused product keeps the sign of gamma*b - a exact.
  return std::fma(gamma, static_cast<double>(b), -static_cast<double>(a)) > 0.0;
}

bool match_subgraphs(const NodeSet& pred, const NodeSet& truth, const MatchThresholds& t) {
  if (truth.empty()) throw EvaluationError("cannot match against an empty truth subgraph");
  std::size_t common = 0;
  for (auto i = pred.begin(), j = truth.begin(); i != pred.end() && j != truth.end();) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  const std::size_t n = truth.size();
  const std::size_t extra = pred.size() - common;
  const std::size_t missing = n - common;
  const std::size_t diff = pred.size() > n ? pred.size() - n : n - pred.size();
  return ratio_below(extra, n, t.extra) && ratio_below(missing, n, t.missing) &&
         ratio_below(diff, n, t.size);
}

bool match_subgraphs(const Subgraph& pred, const Subgraph& truth, const MatchThresholds& t) {
  return match_subgraphs(pred.node_ids(), truth.node_ids(), t);
}

bool relevant(const NodeSet& candidate, const std::vector<NodeSet>& pool, const MatchThresholds& t,
              Role role) {
  return std::any_of(pool.begin(), pool.end(), [&](const NodeSet& other) {
    return role == Role::prediction ? match_subgraphs(candidate, other, t)
                                    : match_subgraphs(other, candidate, t);
  });
}

double precision(const std::vector<NodeSet>& preds, const std::vector<NodeSet>& truth,
                 const MatchThresholds& t) {
  if (preds.empty()) return 0.0;
  const auto hits = std::count_if(preds.begin(), preds.end(),
                                  [&](const NodeSet& p) { return relevant(p, truth, t, Role::prediction); });
  return static_cast<double>(hits) / static_cast<double>(preds.size());
}

double recall(const std::vector<NodeSet>& preds, const std::vector<NodeSet>& truth,
              const MatchThresholds& t) {
  if (truth.empty()) throw EvaluationError("recall is undefined for an empty truth set");
  const auto hits = std::count_if(truth.begin(), truth.end(),
                                  [&](const NodeSet& s) { return relevant(s, preds, t, Role::truth); });
  return static_cast<double>(hits) / static_cast<double>(truth.size());
}

double f_score(double p, double r, double beta) {
  if (!(beta > 0.0)) throw EvaluationError("beta must be > 0");
  if (p == 0.0 && r == 0.0) return 0.0;
  const double b2 = beta * beta;
  return (1.0 + b2) * p * r / (b2 * p + r);
}

EvalReport evaluate(const std::vector<NodeSet>& preds, const std::vector<NodeSet>& truth,
                    const MatchThresholds& t, double beta) {
  t.validate();
  EvalReport r;
  r.beta = beta;
  r.thresholds = t;
  r.empty_predictions = preds.empty();
  r.empty_truth = truth.empty();
  for (const auto& p : preds) {
    const bool hit = relevant(p, truth, t, Role::prediction);
    r.prediction_matched.push_back(hit);
    r.relevant_predictions += hit;
  }
  for (const auto& s : truth) {
    const bool hit = relevant(s, preds, t, Role::truth);
    r.truth_matched.push_back(hit);
    r.recovered_truth += hit;
  }
  if (!preds.empty()) r.precision = static_cast<double>(r.relevant_predictions) / static_cast<double>(preds.size());
  if (!truth.empty()) r.recall = static_cast<double>(r.recovered_truth) / static_cast<double>(truth.size());
  r.f_score = f_score(r.precision, r.recall, beta);
  return r;
}

EvalReport evaluate(const SgiSet& preds, const SgiSet& truth, const MatchThresholds& t, double beta) {
  return evaluate(node_groups_of(preds).groups, node_groups_of(truth).groups, t, beta);
}

Json EvalReport::to_json() const {
  Json j;
  j["precision"] = precision;
  j["recall"] = recall;
  j["f_score"] = f_score;
  j["beta"] = beta;
  j["thresholds"] = {{"extra", thresholds.extra}, {"missing", thresholds.missing}, {"size", thresholds.size}};
  j["predictions"] = prediction_matched.size();
  j["truth"] = truth_matched.size();
  j["relevant_predictions"] = relevant_predictions;
  j["recovered_truth"] = recovered_truth;
  j["prediction_matched"] = prediction_matched;
  j["truth_matched"] = truth_matched;
  j["empty_predictions"] = empty_predictions;
  j["empty_truth"] = empty_truth;
  return j;
}

std::string EvalReport::to_text() const {
  std::string out;
  auto line = [&](std::string_view k, const std::string& v) { out += fmt::format("{:<22}{}\n", k, v); };
  line("predictions", std::to_string(prediction_matched.size()));
  line("truth", std::to_string(truth_matched.size()));
  line("relevant predictions", std::to_string(relevant_predictions));
  line("recovered truth", std::to_string(recovered_truth));
  line("precision", fmt::format("{:.4f}", precision));
  line("recall", fmt::format("{:.4f}", recall));
  line(fmt::format("F{:g}", beta), fmt::format("{:.4f}", f_score));
  line("thresholds", fmt::format("extra={:g} missing={:g} size={:g}", thresholds.extra,
                                 thresholds.missing, thresholds.size));
  if (empty_predictions) out += "note: empty prediction set\n";
  if (empty_truth) out += "note: empty truth set\n";
  return out;
}

}  // namespace sgi
