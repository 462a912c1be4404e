#pragma once

// Scores a predicted SGI set against ground truth. Subgraphs are compared
// by node sets only; every ratio is normalised by the truth side.

#include <string>
#include <vector>

#include "sgi/graph.hpp"
#include "sgi/graph_io.hpp"

namespace sgi {

class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MatchThresholds {
  double extra = 0.3;
  double missing = 0.3;
  double size = 0.3;

  void validate() const;  // finite-or-infinite, not NaN, >= 0
};

// a / b < gamma, decided without rounding the quotient. b > 0.
bool ratio_below(std::size_t a, std::size_t b, double gamma);

// Both node sets sorted and unique. Throws on empty truth.
bool match_subgraphs(const NodeSet& pred, const NodeSet& truth, const MatchThresholds& t);
bool match_subgraphs(const Subgraph& pred, const Subgraph& truth, const MatchThresholds& t);

enum class Role { prediction, truth };

// Whether candidate matches some pool member. A prediction candidate is
// matched against truth pool members; a truth candidate acts as the
// normaliser against prediction pool members.
bool relevant(const NodeSet& candidate, const std::vector<NodeSet>& pool, const MatchThresholds& t,
              Role role);

// 0 for an empty prediction set.
double precision(const std::vector<NodeSet>& preds, const std::vector<NodeSet>& truth,
                 const MatchThresholds& t);
// Throws on empty truth.
double recall(const std::vector<NodeSet>& preds, const std::vector<NodeSet>& truth,
              const MatchThresholds& t);
double f_score(double precision, double recall, double beta = 1.0);

struct EvalReport {
  double precision = 0.0;
  double recall = 0.0;
  double f_score = 0.0;
  double beta = 1.0;
  MatchThresholds thresholds;
  std::vector<bool> prediction_matched;
  std::vector<bool> truth_matched;
  std::size_t relevant_predictions = 0;
  std::size_t recovered_truth = 0;
  bool empty_predictions = false;
  bool empty_truth = false;

  Json to_json() const;
  std::string to_text() const;
};

// Unlike recall(), empty truth is reported through the flag.
EvalReport evaluate(const std::vector<NodeSet>& preds, const std::vector<NodeSet>& truth,
                    const MatchThresholds& t, double beta = 1.0);
EvalReport evaluate(const SgiSet& preds, const SgiSet& truth, const MatchThresholds& t,
                    double beta = 1.0);

}  // namespace sgi
