#pragma once

// End-to-end runs behind the command-line tool: detect, generate, evaluate,
// features. Every command returns a process exit status.

#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sgi/evaluation.hpp"
#include "sgi/features.hpp"
#include "sgi/pruning.hpp"
#include "sgi/selection.hpp"
#include "sgi/synthesis.hpp"

namespace sgi {

namespace fs = std::filesystem;

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitRuntime = 2;

// Bad flags, unreadable or malformed inputs, violated preconditions.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unset fields take approach-dependent defaults once the graph is known.
struct SchemaSpec {
  std::optional<std::vector<std::string>> metrics;
  std::optional<std::vector<std::string>> attributes;
  bool standardize = false;

  FeatureSchema resolve(FeatureLevel level, const Multigraph& g, bool attributes_only_default) const;
  Json to_json() const;
  static SchemaSpec from_json(const Json& j);
};

struct FirstApproachSettings {
  GeneratorKind generator = GeneratorKind::label_propagation;
  int iterations = 20;
  double threshold = 0.3;
  double gamma = 0.1;
  SchemaSpec schema;
};

struct SecondApproachSettings {
  PruneStrategy strategy = PruneStrategy::majority;
  double gamma_node = 0.1;
  double gamma_edge = 0.1;
  std::size_t min_component_size = 2;
  SchemaSpec node_schema;
  SchemaSpec edge_schema;
};

struct RunConfig {
  fs::path graph;
  fs::path samples;
  std::optional<fs::path> truth;
  fs::path out;
  std::optional<fs::path> report;     // default: <out stem>.report.json
  std::optional<fs::path> bad_sets;   // second approach only
  std::variant<FirstApproachSettings, SecondApproachSettings> approach = SecondApproachSettings{};
  MatchThresholds thresholds;
  std::uint64_t seed = 0;

  bool first() const { return std::holds_alternative<FirstApproachSettings>(approach); }
  Json to_json() const;
  // Relative paths are taken as given. Throws ConfigError.
  static RunConfig from_json(const Json& j);
};

struct RunResult {
  SgiSet predictions;
  std::optional<EvalReport> report;
  std::optional<BadSets> bad_sets;
};

// Pure part of detect: no file output. Throws.
RunResult detect(const GraphPtr& g, const SgiSet& samples, const RunConfig& cfg,
                 const SgiSet* truth = nullptr);

// Loads, detects, writes artifacts. Returns an exit status and logs the
// failure reason.
int run_pipeline(const RunConfig& cfg);

int run_generate(const BenchmarkConfig& cfg, const fs::path& out_dir);
int run_evaluate(const fs::path& pred, const fs::path& truth, const MatchThresholds& t, double beta,
                 const std::optional<fs::path>& report);

struct FeaturesRequest {
  fs::path graph;
  FeatureLevel level = FeatureLevel::node;
  std::optional<fs::path> samples;  // subgraph level: rows are these groups
  SchemaSpec schema;
  std::optional<fs::path> out;      // CSV; stdout when unset
};
int run_features(const FeaturesRequest& req);

// Logger on stderr, level from SGI_LOG_LEVEL (default info).
void configure_logging();

// Full command line, argv[0] included.
int run_cli(int argc, const char* const* argv);

}  // namespace sgi
