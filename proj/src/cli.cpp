#include <iostream>

#include <CLI11.hpp>
#include <spdlog/spdlog.h>

#include "sgi/pipeline.hpp"

namespace sgi {

namespace {

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

struct SchemaFlags {
  std::string metrics;
  std::string attributes;
  bool standardize = false;

  void apply(SchemaSpec& s, const CLI::App& app, const std::string& prefix) const {
    if (app.count("--" + prefix + "metrics")) s.metrics = split_list(metrics);
    if (app.count("--" + prefix + "attrs")) s.attributes = split_list(attributes);
    if (app.count("--" + prefix + "standardize")) s.standardize = standardize;
  }

  void add(CLI::App& app, const std::string& prefix, const std::string& what) {
    const std::string w = what.empty() ? "" : what + " ";
    app.add_option("--" + prefix + "metrics", metrics, "Comma-separated " + w + "metrics (empty for none)");
    app.add_option("--" + prefix + "attrs", attributes, "Comma-separated " + w + "attributes (empty for none)");
    app.add_flag("--" + prefix + "standardize", standardize, "Z-score " + w + "features on the samples");
  }
};

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Detect subgraphs of interest in transactional multigraphs"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Write a synthetic benchmark");
  std::string gen_config, gen_out;
  std::uint64_t gen_seed = 0;
  gen->add_option("--config", gen_config, "Benchmark config JSON");
  gen->add_option("--out", gen_out, "Output directory")->required();
  gen->add_option("--seed", gen_seed, "RNG seed (overrides the config)");

  // detect
  auto* det = app.add_subcommand("detect", "Run a detection approach");
  std::string det_config, graph, samples, truth, out, report, approach, generator, strategy;
  double gamma = 0, gamma_node = 0, gamma_edge = 0, gx = 0, gm = 0, gs = 0, lpa_r = 0;
  int lpa_t = 0;
  std::size_t min_comp = 0;
  std::uint64_t seed = 0;
  bool emit_bad = false;
  SchemaFlags sub_schema, node_schema, edge_schema;
  det->add_option("--config", det_config, "Run config JSON; flags override it");
  det->add_option("--graph", graph, "Graph JSON");
  det->add_option("--samples", samples, "Samples SgiSet JSON");
  det->add_option("--truth", truth, "Ground truth SgiSet JSON; enables the report");
  det->add_option("--out", out, "Prediction SgiSet JSON");
  det->add_option("--report", report, "Evaluation report JSON");
  det->add_option("--approach", approach, "first | second")->check(CLI::IsMember({"first", "second"}));
  det->add_option("--generator", generator, "lpa | mcs-query")->check(CLI::IsMember({"lpa", "mcs-query"}));
  det->add_option("--strategy", strategy, "simple | node | edge | majority")
      ->check(CLI::IsMember({"simple", "node", "edge", "majority"}));
  det->add_option("--gamma", gamma, "First approach distance threshold");
  det->add_option("--gamma-node", gamma_node, "Node distance threshold");
  det->add_option("--gamma-edge", gamma_edge, "Edge distance threshold");
  det->add_option("--gamma-extra", gx, "Match threshold on extra nodes");
  det->add_option("--gamma-missing", gm, "Match threshold on missing nodes");
  det->add_option("--gamma-size", gs, "Match threshold on size difference");
  det->add_option("--min-component-size", min_comp, "Smallest component reported");
  det->add_option("--lpa-iterations", lpa_t, "Label propagation rounds");
  det->add_option("--lpa-threshold", lpa_r, "Label propagation membership threshold");
  det->add_option("--seed", seed, "RNG seed");
  det->add_flag("--emit-bad-sets", emit_bad, "Also write <out stem>.bad_sets.json");
  sub_schema.add(*det, "", "subgraph");
  node_schema.add(*det, "node-", "node");
  edge_schema.add(*det, "edge-", "edge");

  // evaluate
  auto* ev = app.add_subcommand("evaluate", "Score predictions against ground truth");
  std::string ev_pred, ev_truth, ev_report;
  MatchThresholds ev_t;
  double beta = 1.0;
  ev->add_option("--pred", ev_pred, "Prediction SgiSet JSON")->required();
  ev->add_option("--truth", ev_truth, "Ground truth SgiSet JSON")->required();
  ev->add_option("--report", ev_report, "Report JSON");
  ev->add_option("--gamma-extra", ev_t.extra, "Match threshold on extra nodes");
  ev->add_option("--gamma-missing", ev_t.missing, "Match threshold on missing nodes");
  ev->add_option("--gamma-size", ev_t.size, "Match threshold on size difference");
  ev->add_option("--beta", beta, "F-measure beta");

  // features
  auto* ft = app.add_subcommand("features", "Dump feature vectors as CSV");
  FeaturesRequest freq;
  std::string f_graph, f_level = "node", f_samples, f_out;
  SchemaFlags f_schema;
  ft->add_option("--graph", f_graph, "Graph JSON")->required();
  ft->add_option("--level", f_level, "subgraph | node | edge")->check(CLI::IsMember({"subgraph", "node", "edge"}));
  ft->add_option("--samples", f_samples, "SgiSet JSON (subgraph level)");
  ft->add_option("--out", f_out, "CSV output");
  f_schema.add(*ft, "", "");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  if (gen->parsed()) {
    BenchmarkConfig cfg;
    try {
      if (!gen_config.empty()) cfg = BenchmarkConfig::from_json(read_json_file(gen_config));
    } catch (const std::exception& e) {
      spdlog::error("{}", e.what());
      return kExitConfig;
    }
    if (gen->count("--seed")) cfg.seed = gen_seed;
    return run_generate(cfg, gen_out);
  }

  if (det->parsed()) {
    RunConfig cfg;
    try {
      if (!det_config.empty()) cfg = RunConfig::from_json(read_json_file(det_config));
      if (det->count("--graph")) cfg.graph = graph;
      if (det->count("--samples")) cfg.samples = samples;
      if (det->count("--truth")) cfg.truth = truth;
      if (det->count("--out")) cfg.out = out;
      if (det->count("--report")) cfg.report = report;
      if (det->count("--seed")) cfg.seed = seed;
      if (det->count("--gamma-extra")) cfg.thresholds.extra = gx;
      if (det->count("--gamma-missing")) cfg.thresholds.missing = gm;
      if (det->count("--gamma-size")) cfg.thresholds.size = gs;
      if (det->count("--approach")) {
        if (approach == "first" && !cfg.first()) cfg.approach = FirstApproachSettings{};
        if (approach == "second" && cfg.first()) cfg.approach = SecondApproachSettings{};
      }
      if (auto* a = std::get_if<FirstApproachSettings>(&cfg.approach)) {
        if (det->count("--generator")) a->generator = generator_from_string(generator);
        if (det->count("--gamma")) a->gamma = gamma;
        if (det->count("--lpa-iterations")) a->iterations = lpa_t;
        if (det->count("--lpa-threshold")) a->threshold = lpa_r;
        sub_schema.apply(a->schema, *det, "");
      } else {
        auto& b = std::get<SecondApproachSettings>(cfg.approach);
        if (det->count("--strategy")) b.strategy = prune_strategy_from_string(strategy);
        if (det->count("--gamma-node")) b.gamma_node = gamma_node;
        if (det->count("--gamma-edge")) b.gamma_edge = gamma_edge;
        if (det->count("--min-component-size")) b.min_component_size = min_comp;
        node_schema.apply(b.node_schema, *det, "node-");
        edge_schema.apply(b.edge_schema, *det, "edge-");
        if (emit_bad) {
          if (cfg.out.empty()) throw ConfigError("--emit-bad-sets needs --out");
          auto p = cfg.out;
          p.replace_extension(".bad_sets.json");
          cfg.bad_sets = p;
        }
      }
    } catch (const std::exception& e) {
      spdlog::error("{}", e.what());
      return kExitConfig;
    }
    return run_pipeline(cfg);
  }

  if (ev->parsed()) {
    std::optional<fs::path> rep;
    if (!ev_report.empty()) rep = ev_report;
    return run_evaluate(ev_pred, ev_truth, ev_t, beta, rep);
  }

  freq.graph = f_graph;
  freq.level = feature_level_from_string(f_level);
  if (!f_samples.empty()) freq.samples = f_samples;
  if (!f_out.empty()) freq.out = f_out;
  f_schema.apply(freq.schema, *ft, "");
  return run_features(freq);
}

}  // namespace sgi
