#include "sgi/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

namespace sgi {

namespace {

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) throw ConfigError(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) throw ConfigError(std::string(what) + " must be an array of strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

template <class T>
T read(const Json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config key '") + key + "': " + e.what());
  }
}

void reject_unknown(const Json& j, std::initializer_list<const char*> known, const std::string& where) {
  for (const auto& [key, _] : j.items()) {
    if (std::none_of(known.begin(), known.end(), [&](const char* k) { return key == k; })) {
      throw ConfigError("unknown key '" + key + "' in " + where);
    }
  }
}

fs::path sibling(const fs::path& out, const std::string& suffix) {
  auto p = out;
  p.replace_extension(suffix);
  return p;
}

}  // namespace

// Attribute-only when asked and the graph carries attributes at this
// level; otherwise every metric plus (when unset) every attribute.
FeatureSchema SchemaSpec::resolve(FeatureLevel level, const Multigraph& g, bool attributes_only_default) const {
  const auto& keys = level == FeatureLevel::edge ? g.edge_attribute_keys() : g.node_attribute_keys();
  std::vector<std::string> attrs = attributes.value_or(keys);
  std::vector<std::string> ms;
  if (metrics) {
    ms = *metrics;
  } else if (!(attributes_only_default && !attrs.empty())) {
    ms = FeatureSchema::available_metrics(level);
  }
  if (ms.empty() && attrs.empty()) throw ConfigError(to_string(level) + " schema has no columns");
  return FeatureSchema::make(level, std::move(ms), attrs, g, standardize);
}

Json SchemaSpec::to_json() const {
  Json j = Json::object();
  if (metrics) j["metrics"] = *metrics;
  if (attributes) j["attributes"] = *attributes;
  j["standardize"] = standardize;
  return j;
}

SchemaSpec SchemaSpec::from_json(const Json& j) {
  if (!j.is_object()) throw ConfigError("schema must be an object");
  reject_unknown(j, {"metrics", "attributes", "standardize"}, "schema");
  SchemaSpec s;
  if (j.contains("metrics")) s.metrics = string_list(j.at("metrics"), "schema metrics");
  if (j.contains("attributes")) s.attributes = string_list(j.at("attributes"), "schema attributes");
  s.standardize = read(j, "standardize", false);
  return s;
}

Json RunConfig::to_json() const {
  Json j;
  j["graph"] = graph.string();
  j["samples"] = samples.string();
  if (truth) j["truth"] = truth->string();
  j["out"] = out.string();
  if (report) j["report"] = report->string();
  if (bad_sets) j["bad_sets"] = bad_sets->string();
  j["seed"] = seed;
  j["thresholds"] = {{"extra", thresholds.extra}, {"missing", thresholds.missing}, {"size", thresholds.size}};
  if (const auto* a = std::get_if<FirstApproachSettings>(&approach)) {
    j["approach"] = "first";
    j["first"] = {{"generator", to_string(a->generator)}, {"iterations", a->iterations},
                  {"threshold", a->threshold}, {"gamma", a->gamma}, {"schema", a->schema.to_json()}};
  } else {
    const auto& b = std::get<SecondApproachSettings>(approach);
    j["approach"] = "second";
    j["second"] = {{"strategy", to_string(b.strategy)}, {"gamma_node", b.gamma_node},
                   {"gamma_edge", b.gamma_edge}, {"min_component_size", b.min_component_size},
                   {"node_schema", b.node_schema.to_json()}, {"edge_schema", b.edge_schema.to_json()}};
  }
  return j;
}

RunConfig RunConfig::from_json(const Json& j) {
  if (!j.is_object()) throw ConfigError("run config must be a JSON object");
  reject_unknown(j, {"graph", "samples", "truth", "out", "report", "bad_sets", "seed", "thresholds", "approach", "first", "second"},
                 "run config");
  RunConfig c;
  c.graph = read<std::string>(j, "graph", "");
  c.samples = read<std::string>(j, "samples", "");
  if (j.contains("truth")) c.truth = read<std::string>(j, "truth", "");
  c.out = read<std::string>(j, "out", "");
  if (j.contains("report")) c.report = read<std::string>(j, "report", "");
  if (j.contains("bad_sets")) c.bad_sets = read<std::string>(j, "bad_sets", "");
  c.seed = read<std::uint64_t>(j, "seed", 0);
  if (j.contains("thresholds")) {
    const auto& t = j.at("thresholds");
    if (!t.is_object()) throw ConfigError("thresholds must be an object");
    reject_unknown(t, {"extra", "missing", "size"}, "thresholds");
    c.thresholds.extra = read(t, "extra", c.thresholds.extra);
    c.thresholds.missing = read(t, "missing", c.thresholds.missing);
    c.thresholds.size = read(t, "size", c.thresholds.size);
  }

  if (j.contains("first") && j.contains("second")) {
    throw ConfigError("run config must hold exactly one of \"first\" and \"second\"");
  }
  std::string approach = read<std::string>(j, "approach", j.contains("first") ? "first" : "second");
  if (approach != "first" && approach != "second") throw ConfigError("approach must be first or second");
  if ((approach == "first" && j.contains("second")) || (approach == "second" && j.contains("first"))) {
    throw ConfigError("approach '" + approach + "' does not match the settings section");
  }
  try {
    if (approach == "first") {
      FirstApproachSettings a;
      if (j.contains("first")) {
        const auto& s = j.at("first");
        reject_unknown(s, {"generator", "iterations", "threshold", "gamma", "schema"}, "first");
        a.generator = generator_from_string(read<std::string>(s, "generator", to_string(a.generator)));
        a.iterations = read(s, "iterations", a.iterations);
        a.threshold = read(s, "threshold", a.threshold);
        a.gamma = read(s, "gamma", a.gamma);
        if (s.contains("schema")) a.schema = SchemaSpec::from_json(s.at("schema"));
      }
      c.approach = a;
    } else {
      SecondApproachSettings b;
      if (j.contains("second")) {
        const auto& s = j.at("second");
        reject_unknown(s, {"strategy", "gamma_node", "gamma_edge", "min_component_size", "node_schema", "edge_schema"},
                       "second");
        b.strategy = prune_strategy_from_string(read<std::string>(s, "strategy", to_string(b.strategy)));
        b.gamma_node = read(s, "gamma_node", b.gamma_node);
        b.gamma_edge = read(s, "gamma_edge", b.gamma_edge);
        b.min_component_size = read(s, "min_component_size", b.min_component_size);
        if (s.contains("node_schema")) b.node_schema = SchemaSpec::from_json(s.at("node_schema"));
        if (s.contains("edge_schema")) b.edge_schema = SchemaSpec::from_json(s.at("edge_schema"));
      }
      c.approach = b;
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return c;
}

RunResult detect(const GraphPtr& g, const SgiSet& samples, const RunConfig& cfg, const SgiSet* truth) {
  if (samples.empty()) throw ConfigError("samples nonempty required");
  try {
    cfg.thresholds.validate();
  } catch (const EvaluationError& e) {
    throw ConfigError(e.what());
  }
  RunResult r;
  if (const auto* a = std::get_if<FirstApproachSettings>(&cfg.approach)) {
    if (a->iterations < 1) throw ConfigError("lpa iterations must be >= 1");
    if (!(a->threshold > 0.0 && a->threshold <= 1.0)) throw ConfigError("lpa threshold must lie in (0, 1]");
    if (!(a->gamma > 0.0)) throw ConfigError("gamma must be > 0");
    SelectionConfig sc;
    sc.generator = a->generator;
    sc.lpa = {a->iterations, a->threshold, cfg.seed};
    sc.gamma = a->gamma;
    sc.schema = a->schema.resolve(FeatureLevel::subgraph, *g, false);
    // Larger samples first keeps the folded query anchored on the richest one.
    SgiSet ordered = samples;
    std::stable_sort(ordered.members.begin(), ordered.members.end(), [](const Subgraph& x, const Subgraph& y) {
      return std::pair(x.node_count(), x.edge_count()) > std::pair(y.node_count(), y.edge_count());
    });
    r.predictions = first_approach(g, ordered, sc);
  } else {
    const auto& b = std::get<SecondApproachSettings>(cfg.approach);
    if (b.min_component_size < 1) throw ConfigError("min component size must be >= 1");
    if (!(b.gamma_node > 0.0 && b.gamma_edge > 0.0)) throw ConfigError("pruning thresholds must be > 0");
    PruneConfig pc;
    pc.node_schema = b.node_schema.resolve(FeatureLevel::node, *g, true);
    pc.edge_schema = b.edge_schema.resolve(FeatureLevel::edge, *g, true);
    pc.gamma_node = b.gamma_node;
    pc.gamma_edge = b.gamma_edge;
    pc.strategy = b.strategy;
    pc.min_component_size = b.min_component_size;
    BadSets bad;
    r.predictions = second_approach(g, samples, pc, &bad);
    r.bad_sets = std::move(bad);
  }
  if (truth) r.report = evaluate(r.predictions, *truth, cfg.thresholds);
  return r;
}

int run_pipeline(const RunConfig& cfg) {
  GraphPtr g;
  SgiSet samples;
  std::optional<SgiSet> truth;
  try {
    if (cfg.graph.empty()) throw ConfigError("graph path is required");
    if (cfg.samples.empty()) throw ConfigError("samples path is required");
    if (cfg.out.empty()) throw ConfigError("output path is required");
    g = load_graph(cfg.graph);
    samples = load_sgi_set(cfg.samples, g);
    if (cfg.truth) truth = load_sgi_set(*cfg.truth, g);
    spdlog::info("loaded {}: {} nodes, {} edges; {} samples", cfg.graph.string(), g->node_count(),
                 g->edge_count(), samples.size());
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return kExitConfig;
  }

  try {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = detect(g, samples, cfg, truth ? &*truth : nullptr);
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    spdlog::info("detect: {} predictions in {:.1f} ms", r.predictions.size(), ms);
    write_json_file(cfg.out, sgi_set_to_json(r.predictions));
    if (r.report) {
      write_json_file(cfg.report.value_or(sibling(cfg.out, ".report.json")), r.report->to_json());
      std::cout << r.report->to_text();
    }
    if (cfg.bad_sets && r.bad_sets) write_json_file(*cfg.bad_sets, bad_sets_to_json(*g, *r.bad_sets));
  } catch (const ConfigError& e) {
    spdlog::error("{}", e.what());
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    spdlog::error("{}", e.what());
    return kExitConfig;
  } catch (const FeatureError& e) {
    spdlog::error("{}", e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return kExitRuntime;
  }
  return kExitOk;
}

int run_generate(const BenchmarkConfig& cfg, const fs::path& out_dir) {
  Benchmark b;
  try {
    b = generate_benchmark(cfg);
  } catch (const std::invalid_argument& e) {
    spdlog::error("{}", e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return kExitRuntime;
  }
  try {
    fs::create_directories(out_dir);
    write_json_file(out_dir / "graph.json", graph_to_json(*b.graph));
    write_json_file(out_dir / "truth.json", sgi_set_to_json(b.truth));
    write_json_file(out_dir / "samples.json", sgi_set_to_json(b.samples));
    write_json_file(out_dir / "config.json", cfg.to_json());
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return kExitRuntime;
  }
  spdlog::info("generated {} nodes, {} edges, {} groups, {} samples in {}", b.graph->node_count(),
               b.graph->edge_count(), b.truth.size(), b.samples.size(), out_dir.string());
  return kExitOk;
}

int run_evaluate(const fs::path& pred, const fs::path& truth, const MatchThresholds& t, double beta,
                 const std::optional<fs::path>& report) {
  EvalReport r;
  try {
    t.validate();
    if (!(beta > 0.0)) throw ConfigError("beta must be > 0");
    const auto p = node_groups_from_json(read_json_file(pred));
    const auto s = node_groups_from_json(read_json_file(truth));
    for (const auto& grp : s.groups) {
      if (grp.empty()) throw ConfigError(truth.string() + ": empty truth group");
    }
    r = evaluate(p.groups, s.groups, t, beta);
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return kExitConfig;
  }
  std::cout << r.to_text();
  try {
    if (report) write_json_file(*report, r.to_json());
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return kExitRuntime;
  }
  return kExitOk;
}

int run_features(const FeaturesRequest& req) {
  std::string csv;
  try {
    const auto g = load_graph(req.graph);
    const auto schema = req.schema.resolve(req.level, *g, false);
    std::vector<std::string> labels;
    std::vector<FeatureVector> rows;
    switch (req.level) {
      case FeatureLevel::node:
        for (NodeIndex v : g->nodes_by_id()) {
          labels.push_back(g->node_id(v));
          rows.push_back(node_features(*g, v, schema));
        }
        break;
      case FeatureLevel::edge:
        for (EdgeIndex e = 0; e < g->edge_count(); ++e) {
          labels.push_back(g->edge(e).id);
          rows.push_back(edge_features(*g, e, schema));
        }
        break;
      case FeatureLevel::subgraph: {
        if (!req.samples) throw ConfigError("subgraph features need --samples");
        const auto set = load_sgi_set(*req.samples, g);
        for (std::size_t i = 0; i < set.size(); ++i) {
          labels.push_back("group" + std::to_string(i));
          rows.push_back(subgraph_features(*g, set.members[i], schema));
        }
        break;
      }
    }
    csv = features_to_csv(schema, labels, rows);
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return kExitConfig;
  }
  try {
    if (req.out) {
      write_text_atomic(*req.out, csv);
    } else {
      std::cout << csv;
    }
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return kExitRuntime;
  }
  return kExitOk;
}

void configure_logging() {
  auto logger = spdlog::get("sgi");
  if (!logger) logger = spdlog::stderr_color_mt("sgi");
  spdlog::set_default_logger(logger);
  const char* env = std::getenv("SGI_LOG_LEVEL");
  spdlog::set_level(env ? spdlog::level::from_str(env) : spdlog::level::info);
}

}  // namespace sgi
