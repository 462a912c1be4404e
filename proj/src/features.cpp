#include "sgi/features.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_map>

namespace sgi {

namespace {

const std::vector<std::string> kSubgraphMetrics = {
    "node_count",      "edge_count",      "degree_min", "degree_max", "degree_mean",
    "clustering_min",  "clustering_max",  "clustering_mean",
    "path_min",        "path_max",        "path_mean",
    "transitivity",    "assortativity"};

const std::vector<std::string> kNodeMetrics = {
    "degree", "neighbor_count", "neighbor_degree_mean", "neighbor_degree_max", "clustering",
    "edge_multiplicity_mean"};

const std::vector<std::string> kEdgeMetrics = {"multiplicity", "endpoint_degree_min",
                                               "endpoint_degree_max", "common_neighbors"};

std::string category_of(const AttrValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return {};
        } else if constexpr (std::is_same_v<T, std::string>) {
          return x;
        } else if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else {
          return Json(x).dump();
        }
      },
      v);
}

double numeric_of(const AttrValue& v) {
  if (const auto* d = std::get_if<double>(&v)) return std::isfinite(*d) ? *d : 0.0;
  if (const auto* b = std::get_if<bool>(&v)) return *b ? 1.0 : 0.0;
  return 0.0;
}

// Appends the encoded attributes of one element, scaled by weight.
void encode_attributes(const std::vector<AttributeEncoding>& encs, const AttrMap& attrs,
                       double weight, double* out) {
  for (const auto& enc : encs) {
    auto it = attrs.find(enc.key);
    const AttrValue null_value;
    const AttrValue& value = it == attrs.end() ? null_value : it->second;
    if (enc.categorical) {
      if (!std::holds_alternative<std::monostate>(value)) {
        const auto cat = category_of(value);
        auto pos = std::lower_bound(enc.vocabulary.begin(), enc.vocabulary.end(), cat);
        if (pos != enc.vocabulary.end() && *pos == cat) out[pos - enc.vocabulary.begin()] += weight;
      }
      out += enc.vocabulary.size();
    } else {
      *out += weight * numeric_of(value);
      ++out;
    }
  }
}

// Number of adjacent pairs among the given neighbours.
template <class Adjacent>
std::size_t neighbor_links(std::span<const NodeIndex> neighbors, Adjacent&& adjacent) {
  std::size_t links = 0;
  for (std::size_t i = 0; i < neighbors.size(); ++i) {
    for (std::size_t j = i + 1; j < neighbors.size(); ++j) {
      if (adjacent(neighbors[i], neighbors[j])) ++links;
    }
  }
  return links;
}

double clustering_of(std::size_t links, std::size_t k) {
  if (k < 2) return 0.0;
  return static_cast<double>(links) / (static_cast<double>(k) * static_cast<double>(k - 1) / 2.0);
}

struct Summary {
  double min = 0, max = 0, mean = 0;
};

Summary summarize(const std::vector<double>& xs) {
  Summary s;
  if (xs.empty()) return s;
  s.min = *std::min_element(xs.begin(), xs.end());
  s.max = *std::max_element(xs.begin(), xs.end());
  s.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
  return s;
}

void require_level(const FeatureSchema& schema, FeatureLevel level) {
  if (schema.level() != level) {
    throw FeatureError("schema level is " + to_string(schema.level()) + ", expected " +
                       to_string(level));
  }
}

}  // namespace

std::string to_string(FeatureLevel level) {
  switch (level) {
    case FeatureLevel::subgraph: return "subgraph";
    case FeatureLevel::node: return "node";
    case FeatureLevel::edge: return "edge";
  }
  return "?";
}

FeatureLevel feature_level_from_string(std::string_view s) {
  if (s == "subgraph") return FeatureLevel::subgraph;
  if (s == "node") return FeatureLevel::node;
  if (s == "edge") return FeatureLevel::edge;
  throw FeatureError("unknown feature level '" + std::string(s) + "'");
}

const std::vector<std::string>& FeatureSchema::available_metrics(FeatureLevel level) {
  switch (level) {
    case FeatureLevel::subgraph: return kSubgraphMetrics;
    case FeatureLevel::node: return kNodeMetrics;
    case FeatureLevel::edge: return kEdgeMetrics;
  }
  return kSubgraphMetrics;
}

FeatureSchema::FeatureSchema(FeatureLevel level, std::vector<std::string> metrics,
                             std::vector<AttributeEncoding> attributes, bool standardize)
    : level_(level), metrics_(std::move(metrics)), attributes_(std::move(attributes)),
      standardize_(standardize) {
  const auto& known = available_metrics(level_);
  for (const auto& m : metrics_) {
    if (std::find(known.begin(), known.end(), m) == known.end()) {
      throw FeatureError("unknown " + to_string(level_) + " metric '" + m + "'");
    }
  }
  for (auto& a : attributes_) {
    std::sort(a.vocabulary.begin(), a.vocabulary.end());
    a.vocabulary.erase(std::unique(a.vocabulary.begin(), a.vocabulary.end()), a.vocabulary.end());
  }
  std::ostringstream id;
  id << to_string(level_) << "|m:";
  for (std::size_t i = 0; i < metrics_.size(); ++i) id << (i ? "," : "") << metrics_[i];
  id << "|a:";
  for (std::size_t i = 0; i < attributes_.size(); ++i) {
    id << (i ? "," : "") << attributes_[i].key;
    if (attributes_[i].categorical) {
      id << "[";
      for (std::size_t k = 0; k < attributes_[i].vocabulary.size(); ++k) {
        id << (k ? ";" : "") << attributes_[i].vocabulary[k];
      }
      id << "]";
    }
  }
  if (standardize_) id << "|z";
  id_ = id.str();
}

FeatureSchema FeatureSchema::make(FeatureLevel level, std::vector<std::string> metrics,
                                  const std::vector<std::string>& attribute_keys,
                                  const Multigraph& g, bool standardize) {
  const bool edge_level = level == FeatureLevel::edge;
  const auto& keys = edge_level ? g.edge_attribute_keys() : g.node_attribute_keys();
  std::vector<AttributeEncoding> encs;
  for (const auto& key : attribute_keys) {
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw FeatureError("graph has no " + std::string(edge_level ? "edge" : "node") +
                         " attribute '" + key + "'");
    }
    AttributeEncoding enc;
    enc.key = key;
    std::set<std::string> vocab;
    auto scan = [&](const AttrMap& attrs) {
      const AttrValue& v = attrs.at(key);
      if (std::holds_alternative<std::string>(v)) enc.categorical = true;
      if (!std::holds_alternative<std::monostate>(v)) vocab.insert(category_of(v));
    };
    if (edge_level) {
      for (EdgeIndex e = 0; e < g.edge_count(); ++e) scan(g.edge(e).attrs);
    } else {
      for (NodeIndex v = 0; v < g.node_count(); ++v) scan(g.node_attrs(v));
    }
    if (enc.categorical) enc.vocabulary.assign(vocab.begin(), vocab.end());
    encs.push_back(std::move(enc));
  }
  return FeatureSchema(level, std::move(metrics), std::move(encs), standardize);
}

std::size_t FeatureSchema::dimension() const {
  std::size_t d = metrics_.size();
  for (const auto& a : attributes_) d += a.width();
  return d;
}

std::vector<std::string> FeatureSchema::column_names() const {
  std::vector<std::string> cols(metrics_);
  for (const auto& a : attributes_) {
    if (a.categorical) {
      for (const auto& v : a.vocabulary) cols.push_back("attr:" + a.key + "=" + v);
    } else {
      cols.push_back("attr:" + a.key);
    }
  }
  return cols;
}

Json FeatureSchema::to_json() const {
  Json attrs = Json::array();
  for (const auto& a : attributes_) {
    Json item = {{"key", a.key}, {"categorical", a.categorical}};
    if (a.categorical) item["vocabulary"] = a.vocabulary;
    attrs.push_back(std::move(item));
  }
  return Json{{"level", to_string(level_)},
              {"metrics", metrics_},
              {"attributes", std::move(attrs)},
              {"standardize", standardize_}};
}

FeatureSchema FeatureSchema::from_json(const Json& j) {
  std::vector<AttributeEncoding> encs;
  for (const auto& a : j.value("attributes", Json::array())) {
    AttributeEncoding enc;
    enc.key = a.at("key").get<std::string>();
    enc.categorical = a.value("categorical", false);
    if (enc.categorical) enc.vocabulary = a.at("vocabulary").get<std::vector<std::string>>();
    encs.push_back(std::move(enc));
  }
  return FeatureSchema(feature_level_from_string(j.at("level").get<std::string>()),
                       j.value("metrics", std::vector<std::string>{}), std::move(encs),
                       j.value("standardize", false));
}

FeatureVector subgraph_features(const Multigraph& g, const Subgraph& s, const FeatureSchema& schema) {
  require_level(schema, FeatureLevel::subgraph);
  if (&s.parent() != &g) throw FeatureError("subgraph does not belong to the given graph");

  const auto nodes = s.nodes();
  const std::size_t n = nodes.size();
  auto local = [&](NodeIndex v) {
    return static_cast<std::size_t>(std::lower_bound(nodes.begin(), nodes.end(), v) - nodes.begin());
  };

  std::vector<double> degree(n, 0.0);
  std::vector<std::vector<NodeIndex>> simple(n);  // local neighbour ids, sorted unique
  std::vector<std::pair<std::size_t, std::size_t>> edge_list;
  for (EdgeIndex e : s.edges()) {
    const Edge& ed = g.edge(e);
    const auto a = local(ed.u), b = local(ed.v);
    degree[a] += 1;
    degree[b] += 1;
    simple[a].push_back(static_cast<NodeIndex>(b));
    simple[b].push_back(static_cast<NodeIndex>(a));
    edge_list.emplace_back(a, b);
  }
  for (auto& nb : simple) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  auto adjacent = [&](NodeIndex a, NodeIndex b) {
    return std::binary_search(simple[a].begin(), simple[a].end(), b);
  };

  const auto& metrics = schema.metrics();
  auto wants = [&](std::string_view prefix) {
    return std::any_of(metrics.begin(), metrics.end(),
                       [&](const std::string& m) { return m.rfind(prefix, 0) == 0; });
  };

  std::vector<double> clustering;
  double transitivity = 0.0;
  if (wants("clustering") || wants("transitivity")) {
    std::size_t closed = 0, triples = 0;
    clustering.resize(n, 0.0);
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t k = simple[v].size();
      const std::size_t links = neighbor_links(simple[v], adjacent);
      clustering[v] = clustering_of(links, k);
      closed += links;
      triples += k * (k > 0 ? k - 1 : 0) / 2;
    }
    transitivity = triples ? static_cast<double>(closed) / static_cast<double>(triples) : 0.0;
  }

  std::vector<double> paths;
  if (wants("path")) {
    std::vector<int> dist(n);
    for (std::size_t src = 0; src < n; ++src) {
      std::fill(dist.begin(), dist.end(), -1);
      std::queue<std::size_t> q;
      dist[src] = 0;
      q.push(src);
      while (!q.empty()) {
        const auto v = q.front();
        q.pop();
        for (NodeIndex w : simple[v]) {
          if (dist[w] < 0) {
            dist[w] = dist[v] + 1;
            q.push(w);
          }
        }
      }
      for (std::size_t dst = src + 1; dst < n; ++dst) {
        if (dist[dst] > 0) paths.push_back(dist[dst]);
      }
    }
  }

  double assortativity = 0.0;
  if (wants("assortativity") && !edge_list.empty()) {
    double sx = 0, sxx = 0, sxy = 0;
    for (const auto& [a, b] : edge_list) {
      sx += degree[a] + degree[b];
      sxx += degree[a] * degree[a] + degree[b] * degree[b];
      sxy += 2.0 * degree[a] * degree[b];
    }
    const double m2 = 2.0 * static_cast<double>(edge_list.size());
    const double mean = sx / m2;
    const double var = sxx / m2 - mean * mean;
    if (var > 1e-12 * std::max(1.0, mean * mean)) {
      assortativity = std::clamp((sxy / m2 - mean * mean) / var, -1.0, 1.0);
    }
  }

  const Summary deg = summarize(degree);
  const Summary clu = summarize(clustering);
  const Summary pth = summarize(paths);

  FeatureVector out;
  out.schema_id = schema.id();
  out.values.assign(schema.dimension(), 0.0);
  std::size_t i = 0;
  for (const auto& m : metrics) {
    double x = 0.0;
    if (m == "node_count") x = static_cast<double>(n);
    else if (m == "edge_count") x = static_cast<double>(s.edge_count());
    else if (m == "degree_min") x = deg.min;
    else if (m == "degree_max") x = deg.max;
    else if (m == "degree_mean") x = deg.mean;
    else if (m == "clustering_min") x = clu.min;
    else if (m == "clustering_max") x = clu.max;
    else if (m == "clustering_mean") x = clu.mean;
    else if (m == "path_min") x = pth.min;
    else if (m == "path_max") x = pth.max;
    else if (m == "path_mean") x = pth.mean;
    else if (m == "transitivity") x = transitivity;
    else if (m == "assortativity") x = assortativity;
    out.values[i++] = x;
  }
  if (n > 0) {
    const double w = 1.0 / static_cast<double>(n);
    for (NodeIndex v : nodes) encode_attributes(schema.attributes(), g.node_attrs(v), w, out.values.data() + i);
  }
  return out;
}

FeatureVector node_features(const Multigraph& g, NodeIndex v, const FeatureSchema& schema) {
  require_level(schema, FeatureLevel::node);
  if (v >= g.node_count()) throw FeatureError("unknown node index " + std::to_string(v));

  const auto adj = g.adjacency(v);
  std::vector<NodeIndex> neighbors;
  neighbors.reserve(adj.size());
  double nd_sum = 0.0, nd_max = 0.0;
  for (const auto& a : adj) {
    neighbors.push_back(a.node);
    const auto d = static_cast<double>(g.degree(a.node));
    nd_sum += d;
    nd_max = std::max(nd_max, d);
  }
  const double k = static_cast<double>(adj.size());
  const double degree = static_cast<double>(g.degree(v));

  FeatureVector out;
  out.schema_id = schema.id();
  out.values.assign(schema.dimension(), 0.0);
  std::size_t i = 0;
  for (const auto& m : schema.metrics()) {
    double x = 0.0;
    if (m == "degree") x = degree;
    else if (m == "neighbor_count") x = k;
    else if (m == "neighbor_degree_mean") x = k > 0 ? nd_sum / k : 0.0;
    else if (m == "neighbor_degree_max") x = nd_max;
    else if (m == "clustering")
      x = clustering_of(
          neighbor_links(neighbors, [&](NodeIndex a, NodeIndex b) { return g.multiplicity(a, b) > 0; }),
          neighbors.size());
    else if (m == "edge_multiplicity_mean") x = k > 0 ? degree / k : 0.0;
    out.values[i++] = x;
  }
  encode_attributes(schema.attributes(), g.node_attrs(v), 1.0, out.values.data() + i);
  return out;
}

FeatureVector node_features(const Multigraph& g, std::string_view node_id, const FeatureSchema& schema) {
  auto v = g.find_node(node_id);
  if (!v) throw FeatureError("unknown node '" + std::string(node_id) + "'");
  return node_features(g, *v, schema);
}

FeatureVector edge_features(const Multigraph& g, EdgeIndex e, const FeatureSchema& schema) {
  require_level(schema, FeatureLevel::edge);
  if (e >= g.edge_count()) throw FeatureError("unknown edge index " + std::to_string(e));
  const Edge& ed = g.edge(e);

  std::size_t common = 0;
  {
    const auto a = g.adjacency(ed.u), b = g.adjacency(ed.v);
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
      if (ia->node < ib->node) ++ia;
      else if (ib->node < ia->node) ++ib;
      else {
        ++common;
        ++ia;
        ++ib;
      }
    }
  }
  const auto du = static_cast<double>(g.degree(ed.u));
  const auto dv = static_cast<double>(g.degree(ed.v));

  FeatureVector out;
  out.schema_id = schema.id();
  out.values.assign(schema.dimension(), 0.0);
  std::size_t i = 0;
  for (const auto& m : schema.metrics()) {
    double x = 0.0;
    if (m == "multiplicity") x = g.multiplicity(ed.u, ed.v);
    else if (m == "endpoint_degree_min") x = std::min(du, dv);
    else if (m == "endpoint_degree_max") x = std::max(du, dv);
    else if (m == "common_neighbors") x = static_cast<double>(common);
    out.values[i++] = x;
  }
  encode_attributes(schema.attributes(), ed.attrs, 1.0, out.values.data() + i);
  return out;
}

double cosine_distance(const FeatureVector& a, const FeatureVector& b) {
  if (a.values.size() != b.values.size()) {
    throw FeatureError("cosine_distance: length mismatch (" + std::to_string(a.values.size()) +
                       " vs " + std::to_string(b.values.size()) + ")");
  }
  if (!a.schema_id.empty() && !b.schema_id.empty() && a.schema_id != b.schema_id) {
    throw FeatureError("cosine_distance: schema mismatch");
  }
  double dot = 0, na = 0, nb = 0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    dot += a.values[i] * b.values[i];
    na += a.values[i] * a.values[i];
    nb += b.values[i] * b.values[i];
  }
  if (na == 0.0 && nb == 0.0) return 0.0;
  if (na == 0.0 || nb == 0.0) return 1.0;
  const double sim = dot / std::sqrt(na * nb);
  return std::clamp(1.0 - sim, 0.0, 2.0);
}

Standardizer::Standardizer(std::span<const FeatureVector> training) {
  if (training.empty()) return;
  const std::size_t d = training.front().size();
  mean_.assign(d, 0.0);
  scale_.assign(d, 1.0);
  for (const auto& v : training) {
    if (v.size() != d) throw FeatureError("Standardizer: inconsistent vector lengths");
    for (std::size_t i = 0; i < d; ++i) mean_[i] += v.values[i];
  }
  const double n = static_cast<double>(training.size());
  for (auto& m : mean_) m /= n;
  for (std::size_t i = 0; i < d; ++i) {
    double ss = 0;
    for (const auto& v : training) ss += (v.values[i] - mean_[i]) * (v.values[i] - mean_[i]);
    const double sd = std::sqrt(ss / n);
    scale_[i] = sd > 1e-12 ? sd : 1.0;
  }
}

FeatureVector Standardizer::apply(const FeatureVector& v) const {
  if (!fitted()) return v;
  if (v.size() != mean_.size()) throw FeatureError("Standardizer: length mismatch");
  FeatureVector out = v;
  for (std::size_t i = 0; i < mean_.size(); ++i) out.values[i] = (v.values[i] - mean_[i]) / scale_[i];
  return out;
}

std::string features_to_csv(const FeatureSchema& schema, std::span<const std::string> labels,
                            std::span<const FeatureVector> vectors) {
  std::ostringstream os;
  os.precision(17);
  os << "element";
  for (const auto& c : schema.column_names()) os << "," << c;
  os << "\n";
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    os << (r < labels.size() ? labels[r] : std::to_string(r));
    for (double x : vectors[r].values) os << "," << x;
    os << "\n";
  }
  return os.str();
}

}  // namespace sgi
