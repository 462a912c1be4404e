#include "sgi/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_set>

#include <fmt/format.h>

#include "sgi/random.hpp"

namespace sgi {

std::string to_string(Motif m) {
  switch (m) {
    case Motif::hub: return "hub";
    case Motif::clique: return "clique";
    case Motif::path: return "path";
  }
  return "?";
}

std::string to_string(ContextType c) {
  switch (c) {
    case ContextType::none: return "none";
    case ContextType::A: return "A";
    case ContextType::B: return "B";
  }
  return "?";
}

std::string to_string(Separability s) { return s == Separability::separable ? "separable" : "noisy"; }

namespace {

Motif motif_from(const std::string& s) {
  if (s == "hub") return Motif::hub;
  if (s == "clique") return Motif::clique;
  if (s == "path") return Motif::path;
  throw std::invalid_argument("unknown motif '" + s + "'");
}

ContextType context_from(const std::string& s) {
  if (s == "none") return ContextType::none;
  if (s == "A" || s == "a") return ContextType::A;
  if (s == "B" || s == "b") return ContextType::B;
  throw std::invalid_argument("unknown context type '" + s + "'");
}

Separability separability_from(const std::string& s) {
  if (s == "separable") return Separability::separable;
  if (s == "noisy") return Separability::noisy;
  throw std::invalid_argument("unknown separability '" + s + "'");
}

}  // namespace

void BenchmarkConfig::validate() const {
  auto fail = [](const std::string& m) { throw std::invalid_argument("benchmark config: " + m); };
  if (group_size_min < 2) fail("group_size_min must be >= 2");
  if (group_size_max < group_size_min) fail("group_size_max must be >= group_size_min");
  if (!(background_density >= 0.0 && background_density <= 1.0)) fail("background_density must be in [0, 1]");
  if (!(overlap_fraction >= 0.0 && overlap_fraction < 1.0)) fail("overlap_fraction must be in [0, 1)");
  if (multiplicity_min < 1 || multiplicity_max < multiplicity_min) fail("multiplicity range must satisfy 1 <= min <= max");
  if (separability == Separability::noisy && !(noise_sigma >= 0.0 && std::isfinite(noise_sigma))) {
    fail("noise_sigma must be finite and >= 0");
  }
  if (sample_count > group_count) fail("sample_count exceeds group_count");
  if (group_count > 0 && background_nodes == 0 && (contact_edges > 0 || context != ContextType::none)) {
    fail("contact edges and context decoration need background nodes");
  }
}

Json BenchmarkConfig::to_json() const {
  Json j;
  j["background_nodes"] = background_nodes;
  j["background_density"] = background_density;
  j["group_count"] = group_count;
  j["group_size_min"] = group_size_min;
  j["group_size_max"] = group_size_max;
  j["motif"] = to_string(motif);
  j["context"] = to_string(context);
  j["overlap_fraction"] = overlap_fraction;
  j["multiplicity_min"] = multiplicity_min;
  j["multiplicity_max"] = multiplicity_max;
  j["separability"] = to_string(separability);
  j["noise_sigma"] = noise_sigma;
  j["contact_edges"] = contact_edges;
  j["sample_count"] = sample_count;
  j["seed"] = seed;
  j["goi_type"] = goi_type;
  return j;
}

BenchmarkConfig BenchmarkConfig::from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("benchmark config must be a JSON object");
  BenchmarkConfig c;
  for (const auto& [key, v] : j.items()) {
    try {
      if (key == "background_nodes") c.background_nodes = v.get<std::size_t>();
      else if (key == "background_density") c.background_density = v.get<double>();
      else if (key == "group_count") c.group_count = v.get<std::size_t>();
      else if (key == "group_size_min") c.group_size_min = v.get<std::size_t>();
      else if (key == "group_size_max") c.group_size_max = v.get<std::size_t>();
      else if (key == "motif") c.motif = motif_from(v.get<std::string>());
      else if (key == "context") c.context = context_from(v.get<std::string>());
      else if (key == "overlap_fraction") c.overlap_fraction = v.get<double>();
      else if (key == "multiplicity_min") c.multiplicity_min = v.get<std::uint32_t>();
      else if (key == "multiplicity_max") c.multiplicity_max = v.get<std::uint32_t>();
      else if (key == "separability") c.separability = separability_from(v.get<std::string>());
      else if (key == "noise_sigma") c.noise_sigma = v.get<double>();
      else if (key == "contact_edges") c.contact_edges = v.get<std::size_t>();
      else if (key == "sample_count") c.sample_count = v.get<std::size_t>();
      else if (key == "seed") c.seed = v.get<std::uint64_t>();
      else if (key == "goi_type") c.goi_type = v.get<std::string>();
      else throw FormatError("unknown benchmark config key '" + key + "'");
    } catch (const nlohmann::json::exception& e) {
      throw FormatError("benchmark config key '" + key + "': " + e.what());
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
  }
  return c;
}

namespace {

std::string make_id(char prefix, std::size_t i, std::size_t count) {
  std::size_t width = 4;
  for (std::size_t n = count > 0 ? count - 1 : 0; n >= 10000; n /= 10) ++width;
  return fmt::format("{}{:0{}}", prefix, i, width);
}

class Builder {
 public:
  explicit Builder(const BenchmarkConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {}

  Benchmark run() {
    make_background_nodes();
    plan_groups();
    std::vector<std::vector<EdgeIndex>> planted(groups_.size());
    for (std::size_t i = 0; i < groups_.size(); ++i) planted[i] = plant_motif(groups_[i]);
    if (cfg_.context != ContextType::none) {
      for (const auto& members : groups_) decorate(members);
    }
    for (const auto& members : groups_) {
      for (std::size_t k = 0; k < cfg_.contact_edges; ++k) {
        const auto& u = members[rng_.below(members.size())];
        add_edge(u, random_background(), false);
      }
    }
    wire_background();

    Benchmark b;
    b.graph = build_graph(std::move(nodes_), std::move(edges_));
    b.truth.goi_type = cfg_.goi_type;
    for (std::size_t i = 0; i < groups_.size(); ++i) {
      std::vector<NodeIndex> vs;
      for (const auto& id : groups_[i]) vs.push_back(b.graph->node_index(id));
      b.truth.members.emplace_back(b.graph, std::move(vs), std::move(planted[i]));
    }
    b.samples.goi_type = cfg_.goi_type;
    if (cfg_.sample_count > 0) b.samples = sample_training_set(b.truth, cfg_.sample_count, cfg_.seed);
    return b;
  }

 private:
  double jitter(double x) {
    return cfg_.separability == Separability::noisy ? x + cfg_.noise_sigma * rng_.normal() : x;
  }

  // Group side draws (low, high); the rest (high, low).
  std::pair<double, double> draw_pair(bool group) {
    const double lo = rng_.uniform(0.0, 0.2);
    const double hi = rng_.uniform(0.8, 1.0);
    return group ? std::pair{jitter(lo), jitter(hi)} : std::pair{jitter(hi), jitter(lo)};
  }

  void add_node(std::string id, bool group) {
    const auto [a, r] = draw_pair(group);
    nodes_.push_back({std::move(id), {{"activity", a}, {"risk", r}}});
  }

  EdgeIndex add_edge(const std::string& u, const std::string& v, bool group) {
    const auto [vol, reg] = draw_pair(group);
    edges_.push_back({u, v, {{"volume", vol}, {"regularity", reg}}, {}});
    return static_cast<EdgeIndex>(edges_.size() - 1);
  }

  void make_background_nodes() {
    for (std::size_t i = 0; i < cfg_.background_nodes; ++i) {
      add_node(make_id('b', i, cfg_.background_nodes), false);
    }
  }

  const std::string& random_background() { return nodes_[rng_.below(cfg_.background_nodes)].id; }

  // Sizes first, then shared nodes dealt round-robin over consecutive
  // group pairs, then private nodes.
  void plan_groups() {
    const std::size_t G = cfg_.group_count;
    std::vector<std::size_t> sizes(G);
    std::size_t slots = 0;
    for (auto& s : sizes) {
      s = static_cast<std::size_t>(rng_.between(static_cast<std::int64_t>(cfg_.group_size_min),
                                                static_cast<std::int64_t>(cfg_.group_size_max)));
      slots += s;
    }
    const double f = cfg_.overlap_fraction;
    const auto shared = static_cast<std::size_t>(std::llround(f * static_cast<double>(slots) / (1.0 + f)));
    if (shared > 0 && G < 2) throw std::invalid_argument("benchmark config: overlap needs at least two groups");

    std::vector<std::vector<std::size_t>> owners(G);  // group -> local shared slots
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 0; j < shared; ++j) {
      const std::size_t a = j % G;
      const std::size_t b = (a + 1) % G;
      pairs.emplace_back(a, b);
      owners[a].push_back(j);
      owners[b].push_back(j);
    }
    for (std::size_t i = 0; i < G; ++i) {
      if (owners[i].size() >= sizes[i]) {
        throw std::invalid_argument("benchmark config: overlap_fraction too large for the group sizes");
      }
    }
    const std::size_t distinct = slots - shared;
    std::vector<std::string> ids;
    for (std::size_t k = 0; k < distinct; ++k) ids.push_back(make_id('g', k, distinct));
    for (const auto& id : ids) add_node(id, true);

    groups_.assign(G, {});
    std::size_t next_private = shared;
    for (std::size_t i = 0; i < G; ++i) {
      for (std::size_t j : owners[i]) groups_[i].push_back(ids[j]);
      while (groups_[i].size() < sizes[i]) groups_[i].push_back(ids[next_private++]);
      rng_.shuffle(std::span<std::string>(groups_[i]));
    }
  }

  std::vector<EdgeIndex> plant_motif(const std::vector<std::string>& m) {
    std::vector<EdgeIndex> out;
    auto link = [&](std::size_t a, std::size_t b) {
      const auto copies = static_cast<std::uint32_t>(rng_.between(cfg_.multiplicity_min, cfg_.multiplicity_max));
      for (std::uint32_t c = 0; c < copies; ++c) out.push_back(add_edge(m[a], m[b], true));
    };
    switch (cfg_.motif) {
      case Motif::hub:
        for (std::size_t k = 1; k < m.size(); ++k) link(0, k);
        break;
      case Motif::clique:
        for (std::size_t a = 0; a < m.size(); ++a)
          for (std::size_t b = a + 1; b < m.size(); ++b) link(a, b);
        break;
      case Motif::path:
        for (std::size_t k = 1; k < m.size(); ++k) link(k - 1, k);
        break;
    }
    return out;
  }

  // Two rings per group: K4s for type A, triangles for type B.
  void decorate(const std::vector<std::string>& members) {
    const std::size_t ring = cfg_.context == ContextType::A ? 4 : 3;
    for (std::size_t r = 0; r < 2; ++r) {
      std::vector<std::string> ids;
      for (std::size_t k = 0; k < ring; ++k) {
        ids.push_back(make_id('c', decoration_count_++, decoration_budget()));
        add_node(ids.back(), false);
      }
      for (std::size_t a = 0; a < ring; ++a)
        for (std::size_t b = a + 1; b < ring; ++b) add_edge(ids[a], ids[b], false);
      const auto& anchor = members[r % members.size()];
      add_edge(anchor, ids[0], false);
      if (r == 1) add_edge(anchor, ids[ring / 2], false);
      add_edge(ids[1], random_background(), false);
    }
  }

  std::size_t decoration_budget() const {
    return cfg_.group_count * 2 * (cfg_.context == ContextType::A ? 4 : 3);
  }

  void wire_background() {
    const std::uint64_t n = cfg_.background_nodes;
    const std::uint64_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
    const auto m = static_cast<std::uint64_t>(std::llround(cfg_.background_density * static_cast<double>(pairs)));
    if (m == 0) return;
    auto endpoints = [n](std::uint64_t code) { return std::pair{code / n, code % n}; };
    std::vector<std::uint64_t> chosen;
    if (2 * m > pairs) {
      std::vector<std::uint64_t> all;
      all.reserve(pairs);
      for (std::uint64_t a = 0; a < n; ++a)
        for (std::uint64_t b = a + 1; b < n; ++b) all.push_back(a * n + b);
      for (std::uint64_t i = 0; i < m; ++i) std::swap(all[i], all[i + rng_.below(pairs - i)]);
      chosen.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(m));
    } else {
      std::unordered_set<std::uint64_t> seen;
      while (chosen.size() < m) {
        auto a = rng_.below(n), b = rng_.below(n);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        if (seen.insert(a * n + b).second) chosen.push_back(a * n + b);
      }
    }
    for (auto code : chosen) {
      const auto [a, b] = endpoints(code);
      add_edge(nodes_[a].id, nodes_[b].id, false);
    }
  }

  const BenchmarkConfig& cfg_;
  Rng rng_;
  std::vector<NodeRecord> nodes_;
  std::vector<EdgeRecord> edges_;
  std::vector<std::vector<std::string>> groups_;
  std::size_t decoration_count_ = 0;
};

}  // namespace

Benchmark generate_benchmark(const BenchmarkConfig& cfg) {
  cfg.validate();
  return Builder(cfg).run();
}

SgiSet sample_training_set(const SgiSet& truth, std::size_t n, std::uint64_t seed) {
  if (n < 1 || n > truth.size()) {
    throw std::invalid_argument(fmt::format("sample size {} out of range [1, {}]", n, truth.size()));
  }
  std::vector<std::size_t> order(truth.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  Rng rng(seed);
  for (std::size_t i = 0; i < n; ++i) std::swap(order[i], order[i + rng.below(order.size() - i)]);
  std::vector<std::size_t> picked(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n));
  std::sort(picked.begin(), picked.end());
  SgiSet out;
  out.goi_type = truth.goi_type;
  for (std::size_t i : picked) out.members.push_back(truth.members[i]);
  return out;
}

}  // namespace sgi
