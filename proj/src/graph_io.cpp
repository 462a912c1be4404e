#include "sgi/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <system_error>

namespace sgi {

Json attr_to_json(const AttrValue& v) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else {
          return x;
        }
      },
      v);
}

AttrValue attr_from_json(const Json& j) {
  if (j.is_null()) return std::monostate{};
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return j.get<std::string>();
  throw FormatError("attribute values must be null, number, boolean or string");
}

namespace {

Json attrs_to_json(const AttrMap& attrs) {
  Json out = Json::object();
  for (const auto& [k, v] : attrs) out[k] = attr_to_json(v);
  return out;
}

AttrMap attrs_from_json(const Json& j) {
  AttrMap out;
  if (j.is_null()) return out;
  if (!j.is_object()) throw FormatError("\"attrs\" must be an object");
  for (const auto& [k, v] : j.items()) out[k] = attr_from_json(v);
  return out;
}

std::string id_string(const Json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw FormatError(std::string(what) + " must be a string or integer");
}

}  // namespace

Json graph_to_json(const Multigraph& g) {
  Json nodes = Json::array();
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    nodes.push_back({{"id", g.node_id(v)}, {"attrs", attrs_to_json(g.node_attrs(v))}});
  }
  Json edges = Json::array();
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    edges.push_back({{"id", ed.id},
                     {"src", g.node_id(ed.u)},
                     {"dst", g.node_id(ed.v)},
                     {"attrs", attrs_to_json(ed.attrs)}});
  }
  return Json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

GraphPtr graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("nodes")) throw FormatError("graph document needs \"nodes\"");
  std::vector<NodeRecord> nodes;
  for (const auto& n : j.at("nodes")) {
    if (!n.contains("id")) throw FormatError("node without \"id\"");
    nodes.push_back({id_string(n.at("id"), "node id"), attrs_from_json(n.value("attrs", Json()))});
  }
  std::vector<EdgeRecord> edges;
  if (j.contains("edges")) {
    std::size_t pos = 0;
    for (const auto& e : j.at("edges")) {
      if (!e.contains("src") || !e.contains("dst")) throw FormatError("edge without \"src\"/\"dst\"");
      EdgeRecord rec;
      rec.src = id_string(e.at("src"), "edge src");
      rec.dst = id_string(e.at("dst"), "edge dst");
      rec.attrs = attrs_from_json(e.value("attrs", Json()));
      rec.id = e.contains("id") ? id_string(e.at("id"), "edge id") : "e" + std::to_string(pos);
      edges.push_back(std::move(rec));
      ++pos;
    }
  }
  try {
    return Multigraph::build(std::move(nodes), std::move(edges));
  } catch (const GraphError& err) {
    throw FormatError(err.what());
  }
}

Json sgi_set_to_json(const SgiSet& set) {
  Json groups = Json::array();
  for (const auto& m : set.members) {
    Json edge_ids = Json::array();
    std::vector<std::string> ids;
    for (EdgeIndex e : m.edges()) ids.push_back(m.parent().edge(e).id);
    std::sort(ids.begin(), ids.end());
    for (auto& id : ids) edge_ids.push_back(std::move(id));
    groups.push_back({{"nodes", m.node_ids()}, {"edges", std::move(edge_ids)}});
  }
  return Json{{"type", set.goi_type}, {"groups", std::move(groups)}};
}

SgiSet sgi_set_from_json(const Json& j, const GraphPtr& g) {
  if (!j.is_object() || !j.contains("groups")) throw FormatError("SgiSet document needs \"groups\"");
  SgiSet out;
  out.goi_type = j.value("type", std::string());
  for (const auto& grp : j.at("groups")) {
    std::vector<NodeIndex> nodes;
    for (const auto& id : grp.at("nodes")) {
      const auto s = id_string(id, "group node");
      auto v = g->find_node(s);
      if (!v) throw FormatError("group references unknown node '" + s + "'");
      nodes.push_back(*v);
    }
    try {
      if (grp.contains("edges")) {
        std::vector<EdgeIndex> edges;
        for (const auto& id : grp.at("edges")) {
          const auto s = id_string(id, "group edge");
          auto e = g->find_edge(s);
          if (!e) throw FormatError("group references unknown edge '" + s + "'");
          edges.push_back(*e);
        }
        out.members.emplace_back(g, std::move(nodes), std::move(edges));
      } else {
        out.members.push_back(Subgraph::induced(g, std::move(nodes)));
      }
    } catch (const GraphError& err) {
      throw FormatError(err.what());
    }
  }
  return out;
}

NodeGroups node_groups_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("groups")) throw FormatError("SgiSet document needs \"groups\"");
  NodeGroups out;
  out.goi_type = j.value("type", std::string());
  for (const auto& grp : j.at("groups")) {
    NodeSet s;
    for (const auto& id : grp.at("nodes")) s.push_back(id_string(id, "group node"));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    out.groups.push_back(std::move(s));
  }
  return out;
}

NodeGroups node_groups_of(const SgiSet& set) {
  NodeGroups out;
  out.goi_type = set.goi_type;
  for (const auto& m : set.members) out.groups.push_back(m.node_ids());
  return out;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& err) {
    throw FormatError(path.string() + ": " + err.what());
  }
}

void write_text_atomic(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw FormatError("short write to " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw FormatError("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  write_text_atomic(path, j.dump(2) + "\n");
}

GraphPtr load_graph(const std::filesystem::path& path) {
  const Json j = read_json_file(path);
  try {
    return graph_from_json(j);
  } catch (const FormatError& err) {
    throw FormatError(path.string() + ": " + err.what());
  } catch (const nlohmann::json::exception& err) {
    throw FormatError(path.string() + ": " + err.what());
  }
}

SgiSet load_sgi_set(const std::filesystem::path& path, const GraphPtr& g) {
  const Json j = read_json_file(path);
  try {
    return sgi_set_from_json(j, g);
  } catch (const FormatError& err) {
    throw FormatError(path.string() + ": " + err.what());
  } catch (const nlohmann::json::exception& err) {
    throw FormatError(path.string() + ": " + err.what());
  }
}

}  // namespace sgi
