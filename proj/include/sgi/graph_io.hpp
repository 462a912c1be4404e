#pragma once

// JSON file formats.
//
//   graph:   {"nodes": [{"id", "attrs"}], "edges": [{"id", "src", "dst", "attrs"}]}
//   sgi set: {"type": "...", "groups": [{"nodes": [...], "edges": [...]}]}
//            "edges" may be omitted, in which case the group is node-induced.
//
// Writers emit keys in a fixed order and nodes/edges in index order, so the
// same in-memory value always serialises to the same bytes.

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sgi/graph.hpp"

namespace sgi {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Json = nlohmann::ordered_json;

Json attr_to_json(const AttrValue& v);
AttrValue attr_from_json(const Json& j);

Json graph_to_json(const Multigraph& g);
GraphPtr graph_from_json(const Json& j);

Json sgi_set_to_json(const SgiSet& set);
SgiSet sgi_set_from_json(const Json& j, const GraphPtr& g);

// A group reduced to its node ids; enough for scoring without the graph.
using NodeSet = std::vector<std::string>;  // sorted, unique

struct NodeGroups {
  std::string goi_type;
  std::vector<NodeSet> groups;
};
NodeGroups node_groups_from_json(const Json& j);
NodeGroups node_groups_of(const SgiSet& set);

// File helpers. Readers throw FormatError naming the path.
Json read_json_file(const std::filesystem::path& path);
// Writes path.tmp then renames it over path.
void write_text_atomic(const std::filesystem::path& path, const std::string& content);
void write_json_file(const std::filesystem::path& path, const Json& j);

GraphPtr load_graph(const std::filesystem::path& path);
SgiSet load_sgi_set(const std::filesystem::path& path, const GraphPtr& g);

}  // namespace sgi
