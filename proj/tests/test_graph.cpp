#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "sgi/graph.hpp"
#include "sgi/graph_io.hpp"
#include "support.hpp"

using namespace sgi;
using namespace sgi::test;

TEST(BuildGraph, EmptyGraph) {
  auto g = build_graph({}, {});
  EXPECT_EQ(g->node_count(), 0u);
  EXPECT_EQ(g->edge_count(), 0u);
  EXPECT_TRUE(connected_components(g).empty());
}

TEST(BuildGraph, ParallelEdgesKeepDistinctIds) {
  auto g = make_graph({"A", "B"}, {{"A", "B"}, {"A", "B"}, {"B", "A"}});
  ASSERT_EQ(g->edge_count(), 3u);
  EXPECT_EQ(g->multiplicity(g->node_index("A"), g->node_index("B")), 3u);
  EXPECT_EQ(g->edge(0).id, "e0");
  EXPECT_EQ(g->edge(1).id, "e1");
  EXPECT_EQ(g->edge(2).id, "e2");
  EXPECT_EQ(g->degree(g->node_index("A")), 3u);
  EXPECT_EQ(g->neighbor_count(g->node_index("A")), 1u);
}

TEST(BuildGraph, DanglingEndpointNamesTheRecord) {
  try {
    make_graph({"A"}, {{"A", "Z"}});
    FAIL() << "expected GraphError";
  } catch (const GraphError& e) {
    EXPECT_NE(std::string(e.what()).find("Z"), std::string::npos);
  }
}

TEST(BuildGraph, RejectsDuplicateNodesAndSelfLoops) {
  EXPECT_THROW(make_graph({"A", "A"}, {}), GraphError);
  EXPECT_THROW(make_graph({"A"}, {{"A", "A"}}), GraphError);
}

TEST(BuildGraph, MissingAttributeKeysBecomeNull) {
  auto g = build_graph({{"A", {{"x", 1.0}}}, {"B", {{"y", std::string("k")}}}},
                       {{"A", "B", {{"w", true}}, {}}});
  const auto& a = g->node_attrs(g->node_index("A"));
  ASSERT_EQ(a.size(), 2u);
  EXPECT_TRUE(std::holds_alternative<std::monostate>(a.at("y")));
  EXPECT_EQ(g->node_attribute_keys(), (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(g->edge_attribute_keys(), (std::vector<std::string>{"w"}));
}

TEST(ThreeGroups, FixtureShape) {
  auto g = three_groups();
  EXPECT_EQ(g->node_count(), 31u);
  EXPECT_EQ(g->edge_count(), 48u);
  EXPECT_EQ(g->multiplicity(g->node_index("C"), g->node_index("E")), 2u);
  EXPECT_EQ(g->multiplicity(g->node_index("H"), g->node_index("w14")), 3u);
  EXPECT_EQ(connected_components(g).size(), 1u);
}

TEST(InducedSubgraph, EmptyAndIdentity) {
  auto g = clique(3);
  auto empty = induced(g, {});
  EXPECT_EQ(empty.node_count(), 0u);
  EXPECT_EQ(empty.edge_count(), 0u);
  EXPECT_FALSE(is_connected(empty));
  auto all = induced(g, {"n00", "n01", "n02"});
  EXPECT_EQ(all.edge_count(), 3u);
}

TEST(InducedSubgraph, ParallelPair) {
  auto g = three_groups();
  auto ce = induced(g, {"C", "E"});
  EXPECT_EQ(ce.edge_count(), 2u);
}

TEST(InducedSubgraph, UnknownNodeThrows) {
  EXPECT_THROW(induced(clique(3), {"nope"}), GraphError);
}

TEST(Subgraph, RejectsEdgeLeavingNodeSet) {
  auto g = path(3);
  EXPECT_THROW(Subgraph(g, {0, 1}, {1}), GraphError);
  Subgraph ok(g, {0, 1}, {0});
  EXPECT_EQ(ok.edge_count(), 1u);
  EXPECT_TRUE(is_connected(ok));
}

TEST(Components, TwoTriangles) {
  auto g = make_graph({"a", "b", "c", "d", "e", "f"},
                      {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"d", "e"}, {"e", "f"}, {"d", "f"}});
  auto cs = connected_components(g);
  ASSERT_EQ(cs.size(), 2u);
  EXPECT_EQ(cs[0].node_ids(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(cs[1].node_ids(), (std::vector<std::string>{"d", "e", "f"}));
  EXPECT_EQ(cs[0].edge_count(), 3u);
}

TEST(Components, OrderedBySmallestId) {
  auto g = make_graph({"z", "y", "b", "a"}, {{"z", "a"}, {"y", "b"}});
  auto cs = connected_components(g);
  ASSERT_EQ(cs.size(), 2u);
  EXPECT_EQ(cs[0].node_ids(), (std::vector<std::string>{"a", "z"}));
  EXPECT_EQ(cs[1].node_ids(), (std::vector<std::string>{"b", "y"}));
}

TEST(Components, SplitsOnceBackgroundAndCEAreGone) {
  auto g = three_groups();
  std::vector<bool> keep_n(g->node_count(), true), keep_e(g->edge_count(), true);
  for (NodeIndex v = 0; v < g->node_count(); ++v) {
    const auto& id = g->node_id(v);
    if (id[0] == 'w' || id[0] == 'x') keep_n[v] = false;
  }
  const auto c = g->node_index("C"), e = g->node_index("E");
  for (EdgeIndex k = 0; k < g->edge_count(); ++k) {
    const auto& ed = g->edge(k);
    if ((ed.u == c && ed.v == e) || (ed.u == e && ed.v == c)) keep_e[k] = false;
  }
  auto pruned = g->restrict_to(keep_n, keep_e);
  auto cs = connected_components(pruned);
  ASSERT_EQ(cs.size(), 3u);
  EXPECT_EQ(cs[0].node_ids(), (std::vector<std::string>{"A", "B", "C", "D"}));
  EXPECT_EQ(cs[1].node_ids(), (std::vector<std::string>{"E", "F", "G", "H", "I"}));
  EXPECT_EQ(cs[2].node_ids(), (std::vector<std::string>{"J", "K", "L", "M"}));
}

TEST(Components, PropertiesOnRandomGraphs) {
  Rng rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = random_multigraph(rng, rng.between(0, 25), rng.uniform(0.0, 0.3));
    auto cs = connected_components(g);
    std::size_t total = 0;
    std::vector<int> owner(g->node_count(), -1);
    for (std::size_t i = 0; i < cs.size(); ++i) {
      total += cs[i].node_count();
      EXPECT_TRUE(is_connected(cs[i]));
      for (NodeIndex v : cs[i].nodes()) {
        EXPECT_EQ(owner[v], -1);
        owner[v] = static_cast<int>(i);
      }
      for (EdgeIndex e : cs[i].edges()) {
        EXPECT_TRUE(cs[i].contains_node(g->edge(e).u));
        EXPECT_TRUE(cs[i].contains_node(g->edge(e).v));
      }
      // Idempotent on each component.
      auto again = connected_components(as_graph(cs[i]));
      ASSERT_EQ(again.size(), 1u);
      EXPECT_EQ(again[0].node_ids(), cs[i].node_ids());
    }
    EXPECT_EQ(total, g->node_count());
    std::vector<std::string> all;
    for (NodeIndex v = 0; v < g->node_count(); ++v) all.push_back(g->node_id(v));
    EXPECT_EQ(induced_subgraph(g, all).edge_count(), g->edge_count());
  }
}

TEST(SgiSet, MembersMustShareParent) {
  SgiSet s;
  s.members.push_back(induced(clique(3), {"n00"}));
  s.members.push_back(induced(clique(3), {"n00"}));
  EXPECT_THROW(s.validate(), GraphError);
}

TEST(GraphIo, RoundTripIsByteStable) {
  auto g = three_groups();
  const auto text = graph_to_json(*g).dump(2);
  auto back = graph_from_json(Json::parse(text));
  EXPECT_EQ(graph_to_json(*back).dump(2), text);
  EXPECT_EQ(back->edge(3).id, g->edge(3).id);
}

TEST(GraphIo, IntegerIdsAndMissingEdgeIds) {
  auto j = Json::parse(R"({"nodes":[{"id":1},{"id":2,"attrs":{"v":0.5}}],
                           "edges":[{"src":1,"dst":2},{"src":2,"dst":1}]})");
  auto g = graph_from_json(j);
  EXPECT_EQ(g->node_id(0), "1");
  EXPECT_EQ(g->edge(1).id, "e1");
  EXPECT_EQ(g->multiplicity(0, 1), 2u);
}

TEST(GraphIo, SgiSetWithAndWithoutEdges) {
  auto g = three_groups();
  auto j = Json::parse(R"({"type":"ring","groups":[{"nodes":["C","E"]},{"nodes":["C","E"],"edges":["e11"]}]})");
  auto set = sgi_set_from_json(j, g);
  ASSERT_EQ(set.size(), 2u);
  EXPECT_EQ(set.goi_type, "ring");
  EXPECT_EQ(set.members[0].edge_count(), 2u);
  EXPECT_EQ(set.members[1].edge_count(), 1u);
  auto again = sgi_set_from_json(sgi_set_to_json(set), g);
  EXPECT_EQ(again.members[1], set.members[1]);
  EXPECT_THROW(sgi_set_from_json(Json::parse(R"({"groups":[{"nodes":["nope"]}]})"), g), FormatError);
}

TEST(GraphIo, LoadErrorsNameThePath) {
  const auto dir = std::filesystem::temp_directory_path() / "sgi_test_graph_io";
  std::filesystem::create_directories(dir);
  const auto bad = dir / "broken.json";
  std::ofstream(bad) << "{ not json";
  try {
    load_graph(bad);
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("broken.json"), std::string::npos);
  }
  try {
    load_graph(dir / "absent.json");
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("absent.json"), std::string::npos);
  }
}

TEST(GraphIo, AtomicWriteLeavesNoTemp) {
  const auto dir = std::filesystem::temp_directory_path() / "sgi_test_graph_io";
  std::filesystem::create_directories(dir);
  const auto out = dir / "g.json";
  write_json_file(out, graph_to_json(*clique(3)));
  EXPECT_TRUE(std::filesystem::exists(out));
  EXPECT_FALSE(std::filesystem::exists(dir / "g.json.tmp"));
  EXPECT_EQ(load_graph(out)->edge_count(), 3u);
}
