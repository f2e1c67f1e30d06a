#include "helpers.hpp"
#include "symbreak/generators.hpp"
#include "symbreak/graph_io.hpp"
#include "symbreak/spec_json.hpp"

using namespace symbreak;

TEST(GraphIo, EdgeListRoundTrip) {
  for (const auto& g : {gen::q_graph(4, 3), gen::nanostar(1), gen::star(5), gen::complete(1)}) {
    auto text = io::to_edge_list(g);
    EXPECT_EQ(io::from_edge_list(text), g);
    EXPECT_EQ(io::parse_graph(text), g);
  }
}

TEST(GraphIo, JsonRoundTrip) {
  for (const auto& g : {gen::dutch(3, 5), gen::poly(6, 3, 2), gen::path(1)}) {
    auto text = io::to_json(g);
    EXPECT_EQ(io::from_json(text), g);
    EXPECT_EQ(io::parse_graph("  \n" + text), g);
  }
}

TEST(GraphIo, EdgeListHeader) {
  auto text = io::to_edge_list(gen::q_graph(5, 3));
  EXPECT_NE(text.find("\n15 25\n"), std::string::npos);
  EXPECT_EQ(io::from_json(io::to_json(gen::dutch(2, 3))).order(), 5u);
}

TEST(GraphIo, Dot) {
  auto dot = io::to_dot(gen::star(2));
  EXPECT_EQ(dot.rfind("graph", 0), 0u);
  EXPECT_NE(dot.find("0 -- 1"), std::string::npos);
  EXPECT_NE(dot.find("center"), std::string::npos);
}

TEST(GraphIo, ParseErrors) {
  EXPECT_CODE(io::from_edge_list("3 2\n0 1\n"), kParseError);
  EXPECT_CODE(io::from_edge_list("x y\n"), kParseError);
  EXPECT_CODE(io::from_edge_list("2 1\n0 0\n"), kSelfLoop);
  EXPECT_CODE(io::from_edge_list("2 1\n0 5\n"), kIndexOutOfRange);
  EXPECT_CODE(io::from_json("{\"n\": 2"), kParseError);
  EXPECT_CODE(io::from_json("{\"n\": 2, \"edges\": [[0]]}"), kParseError);
  EXPECT_CODE(io::parse_format("png"), kBadParams);
  EXPECT_CODE(io::read_file("/nonexistent/graph.txt"), kIoError);
}

TEST(SpecJson, RoundTrip) {
  auto spec = gen::parse_spec(R"({"kind": "chain", "parts": [
      {"kind": "cycle", "params": [6], "x": 0, "y": 2},
      {"kind": "star", "params": [3], "x": "center", "y": 1}]})");
  EXPECT_EQ(spec.kind, gen::FamilyKind::kChain);
  ASSERT_EQ(spec.parts.size(), 2u);
  auto again = gen::spec_from_json(gen::spec_to_json(spec));
  EXPECT_EQ(gen::spec_to_json(again), gen::spec_to_json(spec));
  EXPECT_EQ(gen::family(again), gen::family(spec));
  EXPECT_CODE(gen::parse_spec("{\"kind\": \"torus\"}"), kUnknownFamily);
  EXPECT_CODE(gen::parse_spec("[1,2"), kParseError);
}

TEST(SpecJson, NanostarBasesOverride) {
  auto spec = gen::parse_spec(R"({"kind": "nanostar", "params": [1],
      "G1": {"n": 2, "edges": [[0, 1]], "roles": {"root": 1}}})");
  EXPECT_EQ(gen::family(spec).order(), 4u);
}
