#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using lmss::Error;
using lmss::ErrorKind;
using lmss::Graph;

TEST_CASE("fixture files match the built-in constructions") {
  for (const std::string& name : lmss::all_fixture_names()) {
    Graph from_file = testutil::fixture_file(name);
    Graph programmatic = lmss::fixture_by_name(name);
    INFO(name);
    REQUIRE(from_file == programmatic);
  }
}

TEST_CASE("edge list round trip is exact") {
  std::mt19937_64 rng(4242);
  std::vector<Graph> subjects;
  for (const std::string& name : lmss::all_fixture_names())
    subjects.push_back(lmss::fixture_by_name(name));
  for (int trial = 0; trial < 20; ++trial)
    subjects.push_back(oracle::random_graph(rng, 1 + static_cast<int>(rng() % 12),
                                            0.35, "r" + std::to_string(trial)));
  subjects.push_back(lmss::build_graph({"lone", "pair1", "pair2"},
                                       {{"pair1", "pair2"}}, "with-isolated"));
  for (const Graph& g : subjects) {
    Graph back = lmss::parse_edge_list(lmss::write_edge_list(g), g.label());
    REQUIRE(back == g);
    REQUIRE(back.label() == g.label());
    for (int v = 0; v < g.vertex_count(); ++v)
      REQUIRE(back.name(v) == g.name(v));
  }
}

TEST_CASE("edge list parser diagnostics") {
  SECTION("comments and blank lines are fine") {
    Graph g = lmss::parse_edge_list("# header\n\na b # trailing\nvertex c\n");
    REQUIRE(g.vertex_count() == 3);
    REQUIRE(g.edge_count() == 1);
  }
  SECTION("wrong token count names the line") {
    try {
      lmss::parse_edge_list("a b\nx y z\n");
      FAIL("expected a parse error");
    } catch (const Error& e) {
      REQUIRE(e.kind() == ErrorKind::parse_error);
      REQUIRE(std::string(e.what()).find("line 2") != std::string::npos);
    }
  }
  SECTION("loops are parse errors") {
    try {
      lmss::parse_edge_list("a a\n");
      FAIL("expected a parse error");
    } catch (const Error& e) {
      REQUIRE(e.kind() == ErrorKind::parse_error);
    }
  }
  SECTION("duplicate edges are parse errors") {
    try {
      lmss::parse_edge_list("a b\nb a\n");
      FAIL("expected a parse error");
    } catch (const Error& e) {
      REQUIRE(e.kind() == ErrorKind::parse_error);
    }
  }
  SECTION("bad vertex line") {
    REQUIRE_THROWS_AS(lmss::parse_edge_list("vertex\n"), Error);
    REQUIRE_THROWS_AS(lmss::parse_edge_list("vertex a b\n"), Error);
  }
}

TEST_CASE("graph6 anchors") {
  Graph k2 = lmss::build_graph({"a", "b"}, {{"a", "b"}});
  REQUIRE(lmss::encode_graph6(k2) == "A_");
  REQUIRE(lmss::encode_graph6(testutil::complete_graph(3)) == "Bw");
  REQUIRE(lmss::encode_graph6(lmss::build_graph({"a"}, {})) == "@");
  Graph empty;
  REQUIRE(lmss::encode_graph6(empty) == "?");
}

TEST_CASE("graph6 round trip") {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 40; ++trial) {
    int n = static_cast<int>(rng() % 13);
    Graph g = oracle::random_graph(rng, n, 0.4);
    Graph back = lmss::decode_graph6(lmss::encode_graph6(g));
    REQUIRE(back.vertex_count() == g.vertex_count());
    REQUIRE(back.edges() == g.edges());
  }
  SECTION("largest supported size") {
    Graph g = oracle::random_graph(rng, 62, 0.1);
    Graph back = lmss::decode_graph6(lmss::encode_graph6(g));
    REQUIRE(back.edges() == g.edges());
  }
  SECTION("too many vertices") {
    std::vector<std::string> names(63);
    for (int i = 0; i < 63; ++i) names[i] = std::to_string(i);
    Graph big = lmss::build_graph(names, {});
    REQUIRE_THROWS_AS(lmss::encode_graph6(big), Error);
  }
}

TEST_CASE("graph6 decoding tolerances and failures") {
  SECTION("header and whitespace") {
    Graph g = lmss::decode_graph6(">>graph6<<Bw\n");
    REQUIRE(g.vertex_count() == 3);
    REQUIRE(g.edge_count() == 3);
  }
  SECTION("byte out of range") {
    try {
      lmss::decode_graph6("B\x01");
      FAIL("expected a parse error");
    } catch (const Error& e) {
      REQUIRE(e.kind() == ErrorKind::parse_error);
    }
  }
  SECTION("wrong length") {
    REQUIRE_THROWS_AS(lmss::decode_graph6("B"), Error);
    REQUIRE_THROWS_AS(lmss::decode_graph6("Bww"), Error);
  }
  SECTION("padding must be zero") {
    // Three vertices use three pair bits; the low three bits of the data
    // byte are padding. 'w' + 1 sets one of them.
    std::string bad = "B";
    bad.push_back('w' + 1);
    REQUIRE_THROWS_AS(lmss::decode_graph6(bad), Error);
  }
  SECTION("empty record") {
    REQUIRE_THROWS_AS(lmss::decode_graph6("   "), Error);
  }
}

TEST_CASE("graph6 line parsing") {
  std::vector<Graph> graphs = lmss::parse_graph6_lines("A_\n\nBw\n");
  REQUIRE(graphs.size() == 2);
  REQUIRE(graphs[0].vertex_count() == 2);
  REQUIRE(graphs[1].vertex_count() == 3);
  REQUIRE(graphs[1].label() == "Bw");
  try {
    lmss::parse_graph6_lines("A_\nB\n");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    REQUIRE(e.kind() == ErrorKind::parse_error);
    REQUIRE(std::string(e.what()).find("record 2") != std::string::npos);
  }
}
