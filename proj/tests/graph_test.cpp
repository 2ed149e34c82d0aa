#include <random>

#include "doctest.h"
#include "ecds/errors.hpp"
#include "ecds/generate.hpp"
#include "ecds/graph.hpp"
#include "test_support.hpp"

using namespace ecds;
namespace ts = testsupport;

TEST_CASE("edge and set helpers") {
  CHECK(make_edge(3, 1) == Edge{1, 3});
  CHECK(make_edge(1, 3) == Edge{1, 3});

  CHECK(sorted_unique(std::vector<int>{3, 1, 3, 2}) == NodeSet{1, 2, 3});
  CHECK(sorted_unique(std::vector<Edge>{{2, 3}, {0, 1}, {2, 3}}) == EdgeSet{{0, 1}, {2, 3}});

  NodeSet a{1, 3, 5}, b{1, 2, 3, 5, 8};
  CHECK(contains(a, 3));
  CHECK_FALSE(contains(a, 4));
  CHECK(is_subset(a, b));
  CHECK_FALSE(is_subset(b, a));
  CHECK(set_union(a, NodeSet{2, 3}) == NodeSet{1, 2, 3, 5});
  CHECK(set_difference(b, a) == NodeSet{2, 8});
  CHECK(edge_difference(EdgeSet{{0, 1}, {1, 2}}, EdgeSet{{1, 2}}) == EdgeSet{{0, 1}});
  CHECK(intersects(a, NodeSet{0, 5}));
  CHECK_FALSE(intersects(a, NodeSet{0, 2, 4}));
  CHECK_FALSE(intersects(a, NodeSet{}));

  CHECK(touched_nodes(EdgeSet{{0, 2}, {2, 4}}) == NodeSet{0, 2, 4});
  CHECK(touched_nodes(EdgeSet{}) == NodeSet{});
}

TEST_CASE("graph construction and accessors") {
  Graph g(4, {{2, 0}, {0, 1}, {1, 2}, {2, 3}});
  CHECK(g.node_count() == 4);
  CHECK(g.edge_count() == 4);
  CHECK(g.edges() == EdgeSet{{0, 1}, {0, 2}, {1, 2}, {2, 3}});
  CHECK(std::vector<int>(g.neighbors(2).begin(), g.neighbors(2).end()) ==
        std::vector<int>{0, 1, 3});
  CHECK(g.degree(2) == 3);
  CHECK(g.degree(3) == 1);
  CHECK(g.has_edge(2, 0));
  CHECK_FALSE(g.has_edge(0, 3));
  CHECK(g.edge_index({1, 2}) == 2);
  CHECK(g.edge_index({0, 3}) == -1);

  CHECK_THROWS_AS(Graph(3, {{1, 1}}), ArgumentError);            // loop
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), ArgumentError);    // duplicate
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), ArgumentError);            // out of range
  CHECK_THROWS_AS(Graph(2, {{-1, 0}}), ArgumentError);
}

TEST_CASE("graph parse and format") {
  Graph g = parse_graph("4 3\n1 0\n1 2\n2 3\n");
  CHECK(g.node_count() == 4);
  CHECK(g.edges() == EdgeSet{{0, 1}, {1, 2}, {2, 3}});
  CHECK(parse_graph(format_graph(g)).edges() == g.edges());

  CHECK(parse_graph("1 0\n").node_count() == 1);
  CHECK(parse_graph("0 0").node_count() == 0);

  CHECK_THROWS_AS(parse_graph(""), ParseError);
  CHECK_THROWS_AS(parse_graph("4\n"), ParseError);             // header arity
  CHECK_THROWS_AS(parse_graph("4 2\n0 1\n"), ParseError);      // missing edge line
  CHECK_THROWS_AS(parse_graph("4 1\n0 1\n2 3\n"), ParseError); // trailing line
  CHECK_THROWS_AS(parse_graph("4 1\n1 1\n"), ParseError);      // loop
  CHECK_THROWS_AS(parse_graph("4 2\n0 1\n1 0\n"), ParseError); // duplicate
  CHECK_THROWS_AS(parse_graph("4 1\n0 4\n"), ParseError);      // out of range
  CHECK_THROWS_AS(parse_graph("4 1\n0 x\n"), ParseError);      // non-numeric
}

TEST_CASE("two-edge-connectivity conventions") {
  CHECK_FALSE(two_edge_connectivity(Graph(0, {})).is_2ec);
  CHECK(two_edge_connectivity(Graph(1, {})).is_2ec);  // one node: yes
  auto k2 = two_edge_connectivity(Graph(2, {{0, 1}}));
  CHECK_FALSE(k2.is_2ec);                             // two nodes: never
  CHECK(k2.bridges == EdgeSet{{0, 1}});

  auto p3 = two_edge_connectivity(Graph(3, {{0, 1}, {1, 2}}));
  CHECK_FALSE(p3.is_2ec);
  CHECK(p3.bridges == EdgeSet{{0, 1}, {1, 2}});

  CHECK(two_edge_connectivity(Graph(3, {{0, 1}, {1, 2}, {0, 2}})).is_2ec);

  // Two triangles sharing a node: a cut node but no bridge.
  Graph bowtie(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  auto bt = two_edge_connectivity(bowtie);
  CHECK(bt.is_2ec);
  CHECK(bt.bridges.empty());

  // Disconnected: not 2EC, but each triangle alone is bridgeless.
  Graph twotri(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  auto tt = two_edge_connectivity(twotri);
  CHECK_FALSE(tt.is_2ec);
  CHECK(tt.bridges.empty());

  // Triangle with a pendant: the pendant edge is the only bridge.
  auto pend = two_edge_connectivity(Graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}));
  CHECK_FALSE(pend.is_2ec);
  CHECK(pend.bridges == EdgeSet{{2, 3}});
}

TEST_CASE("bridges against removal-based recomputation") {
  // Exhaustive n <= 5.
  for (int n = 1; n <= 5; ++n) {
    auto pairs = ts::all_pairs(n);
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
      Graph g(n, ts::edges_of_mask(pairs, mask));
      auto tec = two_edge_connectivity(g);
      CHECK(tec.bridges == ts::brute_bridges(g));
      CHECK(tec.is_2ec == ts::brute_two_edge_connected(g));
      CHECK(component_count(g) == ts::brute_components(g));
      CHECK(is_connected(g) == (ts::brute_components(g) == 1));
    }
  }
  // Random n in 6..9.
  for (int i = 0; i < 100; ++i) {
    int n = 6 + i % 4;
    Graph g = random_graph(n, 0.15 + 0.1 * (i % 7), 1000 + i);
    auto tec = two_edge_connectivity(g);
    CHECK(tec.bridges == ts::brute_bridges(g));
    CHECK(tec.is_2ec == ts::brute_two_edge_connected(g));
  }
}

TEST_CASE("two edge-disjoint paths against single-removal recomputation") {
  for (int n = 2; n <= 4; ++n) {
    auto pairs = ts::all_pairs(n);
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
      Graph g(n, ts::edges_of_mask(pairs, mask));
      for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
          if (s != t) CHECK(two_edge_disjoint_paths(g, s, t) == ts::brute_two_edge_disjoint(g, s, t));
    }
  }
  for (int i = 0; i < 60; ++i) {
    int n = 5 + i % 4;
    Graph g = random_graph(n, 0.3 + 0.1 * (i % 5), 77 + i);
    for (int s = 0; s < n; ++s)
      for (int t = s + 1; t < n; ++t)
        CHECK(two_edge_disjoint_paths(g, s, t) == ts::brute_two_edge_disjoint(g, s, t));
  }
  CHECK_THROWS_AS(two_edge_disjoint_paths(Graph(2, {{0, 1}}), 1, 1), ArgumentError);
}

TEST_CASE("domination") {
  Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(dominates(star, {0}, {0, 1, 2, 3}));
  CHECK_FALSE(dominates(star, {1}, {0, 1, 2, 3}));
  CHECK(dominates(star, {1}, {0, 1}));
  CHECK(dominates(star, {}, {}));
  CHECK_FALSE(dominates(star, {}, {2}));

  Graph p5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  CHECK(dominates(p5, {1, 3}, {0, 1, 2, 3, 4}));
  CHECK_FALSE(dominates(p5, {1}, {0, 1, 2, 3, 4}));
}

TEST_CASE("subgraph two-edge-connectivity") {
  CHECK(is_2ec_subgraph({3}, {}));          // single node passes
  CHECK_FALSE(is_2ec_subgraph({}, {}));     // empty set does not
  CHECK_FALSE(is_2ec_subgraph({0, 1}, {{0, 1}}));
  CHECK(is_2ec_subgraph({0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK_FALSE(is_2ec_subgraph({0, 1, 2}, {{0, 1}, {1, 2}}));         // path: bridges
  CHECK_FALSE(is_2ec_subgraph({0, 1, 2, 3}, {{0, 1}, {1, 2}, {0, 2}}));  // 3 isolated
  CHECK_FALSE(is_2ec_subgraph({0, 1}, {{0, 1}, {1, 2}, {0, 2}}));    // endpoint outside s
  CHECK(is_2ec_subgraph({0, 1, 2, 5}, {{0, 1}, {1, 2}, {0, 2}}) == false);
  CHECK(is_2ec_subgraph({2, 4, 7}, {{2, 4}, {4, 7}, {2, 7}}));       // ids need not be dense
}
