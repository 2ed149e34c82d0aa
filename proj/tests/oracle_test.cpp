#include <numeric>
#include <optional>

#include "doctest.h"
#include "ecds/errors.hpp"
#include "ecds/generate.hpp"
#include "ecds/oracle.hpp"
#include "ecds/pipeline.hpp"
#include "test_support.hpp"

using namespace ecds;
namespace ts = testsupport;

namespace {

Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back(make_edge(i, (i + 1) % n));
  return Graph(n, std::move(e));
}

Graph complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, std::move(e));
}

// Second, edge-driven route to both optima: scan all edge subsets and keep
// qualifying ones (2-edge-connected on >= 3 touched nodes, dominating).
struct EdgeDrivenOptima {
  bool feasible = false;
  size_t min_nodes = 0;
  size_t min_edges = 0;
};

EdgeDrivenOptima edge_driven(const Graph& g) {
  EdgeDrivenOptima out;
  int m = g.edge_count();
  REQUIRE(m <= 16);
  NodeSet all(g.node_count());
  std::iota(all.begin(), all.end(), 0);
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    EdgeSet j;
    for (int b = 0; b < m; ++b)
      if ((mask >> b) & 1) j.push_back(g.edge(b));
    NodeSet s = touched_nodes(j);
    if (s.size() < 3) continue;
    if (!is_2ec_subgraph(s, j)) continue;
    if (!dominates(g, s, all)) continue;
    if (!out.feasible) {
      out.feasible = true;
      out.min_nodes = s.size();
      out.min_edges = j.size();
    } else {
      out.min_nodes = std::min(out.min_nodes, s.size());
      out.min_edges = std::min(out.min_edges, j.size());
    }
  }
  return out;
}

}  // namespace

TEST_CASE("node-optimum solver on fixed graphs") {
  auto k4 = opt_2ecds(complete(4));
  CHECK(k4.universal_node == 0);
  CHECK(k4.feasible);
  CHECK(k4.nodes == NodeSet{0, 1, 2});
  CHECK(k4.edges == EdgeSet{{0, 1}, {0, 2}, {1, 2}});

  auto c5 = opt_2ecds(cycle(5));
  CHECK(c5.universal_node == -1);
  CHECK(c5.feasible);
  CHECK(c5.nodes == NodeSet{0, 1, 2, 3, 4});
  CHECK(c5.edges == cycle(5).edges());

  // Star: the hub reaches everything but nothing is 2-edge-connected.
  auto star = opt_2ecds(Graph(4, {{0, 1}, {0, 2}, {0, 3}}));
  CHECK(star.universal_node == 0);
  CHECK_FALSE(star.feasible);
  CHECK(star.nodes.empty());
  CHECK(star.edges.empty());

  // Three-node path: the middle node is universal, still infeasible.
  auto p3 = opt_2ecds(Graph(3, {{0, 1}, {1, 2}}));
  CHECK(p3.universal_node == 1);
  CHECK_FALSE(p3.feasible);

  auto k1 = opt_2ecds(Graph(1, {}));
  CHECK(k1.universal_node == 0);
  CHECK_FALSE(k1.feasible);  // the three-plus convention

  auto empty = opt_2ecds(Graph(0, {}));
  CHECK(empty.universal_node == -1);
  CHECK_FALSE(empty.feasible);

  CHECK_THROWS_AS(opt_2ecds(random_graph(15, 0.3, 1)), CapError);
  CHECK_THROWS_AS(opt_2ecds(complete(4), 3), CapError);
}

TEST_CASE("edge-optimum solver on fixed graphs") {
  auto k4 = opt_2ec_dominating_subgraph(complete(4));
  CHECK(k4.feasible);
  CHECK(k4.edges.size() == 3);
  CHECK(k4.nodes.size() == 3);

  // Wheel: hub plus two adjacent rim nodes form a dominating triangle.
  std::vector<Edge> wheel{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
                          {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}};
  auto w5 = opt_2ec_dominating_subgraph(Graph(6, wheel));
  CHECK(w5.feasible);
  CHECK(w5.edges.size() == 3);
  CHECK(contains(w5.nodes, 0));

  auto c5 = opt_2ec_dominating_subgraph(cycle(5));
  CHECK(c5.edges.size() == 5);

  auto star = opt_2ec_dominating_subgraph(Graph(4, {{0, 1}, {0, 2}, {0, 3}}));
  CHECK_FALSE(star.feasible);
  CHECK(star.edges.empty());
}

TEST_CASE("node and edge optima agree with an edge-driven scan") {
  // Exhaustive over all graphs on up to five nodes.
  for (int n = 1; n <= 5; ++n) {
    auto pairs = ts::all_pairs(n);
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
      Graph g(n, ts::edges_of_mask(pairs, mask));
      auto by_nodes = opt_2ecds(g);
      auto by_edges = opt_2ec_dominating_subgraph(g);
      auto scan = edge_driven(g);
      CHECK(by_nodes.feasible == scan.feasible);
      CHECK(by_edges.feasible == scan.feasible);
      if (scan.feasible) {
        CHECK(by_nodes.nodes.size() == scan.min_nodes);
        CHECK(by_edges.edges.size() == scan.min_edges);
        // Returned witnesses are valid.
        NodeSet all(n);
        std::iota(all.begin(), all.end(), 0);
        CHECK(is_2ec_subgraph(by_nodes.nodes, by_nodes.edges));
        CHECK(dominates(g, by_nodes.nodes, all));
        CHECK(is_2ec_subgraph(by_edges.nodes, by_edges.edges));
        CHECK(dominates(g, by_edges.nodes, all));
        CHECK(by_edges.edges.size() >= by_nodes.nodes.size());
      }
    }
  }
  // Random sparse graphs on six to eight nodes.
  int checked = 0;
  for (int i = 0; checked < 60 && i < 400; ++i) {
    int n = 6 + i % 3;
    Graph g = random_connected_graph(n, 0.2, 5500 + i);
    if (g.edge_count() > 16) continue;
    ++checked;
    auto by_nodes = opt_2ecds(g);
    auto by_edges = opt_2ec_dominating_subgraph(g);
    auto scan = edge_driven(g);
    CHECK(by_nodes.feasible == scan.feasible);
    if (scan.feasible) {
      CHECK(by_nodes.nodes.size() == scan.min_nodes);
      CHECK(by_edges.edges.size() == scan.min_edges);
    }
  }
  CHECK(checked == 60);
}

TEST_CASE("link-set optimum") {
  Graph g(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {1, 3}});
  DSInstance inst(g, ts::tree_from_edges(g, {{0, 1}, {1, 2}, {2, 3}}, 0));
  auto f = opt_dominating_subtree(inst);
  REQUIRE(f.has_value());
  CHECK(*f == EdgeSet{{0, 2}});

  Graph c4 = cycle(4);
  DSInstance ic4(c4, bfs_tree(c4, 0));
  CHECK(*opt_dominating_subtree(ic4) == EdgeSet{{2, 3}});

  Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  DSInstance bare(p4, bfs_tree(p4, 0));
  CHECK_FALSE(opt_dominating_subtree(bare).has_value());

  CHECK_THROWS_AS(opt_dominating_subtree(inst, 1), CapError);

  // The exhaustive answer never beats a feasible set and is itself feasible.
  for (int i = 0; i < 25; ++i) {
    Graph rg = random_connected_graph(7, 0.35, 6600 + i);
    DSInstance ri(rg, bfs_tree(rg, 0));
    auto opt = opt_dominating_subtree(ri);
    if (!opt) continue;
    CHECK(is_feasible_ds(ri, *opt));
    EdgeSet greedy = solve_dominating_subtree(ri);
    CHECK(opt->size() <= greedy.size());
  }
}

TEST_CASE("subset connected-domination optimum") {
  Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  auto got = opt_subset_cds(p4, {1, 2}, {0, 3});
  REQUIRE(got.has_value());
  CHECK(*got == NodeSet{1, 2});

  CHECK_FALSE(opt_subset_cds(p4, {1}, {3}).has_value());  // 1 cannot reach 3
  CHECK(opt_subset_cds(p4, {1}, {0, 2}) == NodeSet{1});

  // Both picks needed but not adjacent: no connected solution.
  Graph split(4, {{0, 2}, {1, 3}});
  CHECK_FALSE(opt_subset_cds(split, {0, 1}, {2, 3}).has_value());

  CHECK(opt_subset_cds(Graph(2, {{0, 1}}), {}, {}) == NodeSet{});
  CHECK_FALSE(opt_subset_cds(Graph(2, {{0, 1}}), {}, {0}).has_value());
  CHECK_THROWS_AS(opt_subset_cds(p4, {1, 2}, {2, 3}), ArgumentError);  // overlap
  CHECK_THROWS_AS(opt_subset_cds(p4, {0, 9}, {3}), ArgumentError);
  CHECK_THROWS_AS(opt_subset_cds(complete(5), {0, 1, 2, 3, 4}, {}, 3), CapError);
}

TEST_CASE("group tree optimum") {
  Graph k3 = complete(3);
  auto unit = opt_gst({k3, {{0}, {1}}, std::nullopt});
  REQUIRE(unit.has_value());
  CHECK(unit->cost == 1);
  CHECK(unit->nodes == NodeSet{0, 1});
  CHECK(unit->tree_edges == EdgeSet{{0, 1}});

  // A cheap relay node beats the direct expensive edge.
  auto relay = opt_gst({k3, {{0}, {1}}, std::vector<std::int64_t>{5, 1, 1}});
  REQUIRE(relay.has_value());
  CHECK(relay->cost == 2);
  CHECK(relay->nodes == NodeSet{0, 1, 2});
  CHECK(relay->tree_edges == EdgeSet{{0, 2}, {1, 2}});

  // A single group is hit by a single node at zero cost.
  Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  auto single = opt_gst({p4, {{0, 3}}, std::nullopt});
  REQUIRE(single.has_value());
  CHECK(single->cost == 0);
  CHECK(single->nodes == NodeSet{0});
  CHECK(single->tree_edges.empty());

  // No groups: the empty tree.
  auto none = opt_gst({p4, {}, std::nullopt});
  REQUIRE(none.has_value());
  CHECK(none->cost == 0);
  CHECK(none->nodes.empty());

  // Groups in different components cannot be joined.
  CHECK_FALSE(opt_gst({Graph(4, {{0, 1}, {2, 3}}), {{0}, {2}}, std::nullopt}).has_value());

  CHECK_THROWS_AS(opt_gst({k3, {{}}, std::nullopt}), ArgumentError);
  CHECK_THROWS_AS(opt_gst({k3, {{7}}, std::nullopt}), ArgumentError);
  CHECK_THROWS_AS(opt_gst({k3, {{0}}, std::vector<std::int64_t>{1}}), ArgumentError);
  CHECK_THROWS_AS(opt_gst({random_graph(17, 0.2, 3), {{0}}, std::nullopt}), CapError);
}
