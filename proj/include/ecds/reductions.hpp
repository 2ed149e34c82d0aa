#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ecds/graph.hpp"

namespace ecds {

// Exact rational, used for the rounding scale; kept unreduced.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

// Accepts "a" or "a/b" with integer a, b.
Rational parse_rational(const std::string& text);

// Group Steiner tree instance: find a minimum-cost connected subgraph touching
// every group. Costs absent = every edge costs 1.
struct GSTInstance {
  Graph graph;
  std::vector<NodeSet> groups;
  std::optional<std::vector<std::int64_t>> edge_costs;

  void validate() const;
};

GSTInstance parse_gst(const std::string& text);
std::string format_gst(const GSTInstance& inst);

// Subset connected-dominating-set instance on a host graph whose nodes are
// partitioned into pickable nodes Q and dominated-only nodes R.
struct SubsetCDSInstance {
  Graph graph;
  NodeSet q_set;
  NodeSet r_set;
};

SubsetCDSInstance parse_subset_cds(const std::string& text);
std::string format_subset_cds(const SubsetCDSInstance& inst);

// Node-weighted partial domination instance: pick a connected node set of
// minimum weight dominating at least k_target nodes; nullopt-weighted nodes
// may not be picked.
struct PartialCDSInstance {
  Graph graph;
  std::vector<std::optional<std::int64_t>> weights;
  std::int64_t k_target = 0;
};

std::string format_partial_cds(const PartialCDSInstance& inst);

// Groups = dominator sets of each r in R; instance lives on the subgraph
// induced by Q (node i of the output = q_set[i]). A connected S ⊆ Q dominates
// R exactly when a tree on S touches every group.
GSTInstance subset_cds_to_gst(const Graph& hat_g, const NodeSet& q_set, const NodeSet& r_set);

// Unit costs only: adds one node per group adjacent to the group's members;
// Q = original nodes, R = the added nodes.
SubsetCDSInstance gst_to_subset_cds(const GSTInstance& inst);

struct RoundedGST {
  GSTInstance instance;                    // unit costs, zero-cost edges contracted, rest subdivided
  std::vector<std::int64_t> rounded_cost;  // per original edge; -1 = dropped (cost above the guess)
  Rational mu;                             // epsilon * m_guess / n, the rounding scale
  std::vector<int> node_map;               // original node -> node of `instance`
};

// Scale-and-round with guess m_guess for the largest useful cost: drop costlier
// edges, round each cost down to floor(cost/mu), contract zeros, subdivide the
// rest into unit-cost paths.
RoundedGST round_and_subdivide(const GSTInstance& inst, Rational epsilon, std::int64_t m_guess);

// Appends |Q| extra copies of R, each wired to the original dominators; picking
// enough dominated nodes then forces dominating all of R. Copy j of r_set[i]
// gets node id n + j*|R| + i.
PartialCDSInstance subset_cds_to_partial_cds(const Graph& hat_g, const NodeSet& q_set,
                                             const NodeSet& r_set,
                                             const std::vector<std::int64_t>& weights);

}  // namespace ecds
