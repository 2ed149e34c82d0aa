#pragma once

#include <cstdint>
#include <optional>

#include "ecds/dominating_subtree.hpp"
#include "ecds/graph.hpp"
#include "ecds/reductions.hpp"

namespace ecds {

// Exhaustive reference solvers for small instances. Every solver refuses
// (CapError) above its size cap instead of silently running forever.

struct TwoEcdsOptimum {
  // Single-node convention: lowest node whose closed neighborhood is V, or -1.
  int universal_node = -1;
  // Three-plus convention: minimum dominating S with 2-edge-connected G[S].
  bool feasible = false;
  NodeSet nodes;  // lexicographically first minimum-size S
  EdgeSet edges;  // edge-minimal 2-edge-connected spanning subgraph of G[nodes]
};

TwoEcdsOptimum opt_2ecds(const Graph& g, int node_cap = 14);

struct TwoEcSubgraphOptimum {
  bool feasible = false;
  NodeSet nodes;
  EdgeSet edges;  // minimum-cardinality edge set whose subgraph is 2-edge-connected
                  // on >= 3 nodes and dominates the graph
};

TwoEcSubgraphOptimum opt_2ec_dominating_subgraph(const Graph& g, int node_cap = 14);

// Minimum link set making the covered forest a single dominating tree;
// nullopt when no link set works.
std::optional<EdgeSet> opt_dominating_subtree(const DSInstance& inst, int link_cap = 20);

// Minimum S ⊆ Q with connected induced subgraph dominating all of R.
std::optional<NodeSet> opt_subset_cds(const Graph& hat_g, const NodeSet& q_set,
                                      const NodeSet& r_set, int q_cap = 20);

struct GSTOptimum {
  std::int64_t cost = 0;
  NodeSet nodes;
  EdgeSet tree_edges;
};

// Minimum-cost tree touching every group (cost = sum of edge costs, unit when
// absent); nullopt when some group is unreachable from the others.
std::optional<GSTOptimum> opt_gst(const GSTInstance& inst, int node_cap = 16);

}  // namespace ecds
