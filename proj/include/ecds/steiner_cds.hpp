#pragma once

#include "ecds/cdg.hpp"
#include "ecds/graph.hpp"

namespace ecds {

// A tree inside a host graph whose nodes dominate a terminal set.
struct CDSTree {
  NodeSet nodes;
  EdgeSet tree_edges;  // host edges forming a spanning tree of nodes

  // Asserts tree shape, domination of r_set, and that no leaf in r_set could
  // be pruned without losing domination. Throws on violation.
  void validate(const Graph& host, const NodeSet& r_set) const;
};

// Color greedy: repeatedly add the single node, or adjacent pair, next to the
// current tree that dominates the most undominated terminals; ties go to the
// lowest index. Terminal-set leaves are pruned afterwards while domination
// allows. When every terminal is isolated from a candidate component the
// instance is infeasible.
CDSTree greedy_steiner_cds(const Graph& hat_g, const NodeSet& r_set);

struct PatchReport {
  int s_size = 0;            // nodes of the input tree
  int q_t = 0;               // q-nodes of the input tree
  int r_t = 0;               // r-nodes of the input tree
  int degree_excess = 0;     // sum over r-nodes of (tree degree - 1)
  int f_size = 0;            // q-nodes of the patched solution
};

// Replaces the r-nodes of a solution tree by short connectors between their
// q-neighbors (star over each r-node's neighbor list, centered on the lowest
// index), yielding a pure q-side solution of size at most 3 times the input.
// The tree must be a valid CDSTree on the plain-graph view of the cdg with
// its r-nodes as terminals.
NodeSet patch_into_q(const CDGraph& cdg, const CDSTree& s, PatchReport* report = nullptr);

}  // namespace ecds
