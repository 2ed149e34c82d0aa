#pragma once

#include <cstdint>
#include <vector>

#include "ecds/cdg.hpp"
#include "ecds/dominating_subtree.hpp"
#include "ecds/graph.hpp"
#include "ecds/spanning_tree.hpp"
#include "ecds/steiner_cds.hpp"

namespace ecds {

// Arithmetic facts recorded for every solve; holds() is re-checked on emission.
struct BoundChain {
  int covered_tree_edges = 0;  // |E(T_F)|
  int links_used = 0;          // |F|
  int sigma_max = 1;           // max tree-path length over links of the trial tree
  int greedy_size = 0;         // node count of the connector tree before patching
  int j_before_minimalize = 0;
  int s_size = 0;
  int j_size = 0;

  bool holds() const {
    return covered_tree_edges <= sigma_max * links_used &&
           links_used <= 3 * greedy_size &&
           j_before_minimalize <= covered_tree_edges + links_used &&
           j_size <= j_before_minimalize &&
           (s_size < 3 || (s_size <= j_size && j_size <= 2 * (s_size - 1)));
  }
};

struct SolutionCertificate {
  NodeSet s;
  EdgeSet j;
  EdgeSet f;  // non-tree edges used
  SpanningTree tree;
  int sigma_max = 1;
  BoundChain bounds;
  int trial_index = -1;  // 0 = BFS baseline, 1.. = sampled trees
};

// Minimum augmentation F (as graph edges) making the covered forest a single
// dominating tree; throws InfeasibleError when no F works for this tree.
EdgeSet solve_dominating_subtree(const DSInstance& inst);
EdgeSet solve_dominating_subtree(const CDGraph& cdg, PatchReport* report);

// The trees inspected by solve_2ecds: one BFS baseline plus `trials` sampled
// low-stretch trees, all derived deterministically from the seed.
std::vector<SpanningTree> trial_trees(const Graph& g, int trials, std::uint64_t seed);

// Remove edges (canonical scan to fixpoint) while (s, j) stays 2-edge-connected.
EdgeSet minimalize_2ecc(const NodeSet& s, const EdgeSet& j);

SolutionCertificate solve_2ecds(const Graph& g, int trials = 8, std::uint64_t seed = 0);

}  // namespace ecds
