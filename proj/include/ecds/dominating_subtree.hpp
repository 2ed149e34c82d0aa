#pragma once

#include <span>

#include "ecds/graph.hpp"
#include "ecds/spanning_tree.hpp"

namespace ecds {

// A graph with a distinguished spanning tree. The non-tree edges ("links")
// are the candidate generators: each link f covers the tree edges of its
// tree path T_f. Immutable once built; link path node sets are precomputed.
class DSInstance {
 public:
  DSInstance(Graph g, SpanningTree tree);

  const Graph& graph() const { return g_; }
  const SpanningTree& tree() const { return tree_; }
  const EdgeSet& links() const { return links_; }
  int link_count() const { return static_cast<int>(links_.size()); }
  Edge link(int index) const { return links_[index]; }
  // Index within links() of a canonical non-tree edge, or -1.
  int link_index(Edge e) const;
  // Sorted nodes of the link's tree path (endpoints included).
  std::span<const int> link_path_nodes(int index) const { return path_nodes_[index]; }
  // Tree edges of the link's path (sorted canonical).
  const EdgeSet& link_path_edges(int index) const { return path_edges_[index]; }

 private:
  Graph g_;
  SpanningTree tree_;
  EdgeSet links_;
  std::vector<NodeSet> path_nodes_;
  std::vector<EdgeSet> path_edges_;
};

struct CoveredForest {
  EdgeSet covered_tree_edges;        // union of T_f over f in F
  std::vector<NodeSet> components;   // nodes touched, grouped by connectivity
  bool single_tree() const { return components.size() == 1; }
};

// Union of the tree paths of the chosen links. Any member of f outside the
// instance's link set is a contract violation.
CoveredForest covered_forest(const DSInstance& inst, const EdgeSet& f);

// Feasible iff the covered forest is one nonempty tree whose nodes dominate
// every graph node. The empty link set is infeasible.
bool is_feasible_ds(const DSInstance& inst, const EdgeSet& f);

// Reachability in the coverage graph H on F + V, where a link is adjacent to
// every node on its tree path. Equivalent to the existence of two
// edge-disjoint s-t paths in tree + F. s == t is a contract violation.
bool coverage_reachable(const DSInstance& inst, const EdgeSet& f, int s, int t);

// Extracts the non-tree edges of a 2-edge-connected dominating subgraph J.
// Throws CertificateError when (touched nodes of J, J) is not one.
EdgeSet from_2ecc_subgraph(const DSInstance& inst, const EdgeSet& j);

}  // namespace ecds
