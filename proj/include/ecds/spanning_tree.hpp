#pragma once

#include <cstdint>
#include <vector>

#include "ecds/graph.hpp"

namespace ecds {

// Rooted spanning tree of a host graph. Immutable once built.
class SpanningTree {
 public:
  // parent[root] == root; every other parent link must be a host edge.
  SpanningTree(Graph host, int root, std::vector<int> parent);

  const Graph& host() const { return host_; }
  int root() const { return root_; }
  int node_count() const { return host_.node_count(); }
  int parent(int v) const { return parent_[v]; }
  int depth(int v) const { return depth_[v]; }
  const EdgeSet& tree_edges() const { return tree_edges_; }
  bool is_tree_edge(Edge e) const { return contains(tree_edges_, e); }

  // Ordered edge list of the unique u-v tree path; empty when u == v.
  std::vector<Edge> path(int u, int v) const;
  // Nodes of the u-v tree path (sorted), endpoints included.
  NodeSet path_nodes(int u, int v) const;

 private:
  Graph host_;
  int root_;
  std::vector<int> parent_;
  std::vector<int> depth_;
  EdgeSet tree_edges_;
};

// Deterministic BFS tree: neighbors are scanned in index order.
// Throws InfeasibleError when the host is disconnected or empty.
SpanningTree bfs_tree(const Graph& g, int root);

// Randomized recursive star decomposition: pick the eccentricity-minimizing
// center (ties to the lowest index), cut a ball of radius drawn uniformly
// from [r/4, r/2], recurse on ball and petals, join each petal by its
// lexicographically smallest connecting edge. Deterministic for a fixed seed.
SpanningTree low_stretch_tree(const Graph& g, std::uint64_t seed);

struct StretchReport {
  int sigma_max = 1;        // max tree-path length over non-tree edges; 1 if none
  double sigma_avg = 1.0;
  std::vector<std::pair<Edge, int>> per_link;  // sorted by edge
};

// Tree-path length of every non-tree host edge.
StretchReport measure_stretch(const Graph& g, const SpanningTree& t);

}  // namespace ecds
