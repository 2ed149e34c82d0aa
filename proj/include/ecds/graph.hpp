#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ecds {

// An undirected edge, stored canonically with first < second.
using Edge = std::pair<int, int>;

// Sorted, duplicate-free node index list.
using NodeSet = std::vector<int>;

// Sorted, duplicate-free list of canonical edges.
using EdgeSet = std::vector<Edge>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

bool contains(const NodeSet& s, int v);
bool contains(const EdgeSet& s, Edge e);
NodeSet sorted_unique(std::vector<int> nodes);
EdgeSet sorted_unique(std::vector<Edge> edges);
bool is_subset(const NodeSet& a, const NodeSet& b);
NodeSet set_union(const NodeSet& a, const NodeSet& b);
NodeSet set_difference(const NodeSet& a, const NodeSet& b);
EdgeSet edge_difference(const EdgeSet& a, const EdgeSet& b);
bool intersects(std::span<const int> a, std::span<const int> b);  // both sorted

// Simple undirected graph on nodes 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;
  // Canonicalizes edge orientation and sorts; rejects loops, duplicates and
  // out-of-range endpoints.
  Graph(int n, std::vector<Edge> edges);

  int node_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const EdgeSet& edges() const { return edges_; }
  std::span<const int> neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;
  Edge edge(int index) const { return edges_[index]; }
  // Index of a canonical edge in edges(), or -1.
  int edge_index(Edge e) const;

 private:
  int n_ = 0;
  EdgeSet edges_;
  std::vector<std::vector<int>> adj_;
};

// Parses "n m" followed by m lines "u v". Either endpoint order is accepted;
// loops and duplicates are rejected. Errors name the offending line.
Graph parse_graph(const std::string& text);

// Inverse of parse_graph (canonical edge order).
std::string format_graph(const Graph& g);

struct TwoEdgeConnectivity {
  bool is_2ec = false;       // connected, nonempty, bridgeless
  EdgeSet bridges;           // edges whose removal disconnects their component
};

// A one-node graph counts as 2-edge-connected; a two-node graph never does.
TwoEdgeConnectivity two_edge_connectivity(const Graph& g);

// True iff every node of targets is in s or has a neighbor in s.
bool dominates(const Graph& g, const NodeSet& s, const NodeSet& targets);

// True iff two edge-disjoint s-t paths exist (unit-capacity flow, two
// augmenting rounds). s == t is a contract violation.
bool two_edge_disjoint_paths(const Graph& g, int s, int t);

int component_count(const Graph& g);
bool is_connected(const Graph& g);  // false for the empty graph

// 2-edge-connectivity of the subgraph (s, j): every edge endpoint must lie in
// s, and the edges must span s connectedly without bridges. A single node
// with no edges passes; the empty node set does not.
bool is_2ec_subgraph(const NodeSet& s, const EdgeSet& j);

NodeSet touched_nodes(const EdgeSet& edges);

}  // namespace ecds
