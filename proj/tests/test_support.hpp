#pragma once

// Shared enumeration and brute-force helpers for the test binaries. Everything
// here is deliberately independent of the library's own algorithms: bridges
// and connectivity are recomputed from scratch so library results are checked
// against a second implementation.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ecds/graph.hpp"
#include "ecds/spanning_tree.hpp"

namespace testsupport {

using ecds::Edge;
using ecds::EdgeSet;
using ecds::Graph;
using ecds::NodeSet;

// All labeled trees on n nodes (n^(n-2) of them for n >= 3) from code
// sequences; each tree is a sorted edge set.
inline std::vector<EdgeSet> all_trees(int n) {
  if (n <= 0) return {};
  if (n == 1) return {EdgeSet{}};
  if (n == 2) return {EdgeSet{Edge{0, 1}}};
  std::vector<EdgeSet> out;
  std::vector<int> code(static_cast<size_t>(n - 2), 0);
  while (true) {
    std::vector<int> deg(static_cast<size_t>(n), 1);
    for (int x : code) ++deg[static_cast<size_t>(x)];
    std::vector<Edge> edges;
    std::vector<char> used(static_cast<size_t>(n), 0);
    for (int x : code) {
      int leaf = -1;
      for (int v = 0; v < n; ++v)
        if (!used[static_cast<size_t>(v)] && deg[static_cast<size_t>(v)] == 1) { leaf = v; break; }
      edges.push_back(ecds::make_edge(leaf, x));
      used[static_cast<size_t>(leaf)] = 1;
      --deg[static_cast<size_t>(x)];
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
      if (!used[static_cast<size_t>(v)] && deg[static_cast<size_t>(v)] == 1) (a == -1 ? a : b) = v;
    edges.push_back(ecds::make_edge(a, b));
    out.push_back(ecds::sorted_unique(std::move(edges)));
    int i = n - 3;
    while (i >= 0 && code[static_cast<size_t>(i)] == n - 1) code[static_cast<size_t>(i--)] = 0;
    if (i < 0) break;
    ++code[static_cast<size_t>(i)];
  }
  return out;
}

// Every graph on n labeled nodes, as edge sets indexed by pair bitmask.
inline std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return pairs;
}

inline EdgeSet edges_of_mask(const std::vector<Edge>& pairs, std::uint32_t mask) {
  EdgeSet out;
  for (size_t i = 0; i < pairs.size(); ++i)
    if ((mask >> i) & 1) out.push_back(pairs[i]);
  return out;
}

// Pairs that are not tree edges, in canonical order.
inline EdgeSet non_tree_pairs(int n, const EdgeSet& tree) {
  EdgeSet out;
  for (Edge e : all_pairs(n))
    if (!ecds::contains(tree, e)) out.push_back(e);
  return out;
}

inline ecds::SpanningTree tree_from_edges(const Graph& host, const EdgeSet& tree_edges, int root) {
  int n = host.node_count();
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (auto [u, v] : tree_edges) {
    adj[static_cast<size_t>(u)].push_back(v);
    adj[static_cast<size_t>(v)].push_back(u);
  }
  std::vector<int> parent(static_cast<size_t>(n), -1);
  parent[static_cast<size_t>(root)] = root;
  std::vector<int> queue{root};
  std::vector<char> seen(static_cast<size_t>(n), 0);
  seen[static_cast<size_t>(root)] = 1;
  for (size_t qi = 0; qi < queue.size(); ++qi)
    for (int w : adj[static_cast<size_t>(queue[qi])])
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        parent[static_cast<size_t>(w)] = queue[qi];
        queue.push_back(w);
      }
  return ecds::SpanningTree(host, root, parent);
}

// Node count reached from `start` over `edges`.
inline int brute_reach(int n, const EdgeSet& edges, int start) {
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (auto [u, v] : edges) {
    adj[static_cast<size_t>(u)].push_back(v);
    adj[static_cast<size_t>(v)].push_back(u);
  }
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<int> queue{start};
  seen[static_cast<size_t>(start)] = 1;
  int count = 1;
  for (size_t qi = 0; qi < queue.size(); ++qi)
    for (int w : adj[static_cast<size_t>(queue[qi])])
      if (!seen[static_cast<size_t>(w)]) { seen[static_cast<size_t>(w)] = 1; ++count; queue.push_back(w); }
  return count;
}

inline int brute_components(const Graph& g) {
  int n = g.node_count();
  std::vector<char> seen(static_cast<size_t>(n), 0);
  int comps = 0;
  for (int v = 0; v < n; ++v) {
    if (seen[static_cast<size_t>(v)]) continue;
    ++comps;
    std::vector<int> queue{v};
    seen[static_cast<size_t>(v)] = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi)
      for (int w : g.neighbors(queue[qi]))
        if (!seen[static_cast<size_t>(w)]) { seen[static_cast<size_t>(w)] = 1; queue.push_back(w); }
  }
  return comps;
}

// Bridge = edge whose removal raises the component count.
inline EdgeSet brute_bridges(const Graph& g) {
  EdgeSet out;
  int base = brute_components(g);
  for (Edge e : g.edges()) {
    EdgeSet rest = ecds::edge_difference(g.edges(), EdgeSet{e});
    Graph without(g.node_count(), rest);
    if (brute_components(without) > base) out.push_back(e);
  }
  return out;
}

inline bool brute_two_edge_connected(const Graph& g) {
  if (g.node_count() == 0) return false;
  if (g.node_count() == 1) return true;
  return brute_components(g) == 1 && brute_bridges(g).empty();
}

// Two edge-disjoint s-t paths exist iff no single edge removal separates s
// from t (and they are connected at all).
inline bool brute_two_edge_disjoint(const Graph& g, int s, int t) {
  auto connected = [&](const EdgeSet& edges) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(g.node_count()));
    for (auto [u, v] : edges) {
      adj[static_cast<size_t>(u)].push_back(v);
      adj[static_cast<size_t>(v)].push_back(u);
    }
    std::vector<char> seen(static_cast<size_t>(g.node_count()), 0);
    std::vector<int> queue{s};
    seen[static_cast<size_t>(s)] = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi)
      for (int w : adj[static_cast<size_t>(queue[qi])]) {
        if (w == t) return true;
        if (!seen[static_cast<size_t>(w)]) { seen[static_cast<size_t>(w)] = 1; queue.push_back(w); }
      }
    return false;
  };
  if (!connected(g.edges())) return false;
  for (Edge e : g.edges())
    if (!connected(ecds::edge_difference(g.edges(), EdgeSet{e}))) return false;
  return true;
}

}  // namespace testsupport
