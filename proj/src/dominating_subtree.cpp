#include "ecds/dominating_subtree.hpp"

#include <algorithm>
#include <numeric>

#include "ecds/errors.hpp"

namespace ecds {

DSInstance::DSInstance(Graph g, SpanningTree tree) : g_(std::move(g)), tree_(std::move(tree)) {
  if (tree_.host().node_count() != g_.node_count() ||
      !std::includes(g_.edges().begin(), g_.edges().end(), tree_.tree_edges().begin(),
                     tree_.tree_edges().end()))
    throw ArgumentError("tree does not span this graph");
  links_ = edge_difference(g_.edges(), tree_.tree_edges());
  path_nodes_.reserve(links_.size());
  path_edges_.reserve(links_.size());
  for (auto [u, v] : links_) {
    path_nodes_.push_back(tree_.path_nodes(u, v));
    auto path = tree_.path(u, v);
    std::sort(path.begin(), path.end());
    path_edges_.push_back(std::move(path));
  }
}

int DSInstance::link_index(Edge e) const {
  auto it = std::lower_bound(links_.begin(), links_.end(), e);
  if (it == links_.end() || *it != e) return -1;
  return static_cast<int>(it - links_.begin());
}

CoveredForest covered_forest(const DSInstance& inst, const EdgeSet& f) {
  std::vector<Edge> covered;
  for (Edge e : f) {
    int idx = inst.link_index(e);
    if (idx < 0)
      throw ArgumentError("edge " + std::to_string(e.first) + "-" + std::to_string(e.second) +
                          " is not a link of this instance");
    const EdgeSet& path = inst.link_path_edges(idx);
    covered.insert(covered.end(), path.begin(), path.end());
  }
  CoveredForest out;
  out.covered_tree_edges = sorted_unique(std::move(covered));

  // Group touched nodes by connectivity within the covered edges.
  NodeSet nodes = touched_nodes(out.covered_tree_edges);
  int n = inst.graph().node_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : out.covered_tree_edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  int next = 0;
  for (int v : nodes) {
    if (comp[v] != -1) continue;
    NodeSet members;
    std::vector<int> queue{v};
    comp[v] = next;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      members.push_back(queue[qi]);
      for (int w : adj[queue[qi]])
        if (comp[w] == -1) { comp[w] = next; queue.push_back(w); }
    }
    std::sort(members.begin(), members.end());
    out.components.push_back(std::move(members));
    ++next;
  }
  return out;
}

bool is_feasible_ds(const DSInstance& inst, const EdgeSet& f) {
  if (f.empty()) return false;
  CoveredForest forest = covered_forest(inst, f);
  if (!forest.single_tree()) return false;
  NodeSet all(inst.graph().node_count());
  std::iota(all.begin(), all.end(), 0);
  return dominates(inst.graph(), forest.components[0], all);
}

bool coverage_reachable(const DSInstance& inst, const EdgeSet& f, int s, int t) {
  if (s == t) throw ArgumentError("s and t must differ");
  int n = inst.graph().node_count();
  if (s < 0 || t < 0 || s >= n || t >= n) throw ArgumentError("s or t out of range");
  std::vector<int> link_ids;
  link_ids.reserve(f.size());
  for (Edge e : f) {
    int idx = inst.link_index(e);
    if (idx < 0) throw ArgumentError("edge is not a link of this instance");
    link_ids.push_back(idx);
  }
  // Alternating BFS over the bipartite coverage graph, without materializing it.
  std::vector<char> node_seen(n, 0), link_seen(link_ids.size(), 0);
  std::vector<int> queue{s};
  node_seen[s] = 1;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    for (size_t li = 0; li < link_ids.size(); ++li) {
      if (link_seen[li]) continue;
      auto nodes = inst.link_path_nodes(link_ids[li]);
      if (!std::binary_search(nodes.begin(), nodes.end(), v)) continue;
      link_seen[li] = 1;
      for (int w : nodes) {
        if (node_seen[w]) continue;
        if (w == t) return true;
        node_seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return false;
}

EdgeSet from_2ecc_subgraph(const DSInstance& inst, const EdgeSet& j) {
  EdgeSet jj = sorted_unique(j);  // certificates arrive from outside; normalize
  const Graph& g = inst.graph();
  for (Edge e : jj)
    if (!g.has_edge(e.first, e.second))
      throw CertificateError("subgraph uses an edge outside the graph");
  NodeSet s = touched_nodes(jj);
  if (!is_2ec_subgraph(s, jj))
    throw CertificateError("subgraph is not 2-edge-connected on its touched nodes");
  NodeSet all(g.node_count());
  std::iota(all.begin(), all.end(), 0);
  if (!dominates(g, s, all))
    throw CertificateError("subgraph nodes do not dominate the graph");
  return edge_difference(jj, inst.tree().tree_edges());
}

}  // namespace ecds
