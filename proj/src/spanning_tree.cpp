#include "ecds/spanning_tree.hpp"

#include <algorithm>
#include <random>

#include "ecds/errors.hpp"

namespace ecds {

SpanningTree::SpanningTree(Graph host, int root, std::vector<int> parent)
    : host_(std::move(host)), root_(root), parent_(std::move(parent)) {
  int n = host_.node_count();
  if (n == 0) throw ArgumentError("empty host graph");
  if (root_ < 0 || root_ >= n) throw ArgumentError("root out of range");
  if (static_cast<int>(parent_.size()) != n) throw ArgumentError("parent size mismatch");
  if (parent_[root_] != root_) throw ArgumentError("parent[root] must equal root");
  depth_.assign(n, -1);
  depth_[root_] = 0;
  for (int v = 0; v < n; ++v) {
    // Walk up to a node of known depth, then unwind.
    std::vector<int> chain;
    int x = v;
    while (depth_[x] == -1) {
      chain.push_back(x);
      int p = parent_[x];
      if (p == x || p < 0 || p >= n || !host_.has_edge(p, x))
        throw ArgumentError("parent links do not form a spanning tree of the host");
      x = p;
      if (static_cast<int>(chain.size()) > n)
        throw ArgumentError("parent links contain a cycle");
    }
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
      depth_[*it] = depth_[parent_[*it]] + 1;
  }
  for (int v = 0; v < n; ++v)
    if (v != root_) tree_edges_.push_back(make_edge(v, parent_[v]));
  std::sort(tree_edges_.begin(), tree_edges_.end());
}

std::vector<Edge> SpanningTree::path(int u, int v) const {
  int n = host_.node_count();
  if (u < 0 || v < 0 || u >= n || v >= n) throw ArgumentError("path endpoint out of range");
  std::vector<Edge> up, down;
  int a = u, b = v;
  while (depth_[a] > depth_[b]) {
    up.push_back(make_edge(a, parent_[a]));
    a = parent_[a];
  }
  while (depth_[b] > depth_[a]) {
    down.push_back(make_edge(b, parent_[b]));
    b = parent_[b];
  }
  while (a != b) {
    up.push_back(make_edge(a, parent_[a]));
    down.push_back(make_edge(b, parent_[b]));
    a = parent_[a];
    b = parent_[b];
  }
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

NodeSet SpanningTree::path_nodes(int u, int v) const {
  std::vector<int> nodes{u};
  int a = u, b = v;
  while (depth_[a] > depth_[b]) { a = parent_[a]; nodes.push_back(a); }
  while (depth_[b] > depth_[a]) { nodes.push_back(b); b = parent_[b]; }
  while (a != b) {
    a = parent_[a]; nodes.push_back(a);
    nodes.push_back(b); b = parent_[b];
  }
  if (u != v) nodes.push_back(v);
  return sorted_unique(std::move(nodes));
}

SpanningTree bfs_tree(const Graph& g, int root) {
  int n = g.node_count();
  if (n == 0) throw InfeasibleError("cannot span an empty graph");
  if (root < 0 || root >= n) throw ArgumentError("root out of range");
  std::vector<int> parent(n, -1);
  parent[root] = root;
  std::vector<int> queue{root};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    for (int w : g.neighbors(v)) {
      if (parent[w] != -1) continue;
      parent[w] = v;
      queue.push_back(w);
    }
  }
  if (static_cast<int>(queue.size()) != n)
    throw InfeasibleError("graph is disconnected; no spanning tree exists");
  return SpanningTree(g, root, std::move(parent));
}

namespace {

// BFS distances within an induced node subset (alive mask).
std::vector<int> bfs_dist_within(const Graph& g, const std::vector<char>& alive, int src) {
  std::vector<int> dist(g.node_count(), -1);
  dist[src] = 0;
  std::vector<int> queue{src};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    for (int w : g.neighbors(v)) {
      if (!alive[w] || dist[w] != -1) continue;
      dist[w] = dist[v] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

// Recursive star decomposition over the nodes marked alive (assumed to induce
// a connected subgraph). Appends chosen tree edges.
void star_decompose(const Graph& g, std::vector<char>& alive, const std::vector<int>& members,
                    std::mt19937_64& rng, std::vector<Edge>& out) {
  if (members.size() <= 1) return;
  // Center: eccentricity minimizer, ties to the lowest index.
  int center = -1, radius = -1;
  for (int v : members) {
    auto dist = bfs_dist_within(g, alive, v);
    int ecc = 0;
    for (int w : members) ecc = std::max(ecc, dist[w]);
    if (center == -1 || ecc < radius) { center = v; radius = ecc; }
  }
  if (radius <= 0) return;  // unreachable for |members| > 1 on a connected piece
  int lo = radius / 4, hi = radius / 2;
  int rho = lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  auto dist = bfs_dist_within(g, alive, center);

  std::vector<int> ball;
  for (int v : members)
    if (dist[v] <= rho) ball.push_back(v);
  std::vector<char> in_ball(g.node_count(), 0);
  for (int v : ball) in_ball[v] = 1;

  // Petals: components of the remainder; deterministic order by seed node.
  std::vector<char> seen(g.node_count(), 0);
  std::vector<std::vector<int>> petals;
  for (int v : members) {
    if (in_ball[v] || seen[v]) continue;
    std::vector<int> petal{v};
    seen[v] = 1;
    for (size_t qi = 0; qi < petal.size(); ++qi)
      for (int w : g.neighbors(petal[qi]))
        if (alive[w] && !in_ball[w] && !seen[w]) { seen[w] = 1; petal.push_back(w); }
    std::sort(petal.begin(), petal.end());
    petals.push_back(std::move(petal));
  }

  // Join each petal to the ball by its smallest canonical crossing edge.
  for (const auto& petal : petals) {
    Edge best{-1, -1};
    for (int v : petal)
      for (int w : g.neighbors(v)) {
        if (!in_ball[w]) continue;
        Edge e = make_edge(v, w);
        if (best.first == -1 || e < best) best = e;
      }
    check(best.first != -1, "petal must touch the ball");
    out.push_back(best);
  }

  // Recurse: ball first, then petals in order.
  for (int v : members) alive[v] = 0;
  for (int v : ball) alive[v] = 1;
  star_decompose(g, alive, ball, rng, out);
  for (const auto& petal : petals) {
    for (int v : members) alive[v] = 0;
    for (int v : petal) alive[v] = 1;
    star_decompose(g, alive, petal, rng, out);
  }
  for (int v : members) alive[v] = 1;
}

}  // namespace

SpanningTree low_stretch_tree(const Graph& g, std::uint64_t seed) {
  int n = g.node_count();
  if (n == 0) throw InfeasibleError("cannot span an empty graph");
  if (!is_connected(g)) throw InfeasibleError("graph is disconnected; no spanning tree exists");
  std::mt19937_64 rng(seed);
  std::vector<char> alive(n, 1);
  std::vector<int> members(n);
  for (int v = 0; v < n; ++v) members[v] = v;

  // Root at the top-level eccentricity minimizer for a stable orientation.
  int top_center = 0, best_ecc = -1;
  for (int v = 0; v < n; ++v) {
    auto dist = bfs_dist_within(g, alive, v);
    int ecc = *std::max_element(dist.begin(), dist.end());
    if (best_ecc == -1 || ecc < best_ecc) { top_center = v; best_ecc = ecc; }
  }

  std::vector<Edge> tree_edges;
  star_decompose(g, alive, members, rng, tree_edges);
  check(static_cast<int>(tree_edges.size()) == n - 1, "star decomposition must span");

  // Orient via BFS over the chosen edges.
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : tree_edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
  std::vector<int> parent(n, -1);
  parent[top_center] = top_center;
  std::vector<int> queue{top_center};
  for (size_t qi = 0; qi < queue.size(); ++qi)
    for (int w : adj[queue[qi]])
      if (parent[w] == -1) { parent[w] = queue[qi]; queue.push_back(w); }
  return SpanningTree(g, top_center, std::move(parent));
}

StretchReport measure_stretch(const Graph& g, const SpanningTree& t) {
  if (t.host().node_count() != g.node_count() ||
      !std::includes(g.edges().begin(), g.edges().end(), t.tree_edges().begin(),
                     t.tree_edges().end()))
    throw ArgumentError("tree does not span this graph");
  StretchReport report;
  long long total = 0;
  for (Edge e : g.edges()) {
    if (t.is_tree_edge(e)) continue;
    int len = t.depth(e.first) + t.depth(e.second);
    // Subtract twice the depth of the lowest common ancestor.
    int a = e.first, b = e.second;
    while (t.depth(a) > t.depth(b)) a = t.parent(a);
    while (t.depth(b) > t.depth(a)) b = t.parent(b);
    while (a != b) { a = t.parent(a); b = t.parent(b); }
    len -= 2 * t.depth(a);
    report.per_link.emplace_back(e, len);
    report.sigma_max = std::max(report.sigma_max, len);
    total += len;
  }
  report.sigma_avg = report.per_link.empty()
                         ? 1.0
                         : static_cast<double>(total) / static_cast<double>(report.per_link.size());
  return report;
}

}  // namespace ecds
