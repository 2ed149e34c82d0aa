#include "ecds/steiner_cds.hpp"

#include <algorithm>

#include "ecds/errors.hpp"

namespace ecds {

namespace {

bool still_dominates_without(const Graph& g, const std::vector<char>& in_s,
                             const NodeSet& r_set, int removed) {
  // Only nodes the removed one dominated can be affected.
  auto covered = [&](int r) {
    if (in_s[r] && r != removed) return true;
    for (int w : g.neighbors(r))
      if (in_s[w] && w != removed) return true;
    return false;
  };
  if (contains(r_set, removed) && !covered(removed)) return false;
  for (int w : g.neighbors(removed))
    if (contains(r_set, w) && !covered(w)) return false;
  return true;
}

}  // namespace

void CDSTree::validate(const Graph& host, const NodeSet& r_set) const {
  check(!nodes.empty(), "solution tree must be nonempty");
  check(tree_edges.size() == nodes.size() - 1, "tree edge count");
  std::vector<char> in_s(host.node_count(), 0);
  for (int v : nodes) in_s[v] = 1;
  for (auto [u, v] : tree_edges) {
    check(host.has_edge(u, v), "tree edge must be a host edge");
    check(in_s[u] && in_s[v], "tree edge endpoints must be solution nodes");
  }
  // Connectivity over the tree edges.
  std::vector<std::vector<int>> adj(host.node_count());
  for (auto [u, v] : tree_edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<char> seen(host.node_count(), 0);
  std::vector<int> queue{nodes[0]};
  seen[nodes[0]] = 1;
  size_t reached = 1;
  for (size_t qi = 0; qi < queue.size(); ++qi)
    for (int w : adj[queue[qi]])
      if (!seen[w]) { seen[w] = 1; ++reached; queue.push_back(w); }
  check(reached == nodes.size(), "tree must be connected");
  check(dominates(host, nodes, r_set), "tree must dominate the terminals");
  for (int v : nodes)
    if (adj[v].size() == 1 && contains(r_set, v))
      check(!still_dominates_without(host, in_s, r_set, v), "terminal leaf must be unprunable");
}

CDSTree greedy_steiner_cds(const Graph& hat_g, const NodeSet& r_set) {
  int n = hat_g.node_count();
  if (n == 0) throw ArgumentError("empty graph");
  for (int r : r_set)
    if (r < 0 || r >= n) throw ArgumentError("terminal out of range");

  // Candidate components must contain every terminal (a terminal can only be
  // dominated from inside its own component).
  std::vector<int> comp(n, -1);
  int comps = 0;
  for (int v = 0; v < n; ++v) {
    if (comp[v] != -1) continue;
    std::vector<int> queue{v};
    comp[v] = comps;
    for (size_t qi = 0; qi < queue.size(); ++qi)
      for (int w : hat_g.neighbors(queue[qi]))
        if (comp[w] == -1) { comp[w] = comps; queue.push_back(w); }
    ++comps;
  }
  int candidate = -1;
  if (r_set.empty()) {
    candidate = comp[0];
  } else {
    bool uniform = true;
    for (int r : r_set) uniform = uniform && comp[r] == comp[r_set[0]];
    if (uniform) candidate = comp[r_set[0]];
  }
  if (candidate == -1)
    throw InfeasibleError("no connected component contains every terminal");

  std::vector<char> white(n, 0), black(n, 0);
  int whites = 0;
  for (int r : r_set)
    if (comp[r] == candidate) { white[r] = 1; ++whites; }

  auto gain_single = [&](int u) {
    int gain = white[u];
    for (int w : hat_g.neighbors(u)) gain += white[w];
    return gain;
  };

  std::vector<Edge> tree_edges;
  std::vector<int> order;  // insertion order; first entry is the start node

  auto add_node = [&](int u, int attach) {
    black[u] = 1;
    order.push_back(u);
    if (attach != -1) tree_edges.push_back(make_edge(u, attach));
    if (white[u]) { white[u] = 0; --whites; }
    for (int w : hat_g.neighbors(u))
      if (white[w]) { white[w] = 0; --whites; }
  };

  // Start: the node of the candidate component dominating the most terminals.
  {
    int best = -1, best_gain = -1;
    for (int v = 0; v < n; ++v) {
      if (comp[v] != candidate) continue;
      int gain = gain_single(v);
      if (gain > best_gain) { best = v; best_gain = gain; }
    }
    add_node(best, -1);
  }

  std::vector<int> mark(n, -1);
  int stamp = 0;
  auto pair_gain = [&](int u, int w) {
    // Whites in N[u] ∪ N[w], counted once each.
    ++stamp;
    int gain = 0;
    auto tally = [&](int x) {
      if (mark[x] != stamp) { mark[x] = stamp; gain += white[x]; }
    };
    tally(u);
    tally(w);
    for (int x : hat_g.neighbors(u)) tally(x);
    for (int x : hat_g.neighbors(w)) tally(x);
    return gain;
  };

  while (whites > 0) {
    // Best single node adjacent to the tree, then best adjacent pair.
    int best_single = -1, best_single_gain = 0;
    int best_u = -1, best_w = -1, best_pair_gain = 0;
    for (int u = 0; u < n; ++u) {
      if (black[u] || comp[u] != candidate) continue;
      bool frontier = false;
      for (int w : hat_g.neighbors(u))
        if (black[w]) { frontier = true; break; }
      if (!frontier) continue;
      int gain = gain_single(u);
      if (gain > best_single_gain) { best_single = u; best_single_gain = gain; }
      for (int w : hat_g.neighbors(u)) {
        if (black[w]) continue;
        int pg = pair_gain(u, w);
        if (pg > best_pair_gain) { best_u = u; best_w = w; best_pair_gain = pg; }
      }
    }
    if (best_single_gain >= best_pair_gain && best_single != -1) {
      int attach = -1;
      for (int w : hat_g.neighbors(best_single))
        if (black[w]) { attach = w; break; }
      add_node(best_single, attach);
      continue;
    }
    if (best_u != -1) {
      int attach = -1;
      for (int w : hat_g.neighbors(best_u))
        if (black[w]) { attach = w; break; }
      add_node(best_u, attach);
      add_node(best_w, best_u);
      continue;
    }
    // Zero-gain stall with terminals left: step deterministically toward the
    // nearest undominated terminal so progress is guaranteed.
    std::vector<int> dist(n, -1), par(n, -1);
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
      if (black[v]) { dist[v] = 0; queue.push_back(v); }
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int w : hat_g.neighbors(v))
        if (dist[w] == -1) { dist[w] = dist[v] + 1; par[w] = v; queue.push_back(w); }
    }
    int target = -1;
    for (int v = 0; v < n; ++v)
      if (white[v] && dist[v] != -1 && (target == -1 || dist[v] < dist[target])) target = v;
    if (target == -1)
      throw InfeasibleError("greedy stalled: some terminal is unreachable");
    int step = target;
    while (dist[step] > 1) step = par[step];
    add_node(step, par[step]);
  }

  // Prune terminal leaves while domination survives.
  NodeSet nodes = sorted_unique(order);
  std::vector<char> in_s(n, 0);
  for (int v : nodes) in_s[v] = 1;
  std::vector<int> deg(n, 0);
  std::vector<Edge> edges = tree_edges;
  bool changed = true;
  while (changed) {
    changed = false;
    std::fill(deg.begin(), deg.end(), 0);
    for (auto [u, v] : edges) { ++deg[u]; ++deg[v]; }
    for (int v : nodes) {
      if (!in_s[v] || deg[v] != 1 || !contains(r_set, v)) continue;
      if (nodes.size() == 1) break;
      if (!still_dominates_without(hat_g, in_s, r_set, v)) continue;
      in_s[v] = 0;
      std::erase_if(edges, [&](Edge e) { return e.first == v || e.second == v; });
      changed = true;
      break;  // rescan with fresh degrees
    }
  }
  CDSTree out;
  for (int v : nodes)
    if (in_s[v]) out.nodes.push_back(v);
  out.tree_edges = sorted_unique(std::move(edges));
  out.validate(hat_g, r_set);
  return out;
}

NodeSet patch_into_q(const CDGraph& cdg, const CDSTree& s, PatchReport* report) {
  int q_count = cdg.q_count();
  PatchReport rep;
  rep.s_size = static_cast<int>(s.nodes.size());
  std::vector<int> q_nodes, r_nodes;
  for (int v : s.nodes)
    (v < q_count ? q_nodes : r_nodes).push_back(v);
  rep.q_t = static_cast<int>(q_nodes.size());
  rep.r_t = static_cast<int>(r_nodes.size());

  std::vector<int> result = q_nodes;
  if (!r_nodes.empty()) {
    for (int r : r_nodes) {
      std::vector<int> nbrs;
      for (auto [u, v] : s.tree_edges) {
        if (u == r) nbrs.push_back(v);
        if (v == r) nbrs.push_back(u);
      }
      std::sort(nbrs.begin(), nbrs.end());
      rep.degree_excess += static_cast<int>(nbrs.size()) - 1;
      for (int x : nbrs)
        check(x < q_count, "r-nodes of the solution tree must be pairwise non-adjacent");
      // Star over the neighbors, centered on the lowest index; each star edge
      // becomes a short connector through r.
      for (size_t i = 1; i < nbrs.size(); ++i) {
        auto connector = cdg.short_connector(r - q_count, nbrs[0], nbrs[i]);
        result.insert(result.end(), connector.begin(), connector.end());
      }
    }
    check(rep.degree_excess <= rep.q_t - 1 || rep.r_t == 0,
          "r-node degree excess must stay below the q-node count");
  }
  NodeSet out = sorted_unique(std::move(result));
  rep.f_size = static_cast<int>(out.size());
  check(rep.f_size <= 3 * rep.s_size, "patched solution must stay within 3x the tree size");
  if (!out.empty())
    check(cdg.verify_solution(out), "patched solution must verify");
  if (report) *report = rep;
  return out;
}

}  // namespace ecds
