#include "ecds/oracle.hpp"

#include <algorithm>
#include <bit>

#include "ecds/errors.hpp"
#include "ecds/pipeline.hpp"

namespace ecds {

namespace {

using Mask = std::uint32_t;

// Calls fn(indices) for every k-subset of {0..n-1} in lexicographic order;
// stops early when fn returns true.
template <class Fn>
bool for_each_combination(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return false;
  std::vector<int> c(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<size_t>(i)] = i;
  while (true) {
    if (fn(c)) return true;
    int i = k - 1;
    while (i >= 0 && c[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++c[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) c[static_cast<size_t>(j)] = c[static_cast<size_t>(j - 1)] + 1;
  }
}

struct MaskView {
  int n = 0;
  Mask all = 0;
  std::vector<Mask> adj;
  std::vector<Mask> closed;  // v plus its neighbors

  explicit MaskView(const Graph& g) : n(g.node_count()) {
    check(n <= 30, "mask solver limited to 30 nodes");
    all = n == 0 ? 0 : (Mask{1} << n) - 1;
    adj.assign(static_cast<size_t>(n), 0);
    closed.assign(static_cast<size_t>(n), 0);
    for (auto [u, v] : g.edges()) {
      adj[static_cast<size_t>(u)] |= Mask{1} << v;
      adj[static_cast<size_t>(v)] |= Mask{1} << u;
    }
    for (int v = 0; v < n; ++v) closed[static_cast<size_t>(v)] = adj[static_cast<size_t>(v)] | (Mask{1} << v);
  }

  bool dominating(Mask s) const {
    Mask covered = 0;
    for (Mask rest = s; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      covered |= closed[static_cast<size_t>(v)];
    }
    return covered == all;
  }
};

struct BridgeScan {
  const MaskView& view;
  Mask mask;
  std::vector<int> tin, low;
  int timer = 0;
  bool bridge = false;
  Mask seen = 0;

  BridgeScan(const MaskView& v, Mask m)
      : view(v), mask(m), tin(static_cast<size_t>(v.n), 0), low(static_cast<size_t>(v.n), 0) {}

  void run(int v, int parent) {
    seen |= Mask{1} << v;
    tin[static_cast<size_t>(v)] = low[static_cast<size_t>(v)] = ++timer;
    Mask rest = view.adj[static_cast<size_t>(v)] & mask;
    bool skipped_parent = false;
    while (rest) {
      int w = std::countr_zero(rest);
      rest &= rest - 1;
      if (w == parent && !skipped_parent) {
        skipped_parent = true;
        continue;
      }
      if (tin[static_cast<size_t>(w)]) {
        low[static_cast<size_t>(v)] = std::min(low[static_cast<size_t>(v)], tin[static_cast<size_t>(w)]);
        continue;
      }
      run(w, v);
      low[static_cast<size_t>(v)] = std::min(low[static_cast<size_t>(v)], low[static_cast<size_t>(w)]);
      if (low[static_cast<size_t>(w)] > tin[static_cast<size_t>(v)]) bridge = true;
    }
  }
};

// Connected and bridgeless induced subgraph; single node passes.
bool induced_2ec(const MaskView& view, Mask s) {
  if (s == 0) return false;
  if ((s & (s - 1)) == 0) return true;
  BridgeScan scan(view, s);
  scan.run(std::countr_zero(s), -1);
  return scan.seen == s && !scan.bridge;
}

EdgeSet induced_edges(const Graph& g, const NodeSet& s) {
  EdgeSet out;
  for (Edge e : g.edges())
    if (contains(s, e.first) && contains(s, e.second)) out.push_back(e);
  return out;
}

NodeSet mask_to_nodes(Mask s) {
  NodeSet out;
  for (Mask rest = s; rest;) {
    out.push_back(std::countr_zero(rest));
    rest &= rest - 1;
  }
  return out;
}

// Minimum-size subset of `pool` (edges within `nodes`) spanning a
// 2-edge-connected subgraph on exactly `nodes`, looking below
// upper_exclusive only; nullopt when none qualifies.
std::optional<EdgeSet> min_2ec_spanning(const NodeSet& nodes, const EdgeSet& pool,
                                        int upper_exclusive) {
  int s = static_cast<int>(nodes.size());
  int m = static_cast<int>(pool.size());
  if (s == 1) return EdgeSet{};
  std::optional<EdgeSet> found;
  for (int k = std::max(s, 3); k <= m && k < upper_exclusive; ++k) {
    for_each_combination(m, k, [&](const std::vector<int>& picks) {
      EdgeSet trial;
      trial.reserve(picks.size());
      for (int i : picks) trial.push_back(pool[static_cast<size_t>(i)]);
      if (!is_2ec_subgraph(nodes, trial)) return false;
      found = std::move(trial);
      return true;
    });
    if (found) break;
  }
  return found;
}

}  // namespace

TwoEcdsOptimum opt_2ecds(const Graph& g, int node_cap) {
  int n = g.node_count();
  if (n > node_cap || n > 30) throw CapError("graph too large for the exhaustive solver");
  TwoEcdsOptimum out;
  if (n == 0) return out;
  MaskView view(g);
  for (int v = 0; v < n; ++v)
    if (view.closed[static_cast<size_t>(v)] == view.all) {
      out.universal_node = v;
      break;
    }
  int max_closed = 0;
  for (int v = 0; v < n; ++v)
    max_closed = std::max(max_closed, std::popcount(view.closed[static_cast<size_t>(v)]));
  for (int k = 3; k <= n && !out.feasible; ++k) {
    if (static_cast<long long>(k) * max_closed < n) continue;  // cannot dominate
    for_each_combination(n, k, [&](const std::vector<int>& picks) {
      Mask s = 0;
      for (int v : picks) s |= Mask{1} << v;
      if (!view.dominating(s)) return false;
      if (!induced_2ec(view, s)) return false;
      out.feasible = true;
      out.nodes = NodeSet(picks.begin(), picks.end());
      out.edges = minimalize_2ecc(out.nodes, induced_edges(g, out.nodes));
      return true;
    });
  }
  return out;
}

TwoEcSubgraphOptimum opt_2ec_dominating_subgraph(const Graph& g, int node_cap) {
  TwoEcdsOptimum base = opt_2ecds(g, node_cap);
  TwoEcSubgraphOptimum out;
  if (!base.feasible) return out;
  out.feasible = true;
  out.nodes = base.nodes;
  out.edges = base.edges;

  int n = g.node_count();
  MaskView view(g);
  // Any valid edge set has at least as many edges as nodes, so node sets of
  // size >= |current best J| cannot improve it.
  for (int k = static_cast<int>(base.nodes.size()); k <= n; ++k) {
    if (k >= static_cast<int>(out.edges.size())) break;
    for_each_combination(n, k, [&](const std::vector<int>& picks) {
      Mask s = 0;
      for (int v : picks) s |= Mask{1} << v;
      if (!view.dominating(s)) return false;
      if (!induced_2ec(view, s)) return false;
      NodeSet nodes(picks.begin(), picks.end());
      auto best = min_2ec_spanning(nodes, induced_edges(g, nodes),
                                   static_cast<int>(out.edges.size()));
      if (best) {
        out.nodes = std::move(nodes);
        out.edges = std::move(*best);
      }
      return false;  // keep scanning: a larger node set may use fewer edges
    });
  }
  return out;
}

std::optional<EdgeSet> opt_dominating_subtree(const DSInstance& inst, int link_cap) {
  int m = inst.link_count();
  if (m > link_cap) throw CapError("too many links for the exhaustive solver");
  std::optional<EdgeSet> found;
  for (int k = 1; k <= m && !found; ++k) {
    for_each_combination(m, k, [&](const std::vector<int>& picks) {
      EdgeSet f;
      f.reserve(picks.size());
      for (int i : picks) f.push_back(inst.link(i));
      f = sorted_unique(std::move(f));
      if (!is_feasible_ds(inst, f)) return false;
      found = std::move(f);
      return true;
    });
  }
  return found;
}

std::optional<NodeSet> opt_subset_cds(const Graph& hat_g, const NodeSet& q_set,
                                      const NodeSet& r_set, int q_cap) {
  int nq = static_cast<int>(q_set.size());
  int nr = static_cast<int>(r_set.size());
  if (nq > q_cap || nq > 30) throw CapError("too many pickable nodes for the exhaustive solver");
  if (nr > 62) throw CapError("too many dominated nodes for the exhaustive solver");
  if (intersects(q_set, r_set)) throw ArgumentError("node sets must be disjoint");
  for (int v : q_set)
    if (v < 0 || v >= hat_g.node_count()) throw ArgumentError("pickable node out of range");
  for (int v : r_set)
    if (v < 0 || v >= hat_g.node_count()) throw ArgumentError("dominated node out of range");
  if (nq == 0) return nr == 0 ? std::optional<NodeSet>(NodeSet{}) : std::nullopt;

  std::vector<Mask> qadj(static_cast<size_t>(nq), 0);
  std::vector<std::uint64_t> rdom(static_cast<size_t>(nq), 0);
  std::vector<int> qpos(static_cast<size_t>(hat_g.node_count()), -1);
  for (int i = 0; i < nq; ++i) qpos[static_cast<size_t>(q_set[static_cast<size_t>(i)])] = i;
  for (int i = 0; i < nq; ++i) {
    for (int w : hat_g.neighbors(q_set[static_cast<size_t>(i)])) {
      int j = qpos[static_cast<size_t>(w)];
      if (j != -1) qadj[static_cast<size_t>(i)] |= Mask{1} << j;
    }
  }
  for (int i = 0; i < nr; ++i)
    for (int w : hat_g.neighbors(r_set[static_cast<size_t>(i)])) {
      int j = qpos[static_cast<size_t>(w)];
      if (j != -1) rdom[static_cast<size_t>(j)] |= std::uint64_t{1} << i;
    }
  std::uint64_t all_r = nr == 0 ? 0 : (~std::uint64_t{0} >> (64 - nr));

  std::optional<NodeSet> found;
  for (int k = 1; k <= nq && !found; ++k) {
    for_each_combination(nq, k, [&](const std::vector<int>& picks) {
      Mask s = 0;
      std::uint64_t dom = 0;
      for (int i : picks) {
        s |= Mask{1} << i;
        dom |= rdom[static_cast<size_t>(i)];
      }
      if (dom != all_r) return false;
      // Connectivity inside the picked set.
      Mask seen = Mask{1} << picks[0];
      Mask frontier = seen;
      while (frontier) {
        Mask next = 0;
        for (Mask rest = frontier; rest;) {
          int v = std::countr_zero(rest);
          rest &= rest - 1;
          next |= qadj[static_cast<size_t>(v)] & s;
        }
        frontier = next & ~seen;
        seen |= next;
      }
      if (seen != s) return false;
      NodeSet result;
      result.reserve(picks.size());
      for (int i : picks) result.push_back(q_set[static_cast<size_t>(i)]);
      found = std::move(result);
      return true;
    });
  }
  return found;
}

std::optional<GSTOptimum> opt_gst(const GSTInstance& inst, int node_cap) {
  inst.validate();
  const Graph& g = inst.graph;
  int n = g.node_count();
  if (n > node_cap || n > 30) throw CapError("instance too large for the exhaustive solver");
  if (inst.groups.empty()) return GSTOptimum{};

  std::vector<Mask> group_masks;
  for (const NodeSet& group : inst.groups) {
    Mask m = 0;
    for (int v : group) m |= Mask{1} << v;
    group_masks.push_back(m);
  }
  std::vector<std::int64_t> cost(static_cast<size_t>(g.edge_count()), 1);
  if (inst.edge_costs) cost = *inst.edge_costs;
  std::vector<int> order(static_cast<size_t>(g.edge_count()));
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return cost[static_cast<size_t>(a)] < cost[static_cast<size_t>(b)]; });

  std::optional<GSTOptimum> best;
  std::vector<int> parent(static_cast<size_t>(n));
  for (Mask s = 1; s <= (n == 0 ? 0 : (Mask{1} << n) - 1); ++s) {
    bool hits = true;
    for (Mask gm : group_masks)
      if (!(gm & s)) { hits = false; break; }
    if (!hits) continue;
    // Kruskal inside the picked node set.
    for (int v = 0; v < n; ++v) parent[static_cast<size_t>(v)] = v;
    auto root = [&](int v) {
      while (parent[static_cast<size_t>(v)] != v) {
        parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
        v = parent[static_cast<size_t>(v)];
      }
      return v;
    };
    std::int64_t total = 0;
    EdgeSet tree;
    int picked = std::popcount(s);
    for (int i : order) {
      auto [u, v] = g.edge(i);
      if (!((s >> u) & 1) || !((s >> v) & 1)) continue;
      int ru = root(u), rv = root(v);
      if (ru == rv) continue;
      parent[static_cast<size_t>(std::max(ru, rv))] = std::min(ru, rv);
      total += cost[static_cast<size_t>(i)];
      tree.push_back(g.edge(i));
    }
    if (static_cast<int>(tree.size()) != picked - 1) continue;  // disconnected pick
    if (!best || total < best->cost) {
      best = GSTOptimum{total, mask_to_nodes(s), sorted_unique(std::move(tree))};
    }
  }
  return best;
}

}  // namespace ecds
