#include "ecds/graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "ecds/errors.hpp"

namespace ecds {

bool contains(const NodeSet& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

bool contains(const EdgeSet& s, Edge e) {
  return std::binary_search(s.begin(), s.end(), e);
}

NodeSet sorted_unique(std::vector<int> nodes) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return nodes;
}

EdgeSet sorted_unique(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

bool is_subset(const NodeSet& a, const NodeSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

NodeSet set_union(const NodeSet& a, const NodeSet& b) {
  NodeSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

NodeSet set_difference(const NodeSet& a, const NodeSet& b) {
  NodeSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

EdgeSet edge_difference(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool intersects(std::span<const int> a, std::span<const int> b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    if (a[i] < b[j]) ++i; else ++j;
  }
  return false;
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw ArgumentError("node count must be non-negative");
  for (auto& [u, v] : edges) {
    if (u == v) throw ArgumentError("loop edge " + std::to_string(u) + "-" + std::to_string(v));
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n)
      throw ArgumentError("edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw ArgumentError("duplicate edge");
  edges_ = std::move(edges);
  adj_.assign(n_, {});
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
  return std::binary_search(edges_.begin(), edges_.end(), make_edge(u, v));
}

int Graph::edge_index(Edge e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

namespace {

// Splits into non-empty lines, remembering 1-based line numbers.
std::vector<std::pair<int, std::string>> numbered_lines(const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.emplace_back(no, line);
  }
  return out;
}

bool parse_ints(const std::string& line, std::vector<long long>& out) {
  out.clear();
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    try {
      size_t used = 0;
      long long v = std::stoll(tok, &used);
      if (used != tok.size()) return false;
      out.push_back(v);
    } catch (const std::exception&) {
      return false;
    }
  }
  return !out.empty();
}

}  // namespace

Graph parse_graph(const std::string& text) {
  auto lines = numbered_lines(text);
  if (lines.empty()) throw ParseError("line 1: expected header \"n m\"");
  std::vector<long long> nums;
  if (!parse_ints(lines[0].second, nums) || nums.size() != 2)
    throw ParseError("line " + std::to_string(lines[0].first) + ": expected header \"n m\"");
  long long n = nums[0], m = nums[1];
  if (n < 0 || m < 0)
    throw ParseError("line " + std::to_string(lines[0].first) + ": negative count in header");
  if (static_cast<long long>(lines.size()) - 1 != m)
    throw ParseError("expected " + std::to_string(m) + " edge lines, found " +
                     std::to_string(lines.size() - 1));
  std::vector<Edge> edges;
  EdgeSet seen;
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto& [no, line] = lines[i];
    if (!parse_ints(line, nums) || nums.size() != 2)
      throw ParseError("line " + std::to_string(no) + ": expected \"u v\"");
    long long u = nums[0], v = nums[1];
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("line " + std::to_string(no) + ": endpoint out of range [0," +
                       std::to_string(n) + ")");
    if (u == v) throw ParseError("line " + std::to_string(no) + ": loop edge");
    Edge e = make_edge(static_cast<int>(u), static_cast<int>(v));
    if (contains(seen, e)) throw ParseError("line " + std::to_string(no) + ": duplicate edge");
    seen.insert(std::lower_bound(seen.begin(), seen.end(), e), e);
    edges.push_back(e);
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.node_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

namespace {

// Lowpoint DFS over an explicit adjacency structure; collects bridges.
struct BridgeDfs {
  const Graph& g;
  std::vector<int> disc, low;
  int timer = 1;
  EdgeSet bridges;

  explicit BridgeDfs(const Graph& g) : g(g), disc(g.node_count(), 0), low(g.node_count(), 0) {}

  void run(int root) {
    // Iterative DFS so deep graphs cannot overflow the stack.
    struct Frame { int v, parent; size_t next; };
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nbrs = g.neighbors(f.v);
      bool descended = false;
      while (f.next < nbrs.size()) {
        int w = nbrs[f.next++];
        if (w == f.parent) {
          // Skip one parent link only; simple graphs have no parallel edges.
          f.parent = -1;
          continue;
        }
        if (disc[w] != 0) {
          low[f.v] = std::min(low[f.v], disc[w]);
          continue;
        }
        disc[w] = low[w] = timer++;
        stack.push_back({w, f.v, 0});
        descended = true;
        break;
      }
      if (descended) continue;
      int v = f.v;
      stack.pop_back();
      if (!stack.empty()) {
        int p = stack.back().v;
        low[p] = std::min(low[p], low[v]);
        if (low[v] > disc[p]) bridges.push_back(make_edge(p, v));
      }
    }
  }
};

}  // namespace

TwoEdgeConnectivity two_edge_connectivity(const Graph& g) {
  TwoEdgeConnectivity out;
  int n = g.node_count();
  if (n == 0) return out;
  BridgeDfs dfs(g);
  int components = 0;
  for (int v = 0; v < n; ++v) {
    if (dfs.disc[v] == 0) {
      ++components;
      dfs.run(v);
    }
  }
  std::sort(dfs.bridges.begin(), dfs.bridges.end());
  out.bridges = std::move(dfs.bridges);
  out.is_2ec = components == 1 && out.bridges.empty();
  return out;
}

bool dominates(const Graph& g, const NodeSet& s, const NodeSet& targets) {
  for (int r : targets) {
    if (contains(s, r)) continue;
    bool hit = false;
    for (int w : g.neighbors(r)) {
      if (contains(s, w)) { hit = true; break; }
    }
    if (!hit) return false;
  }
  return true;
}

bool two_edge_disjoint_paths(const Graph& g, int s, int t) {
  if (s == t) throw ArgumentError("s and t must differ");
  int n = g.node_count();
  if (s < 0 || t < 0 || s >= n || t >= n) throw ArgumentError("s or t out of range");
  // Each undirected edge becomes two unit arcs; antiparallel flow cancels, so
  // the max flow equals the number of edge-disjoint undirected paths.
  int m = g.edge_count();
  std::vector<signed char> flow(2 * m, 0);  // arc 2i: u->v, arc 2i+1: v->u
  // Skew-symmetric unit flow: pushing an arc frees its reverse for cancelling.
  auto residual = [&](int arc) { return flow[arc] < 1; };
  std::vector<int> parent_arc(n);
  for (int round = 0; round < 2; ++round) {
    std::fill(parent_arc.begin(), parent_arc.end(), -1);
    std::vector<int> queue{s};
    parent_arc[s] = -2;
    for (size_t qi = 0; qi < queue.size() && parent_arc[t] == -1; ++qi) {
      int v = queue[qi];
      for (int w : g.neighbors(v)) {
        if (parent_arc[w] != -1) continue;
        int ei = g.edge_index(make_edge(v, w));
        int arc = 2 * ei + (v < w ? 0 : 1);
        if (!residual(arc)) continue;
        parent_arc[w] = arc;
        queue.push_back(w);
      }
    }
    if (parent_arc[t] == -1) return false;
    for (int v = t; v != s;) {
      int arc = parent_arc[v];
      flow[arc] += 1;
      flow[arc ^ 1] -= 1;  // cancel any opposite flow
      const Edge& e = g.edges()[arc / 2];
      v = (arc % 2 == 0) ? e.first : e.second;
    }
  }
  return true;
}

int component_count(const Graph& g) {
  int n = g.node_count();
  std::vector<char> seen(n, 0);
  int comps = 0;
  for (int v = 0; v < n; ++v) {
    if (seen[v]) continue;
    ++comps;
    std::vector<int> queue{v};
    seen[v] = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi)
      for (int w : g.neighbors(queue[qi]))
        if (!seen[w]) { seen[w] = 1; queue.push_back(w); }
  }
  return comps;
}

bool is_connected(const Graph& g) {
  return g.node_count() > 0 && component_count(g) == 1;
}

NodeSet touched_nodes(const EdgeSet& edges) {
  std::vector<int> nodes;
  nodes.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    nodes.push_back(u);
    nodes.push_back(v);
  }
  return sorted_unique(std::move(nodes));
}

bool is_2ec_subgraph(const NodeSet& s, const EdgeSet& j) {
  if (s.empty()) return false;
  if (s.size() == 1) return j.empty();
  for (auto [u, v] : j)
    if (!contains(s, u) || !contains(s, v)) return false;
  // Relabel onto 0..|s|-1 and reuse the whole-graph routine.
  std::vector<Edge> relabeled;
  relabeled.reserve(j.size());
  auto rank = [&](int v) {
    return static_cast<int>(std::lower_bound(s.begin(), s.end(), v) - s.begin());
  };
  for (auto [u, v] : j) relabeled.emplace_back(rank(u), rank(v));
  Graph sub(static_cast<int>(s.size()), std::move(relabeled));
  return two_edge_connectivity(sub).is_2ec;
}

}  // namespace ecds
