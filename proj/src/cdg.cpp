#include "ecds/cdg.hpp"

#include <algorithm>
#include <sstream>

#include "ecds/errors.hpp"

namespace ecds {

CDGraph::CDGraph(DSInstance inst) : inst_(std::move(inst)) {
  int q = q_count(), n = r_count();
  i_adj_.assign(q, {});
  d_by_q_.assign(q, {});
  q_by_r_.assign(n, {});
  const Graph& g = inst_.graph();

  for (int a = 0; a < q; ++a)
    for (int b = a + 1; b < q; ++b)
      if (intersects(inst_.link_path_nodes(a), inst_.link_path_nodes(b))) {
        i_adj_[a].push_back(b);
        i_adj_[b].push_back(a);
      }

  for (int a = 0; a < q; ++a) {
    auto path = inst_.link_path_nodes(a);
    std::vector<char> member(n, 0);
    for (int v : path) member[v] = 1;
    std::vector<std::pair<int, bool>> dom;
    for (int v : path) dom.emplace_back(v, true);
    for (int v : path)
      for (int w : g.neighbors(v))
        if (!member[w]) {
          dom.emplace_back(w, false);
          member[w] = 1;  // reuse as "already recorded"
        }
    std::sort(dom.begin(), dom.end());
    for (auto [v, is_mem] : dom) q_by_r_[v].push_back(a);
    d_by_q_[a] = std::move(dom);
  }
  // q-side adjacency lists come out sorted; r-node independence is
  // structural (no r-r edges exist in this representation).
  for (auto& nbrs : i_adj_) check(std::is_sorted(nbrs.begin(), nbrs.end()), "i-adjacency sorted");
}

bool CDGraph::i_adjacent(int q1, int q2) const {
  return std::binary_search(i_adj_[q1].begin(), i_adj_[q1].end(), q2);
}

bool CDGraph::is_member(int q, int v) const {
  auto nodes = inst_.link_path_nodes(q);
  return std::binary_search(nodes.begin(), nodes.end(), v);
}

bool CDGraph::dominates_node(int q, int v) const {
  const auto& dom = d_by_q_[q];
  return std::binary_search(dom.begin(), dom.end(), std::pair<int, bool>{v, false}) ||
         std::binary_search(dom.begin(), dom.end(), std::pair<int, bool>{v, true});
}

CDGraph::LinkClass CDGraph::classify_link(int v, int e) const {
  if (e < 0 || e >= q_count() || v < 0 || v >= r_count())
    throw ArgumentError("link or node index out of range");
  if (!dominates_node(e, v)) throw ArgumentError("link does not dominate the node");
  for (int f : q_by_r_[v]) {
    if (!is_member(f, v)) continue;
    if (f == e || i_adjacent(f, e)) return {1, f};
  }
  return {2, e};
}

std::vector<int> CDGraph::short_connector(int v, int e1, int e2) const {
  if (e1 == e2) throw ArgumentError("endpoints must be distinct links");
  if (!dominates_node(e1, v) || !dominates_node(e2, v))
    throw ArgumentError("both links must dominate the node");
  if (i_adjacent(e1, e2)) return {e1, e2};

  LinkClass c1 = classify_link(v, e1);
  LinkClass c2 = classify_link(v, e2);
  if (c1.type == 1 && c2.type == 1) {
    // e1, f1, f2, e2 walks through the witnesses, which both contain v.
    std::vector<int> walk{e1, c1.witness, c2.witness, e2}, path;
    for (int x : walk) {
      auto it = std::find(path.begin(), path.end(), x);
      if (it != path.end())
        path.erase(it + 1, path.end());  // cut the loop back to x
      else
        path.push_back(x);
    }
    for (size_t i = 0; i + 1 < path.size(); ++i)
      check(i_adjacent(path[i], path[i + 1]), "connector steps must be q-edges");
    check(path.size() >= 2 && path.front() == e1 && path.back() == e2,
          "connector endpoints must survive loop cutting");
    return path;
  }

  // Some endpoint is type 2: v is dominated through a tree edge uv into that
  // link's path. The far side of that edge holds more than just v (otherwise
  // all of v's dominators would share u and be pairwise adjacent), so no link
  // covers uv and the instance cannot be feasible.
  int e = c1.type == 2 ? e1 : e2;
  const SpanningTree& t = inst_.tree();
  int u = -1;
  auto path = inst_.link_path_nodes(e);
  if (std::binary_search(path.begin(), path.end(), t.parent(v))) u = t.parent(v);
  for (int w : inst_.graph().neighbors(v))
    if (u == -1 && t.parent(w) == v && std::binary_search(path.begin(), path.end(), w)) u = w;
  check(u != -1, "a type-2 link dominates only through a tree edge");
  throw InfeasibleError("node " + std::to_string(v) + " depends on uncovered tree edge " +
                        std::to_string(std::min(u, v)) + "-" + std::to_string(std::max(u, v)) +
                        "; instance is infeasible");
}

bool CDGraph::verify_solution(const std::vector<int>& q_set) const {
  if (q_set.empty()) return false;
  std::vector<char> in_set(q_count(), 0);
  for (int q : q_set) {
    if (q < 0 || q >= q_count()) throw ArgumentError("link index out of range");
    in_set[q] = 1;
  }
  // Connectivity of the induced q-subgraph.
  std::vector<char> seen(q_count(), 0);
  std::vector<int> queue{q_set[0]};
  seen[q_set[0]] = 1;
  size_t reached = 1;
  for (size_t qi = 0; qi < queue.size(); ++qi)
    for (int w : i_adj_[queue[qi]])
      if (in_set[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push_back(w);
      }
  size_t distinct = 0;
  for (int q = 0; q < q_count(); ++q) distinct += in_set[q];
  if (reached != distinct) return false;
  for (int v = 0; v < r_count(); ++v) {
    bool hit = false;
    for (int q : q_by_r_[v])
      if (in_set[q]) { hit = true; break; }
    if (!hit) return false;
  }
  return true;
}

bool CDGraph::instance_feasible() const {
  int q = q_count();
  std::vector<int> comp(q, -1);
  int next = 0;
  for (int s = 0; s < q; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> queue{s};
    comp[s] = next;
    for (size_t qi = 0; qi < queue.size(); ++qi)
      for (int w : i_adj_[queue[qi]])
        if (comp[w] == -1) { comp[w] = next; queue.push_back(w); }
    ++next;
  }
  for (int c = 0; c < next; ++c) {
    bool all = true;
    for (int v = 0; v < r_count() && all; ++v) {
      bool hit = false;
      for (int qq : q_by_r_[v])
        if (comp[qq] == c) { hit = true; break; }
      all = hit;
    }
    if (all) return true;
  }
  return false;
}

Graph CDGraph::as_plain_graph() const {
  int q = q_count(), n = r_count();
  std::vector<Edge> edges;
  for (int a = 0; a < q; ++a) {
    for (int b : i_adj_[a])
      if (a < b) edges.emplace_back(a, b);
    for (auto [v, mem] : d_by_q_[a]) edges.emplace_back(a, q + v);
  }
  return Graph(q + n, std::move(edges));
}

NodeSet CDGraph::plain_q_nodes() const {
  NodeSet out(q_count());
  for (int i = 0; i < q_count(); ++i) out[i] = i;
  return out;
}

NodeSet CDGraph::plain_r_nodes() const {
  NodeSet out(r_count());
  for (int i = 0; i < r_count(); ++i) out[i] = q_count() + i;
  return out;
}

std::string CDGraph::to_dot() const {
  std::ostringstream out;
  out << "graph cdg {\n";
  for (int q = 0; q < q_count(); ++q)
    out << "  q" << q << " [shape=box,label=\"q" << q << ": " << link(q).first << "-"
        << link(q).second << "\"];\n";
  for (int v = 0; v < r_count(); ++v) out << "  v" << v << ";\n";
  for (int a = 0; a < q_count(); ++a)
    for (int b : i_adj_[a])
      if (a < b) out << "  q" << a << " -- q" << b << ";\n";
  for (int a = 0; a < q_count(); ++a)
    for (auto [v, mem] : d_by_q_[a])
      out << "  q" << a << " -- v" << v << (mem ? " [style=bold];\n" : ";\n");
  out << "}\n";
  return out.str();
}

}  // namespace ecds
