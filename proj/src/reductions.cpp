#include "ecds/reductions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "ecds/errors.hpp"

namespace ecds {

namespace {

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
  return true;
}

[[noreturn]] void bad_line(int no, const std::string& what) {
  throw ParseError("line " + std::to_string(no) + ": " + what);
}

void require_partition(const Graph& g, const NodeSet& q_set, const NodeSet& r_set) {
  if (!std::is_sorted(q_set.begin(), q_set.end()) || !std::is_sorted(r_set.begin(), r_set.end()))
    throw ArgumentError("node sets must be sorted");
  if (intersects(q_set, r_set)) throw ArgumentError("node sets must be disjoint");
  NodeSet merged = set_union(q_set, r_set);
  if (static_cast<int>(merged.size()) != g.node_count() ||
      (!merged.empty() && (merged.front() != 0 || merged.back() != g.node_count() - 1)))
    throw ArgumentError("node sets must partition the graph nodes");
}

int find_root(std::vector<int>& parent, int v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    size_t used = 0;
    Rational r;
    if (slash == std::string::npos) {
      r.num = std::stoll(text, &used);
      if (used != text.size()) throw ParseError("trailing characters in rational: " + text);
      r.den = 1;
    } else {
      r.num = std::stoll(text.substr(0, slash), &used);
      if (used != slash) throw ParseError("bad numerator in rational: " + text);
      std::string den = text.substr(slash + 1);
      r.den = std::stoll(den, &used);
      if (used != den.size()) throw ParseError("bad denominator in rational: " + text);
    }
    if (r.den == 0) throw ParseError("zero denominator: " + text);
    return r;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("not a rational: " + text);
  }
}

void GSTInstance::validate() const {
  for (const NodeSet& group : groups) {
    if (group.empty()) throw ArgumentError("empty group");
    if (!std::is_sorted(group.begin(), group.end()) ||
        std::adjacent_find(group.begin(), group.end()) != group.end())
      throw ArgumentError("group must be sorted and duplicate-free");
    if (group.front() < 0 || group.back() >= graph.node_count())
      throw ArgumentError("group member out of range");
  }
  if (edge_costs) {
    if (static_cast<int>(edge_costs->size()) != graph.edge_count())
      throw ArgumentError("cost count must match edge count");
    for (std::int64_t c : *edge_costs)
      if (c < 0) throw ArgumentError("negative edge cost");
  }
}

GSTInstance parse_gst(const std::string& text) {
  auto lines = numbered_lines(text);
  size_t at = 0;
  std::vector<long long> nums;
  auto next = [&](const char* what) -> std::pair<int, std::string> {
    if (at >= lines.size()) throw ParseError(std::string("missing ") + what);
    return lines[at++];
  };

  auto [header_no, header] = next("graph header");
  if (!parse_ints(header, nums) || nums.size() != 2 || nums[0] < 0 || nums[1] < 0)
    bad_line(header_no, "expected node and edge counts");
  int n = static_cast<int>(nums[0]);
  int m = static_cast<int>(nums[1]);

  std::vector<Edge> edges;
  std::vector<std::int64_t> costs;
  bool costed = false;
  for (int i = 0; i < m; ++i) {
    auto [no, line] = next("edge line");
    if (!parse_ints(line, nums) || (nums.size() != 2 && nums.size() != 3))
      bad_line(no, "expected edge endpoints with optional cost");
    if (i == 0) costed = nums.size() == 3;
    if (costed != (nums.size() == 3)) bad_line(no, "mixed costed and uncosted edges");
    edges.push_back(make_edge(static_cast<int>(nums[0]), static_cast<int>(nums[1])));
    if (costed) costs.push_back(nums[2]);
  }

  auto [count_no, count_line] = next("group count");
  if (!parse_ints(count_line, nums) || nums.size() != 1 || nums[0] < 0)
    bad_line(count_no, "expected group count");
  int k = static_cast<int>(nums[0]);

  GSTInstance inst;
  // Keep edge order aligned with costs: canonical sort with the cost attached.
  if (costed) {
    std::vector<std::pair<Edge, std::int64_t>> ordered(edges.size());
    for (size_t i = 0; i < edges.size(); ++i) ordered[i] = {edges[i], costs[i]};
    std::sort(ordered.begin(), ordered.end());
    for (size_t i = 0; i < ordered.size(); ++i) {
      edges[i] = ordered[i].first;
      costs[i] = ordered[i].second;
    }
    inst.edge_costs = std::move(costs);
  }
  try {
    inst.graph = Graph(n, edges);
  } catch (const ArgumentError& e) {
    throw ParseError(e.what());
  }
  for (int i = 0; i < k; ++i) {
    auto [no, line] = next("group line");
    if (!parse_ints(line, nums) || nums.empty()) bad_line(no, "expected group members");
    std::vector<int> members(nums.begin(), nums.end());
    inst.groups.push_back(sorted_unique(std::move(members)));
  }
  if (at != lines.size()) bad_line(lines[at].first, "unexpected trailing content");
  try {
    inst.validate();
  } catch (const ArgumentError& e) {
    throw ParseError(e.what());
  }
  return inst;
}

std::string format_gst(const GSTInstance& inst) {
  std::ostringstream out;
  out << inst.graph.node_count() << ' ' << inst.graph.edge_count() << '\n';
  for (int i = 0; i < inst.graph.edge_count(); ++i) {
    auto [u, v] = inst.graph.edge(i);
    out << u << ' ' << v;
    if (inst.edge_costs) out << ' ' << (*inst.edge_costs)[i];
    out << '\n';
  }
  out << inst.groups.size() << '\n';
  for (const NodeSet& group : inst.groups) {
    for (size_t i = 0; i < group.size(); ++i) out << (i ? " " : "") << group[i];
    out << '\n';
  }
  return out.str();
}

SubsetCDSInstance parse_subset_cds(const std::string& text) {
  auto lines = numbered_lines(text);
  size_t at = 0;
  std::vector<long long> nums;
  auto next = [&](const char* what) -> std::pair<int, std::string> {
    if (at >= lines.size()) throw ParseError(std::string("missing ") + what);
    return lines[at++];
  };

  auto [header_no, header] = next("graph header");
  if (!parse_ints(header, nums) || nums.size() != 2 || nums[0] < 0 || nums[1] < 0)
    bad_line(header_no, "expected node and edge counts");
  int n = static_cast<int>(nums[0]);
  int m = static_cast<int>(nums[1]);
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    auto [no, line] = next("edge line");
    if (!parse_ints(line, nums) || nums.size() != 2) bad_line(no, "expected edge endpoints");
    edges.push_back(make_edge(static_cast<int>(nums[0]), static_cast<int>(nums[1])));
  }
  SubsetCDSInstance inst;
  try {
    inst.graph = Graph(n, edges);
  } catch (const ArgumentError& e) {
    throw ParseError(e.what());
  }
  auto read_set = [&](const char* what) -> NodeSet {
    auto [no, line] = next(what);
    if (!parse_ints(line, nums) || nums.empty() || nums[0] < 0)
      bad_line(no, "expected a count followed by members");
    if (static_cast<long long>(nums.size()) != nums[0] + 1) bad_line(no, "member count mismatch");
    std::vector<int> members(nums.begin() + 1, nums.end());
    NodeSet set = sorted_unique(std::move(members));
    if (static_cast<long long>(set.size()) != nums[0]) bad_line(no, "duplicate members");
    return set;
  };
  inst.q_set = read_set("pickable node line");
  inst.r_set = read_set("dominated node line");
  if (at != lines.size()) bad_line(lines[at].first, "unexpected trailing content");
  try {
    require_partition(inst.graph, inst.q_set, inst.r_set);
  } catch (const ArgumentError& e) {
    throw ParseError(e.what());
  }
  return inst;
}

std::string format_subset_cds(const SubsetCDSInstance& inst) {
  std::ostringstream out;
  out << format_graph(inst.graph);
  auto put = [&](const NodeSet& set) {
    out << set.size();
    for (int v : set) out << ' ' << v;
    out << '\n';
  };
  put(inst.q_set);
  put(inst.r_set);
  return out.str();
}

std::string format_partial_cds(const PartialCDSInstance& inst) {
  std::ostringstream out;
  out << format_graph(inst.graph);
  out << inst.k_target << '\n';
  for (int v = 0; v < inst.graph.node_count(); ++v) {
    out << v << ' ';
    if (inst.weights[v]) out << *inst.weights[v];
    else out << "inf";
    out << '\n';
  }
  return out.str();
}

GSTInstance subset_cds_to_gst(const Graph& hat_g, const NodeSet& q_set, const NodeSet& r_set) {
  require_partition(hat_g, q_set, r_set);
  std::vector<int> pos(hat_g.node_count(), -1);
  for (size_t i = 0; i < q_set.size(); ++i) pos[q_set[i]] = static_cast<int>(i);

  std::vector<Edge> edges;
  for (Edge e : hat_g.edges())
    if (pos[e.first] != -1 && pos[e.second] != -1)
      edges.push_back(make_edge(pos[e.first], pos[e.second]));

  GSTInstance inst;
  inst.graph = Graph(static_cast<int>(q_set.size()), std::move(edges));
  for (int r : r_set) {
    NodeSet group;
    for (int w : hat_g.neighbors(r))
      if (pos[w] != -1) group.push_back(pos[w]);
    if (group.empty())
      throw InfeasibleError("node " + std::to_string(r) + " has no pickable dominator");
    inst.groups.push_back(std::move(group));
  }
  inst.validate();
  return inst;
}

SubsetCDSInstance gst_to_subset_cds(const GSTInstance& inst) {
  inst.validate();
  if (inst.edge_costs)
    for (std::int64_t c : *inst.edge_costs)
      if (c != 1) throw ArgumentError("reduction requires unit costs");
  int n = inst.graph.node_count();
  int k = static_cast<int>(inst.groups.size());
  std::vector<Edge> edges = inst.graph.edges();
  for (int i = 0; i < k; ++i)
    for (int member : inst.groups[static_cast<size_t>(i)])
      edges.push_back(make_edge(member, n + i));
  SubsetCDSInstance out;
  out.graph = Graph(n + k, std::move(edges));
  for (int v = 0; v < n; ++v) out.q_set.push_back(v);
  for (int i = 0; i < k; ++i) out.r_set.push_back(n + i);
  return out;
}

RoundedGST round_and_subdivide(const GSTInstance& inst, Rational epsilon, std::int64_t m_guess) {
  inst.validate();
  if (epsilon.num <= 0 || epsilon.den <= 0) throw ArgumentError("scale must be positive");
  if (!inst.edge_costs) throw ArgumentError("instance carries no edge costs");
  if (m_guess <= 0) throw ArgumentError("cost guess must be positive");
  const Graph& g = inst.graph;
  int n = g.node_count();
  int m = g.edge_count();
  if (n == 0) throw ArgumentError("empty instance");

  RoundedGST out;
  // mu = epsilon * m_guess / n; c'(e) = floor(c / mu) computed exactly.
  using Wide = __int128;
  Wide mu_num = static_cast<Wide>(epsilon.num) * m_guess;
  Wide mu_den = static_cast<Wide>(epsilon.den) * n;
  if (mu_num > static_cast<Wide>(INT64_MAX) || mu_den > static_cast<Wide>(INT64_MAX))
    throw ArgumentError("rounding scale overflows");
  out.mu = {static_cast<std::int64_t>(mu_num), static_cast<std::int64_t>(mu_den)};

  out.rounded_cost.assign(static_cast<size_t>(m), -1);
  for (int i = 0; i < m; ++i) {
    std::int64_t c = (*inst.edge_costs)[static_cast<size_t>(i)];
    if (c > m_guess) continue;
    out.rounded_cost[static_cast<size_t>(i)] =
        static_cast<std::int64_t>(static_cast<Wide>(c) * mu_den / mu_num);
  }

  // Contract the zero-rounded edges.
  std::vector<int> parent(static_cast<size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  for (int i = 0; i < m; ++i)
    if (out.rounded_cost[static_cast<size_t>(i)] == 0) {
      auto [u, v] = g.edge(i);
      int ru = find_root(parent, u), rv = find_root(parent, v);
      if (ru != rv) parent[std::max(ru, rv)] = std::min(ru, rv);
    }
  out.node_map.assign(static_cast<size_t>(n), -1);
  int contracted = 0;
  for (int v = 0; v < n; ++v)
    if (find_root(parent, v) == v) out.node_map[static_cast<size_t>(v)] = contracted++;
  for (int v = 0; v < n; ++v)
    out.node_map[static_cast<size_t>(v)] = out.node_map[static_cast<size_t>(find_root(parent, v))];

  // Surviving positive edges: drop loops, keep the cheapest of parallels.
  std::map<Edge, std::int64_t> weight;
  for (int i = 0; i < m; ++i) {
    std::int64_t c = out.rounded_cost[static_cast<size_t>(i)];
    if (c <= 0) continue;
    auto [u, v] = g.edge(i);
    int a = out.node_map[static_cast<size_t>(u)], b = out.node_map[static_cast<size_t>(v)];
    if (a == b) continue;
    Edge key = make_edge(a, b);
    auto it = weight.find(key);
    if (it == weight.end()) weight.emplace(key, c);
    else it->second = std::min(it->second, c);
  }

  // Subdivide each edge of rounded cost c into a path of c unit edges.
  int total = contracted;
  std::vector<Edge> edges;
  for (auto [e, c] : weight) {
    int prev = e.first;
    for (std::int64_t step = 1; step < c; ++step) {
      edges.push_back(make_edge(prev, total));
      prev = total++;
    }
    edges.push_back(make_edge(prev, e.second));
  }
  out.instance.graph = Graph(total, std::move(edges));
  for (const NodeSet& group : inst.groups) {
    NodeSet mapped;
    for (int v : group) mapped.push_back(out.node_map[static_cast<size_t>(v)]);
    out.instance.groups.push_back(sorted_unique(std::move(mapped)));
  }
  out.instance.validate();

  // Every rounded cost is at most floor(n/epsilon), so the subdivision stays small.
  Wide per_edge = static_cast<Wide>(n) * epsilon.den / epsilon.num;
  check(static_cast<Wide>(total) <= static_cast<Wide>(n) + static_cast<Wide>(m) * per_edge,
        "subdivided node count exceeds its bound");
  return out;
}

PartialCDSInstance subset_cds_to_partial_cds(const Graph& hat_g, const NodeSet& q_set,
                                             const NodeSet& r_set,
                                             const std::vector<std::int64_t>& weights) {
  require_partition(hat_g, q_set, r_set);
  if (static_cast<int>(weights.size()) != hat_g.node_count())
    throw ArgumentError("weight count must match node count");
  for (int q : q_set)
    if (weights[static_cast<size_t>(q)] < 0) throw ArgumentError("negative node weight");

  int n = hat_g.node_count();
  int nq = static_cast<int>(q_set.size());
  int nr = static_cast<int>(r_set.size());
  std::vector<Edge> edges = hat_g.edges();
  std::vector<char> in_q(static_cast<size_t>(n), 0);
  for (int q : q_set) in_q[static_cast<size_t>(q)] = 1;
  for (int copy = 0; copy < nq; ++copy)
    for (int i = 0; i < nr; ++i) {
      int copy_id = n + copy * nr + i;
      for (int w : hat_g.neighbors(r_set[static_cast<size_t>(i)]))
        if (in_q[static_cast<size_t>(w)]) edges.push_back(make_edge(w, copy_id));
    }

  PartialCDSInstance out;
  out.graph = Graph(n + nq * nr, std::move(edges));
  out.weights.assign(static_cast<size_t>(n + nq * nr), std::nullopt);
  for (int q : q_set) out.weights[static_cast<size_t>(q)] = weights[static_cast<size_t>(q)];
  out.k_target = static_cast<std::int64_t>(nq + 1) * nr;
  check(out.graph.node_count() == nq * nr + nr + nq, "constructed node count");
  check(static_cast<std::int64_t>(out.graph.node_count()) <=
            static_cast<std::int64_t>(n) * std::max(n, 1),
        "constructed instance must stay quadratic");
  return out;
}

}  // namespace ecds
