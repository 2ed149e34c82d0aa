#include "ecds/generate.hpp"

#include <random>

#include "ecds/errors.hpp"

namespace ecds {

namespace {

double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

}  // namespace

Graph random_graph(int n, double p, std::uint64_t seed) {
  if (n < 0) throw ArgumentError("node count must be non-negative");
  if (p < 0.0 || p > 1.0) throw ArgumentError("edge probability must lie in [0,1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (unit_draw(rng) < p) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph random_connected_graph(int n, double p, std::uint64_t seed) {
  if (n <= 0) throw ArgumentError("node count must be positive");
  if (p < 0.0 || p > 1.0) throw ArgumentError("edge probability must lie in [0,1]");
  std::mt19937_64 rng(seed);
  std::vector<int> perm(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(perm[static_cast<size_t>(i)],
              perm[static_cast<size_t>(rng() % static_cast<std::uint64_t>(i + 1))]);

  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) {
    int attach = perm[static_cast<size_t>(rng() % static_cast<std::uint64_t>(i))];
    edges.push_back(make_edge(perm[static_cast<size_t>(i)], attach));
  }
  EdgeSet tree = sorted_unique(edges);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      bool take = unit_draw(rng) < p;  // drawn for every pair to keep the stream stable
      if (take && !contains(tree, Edge{u, v})) edges.emplace_back(u, v);
    }
  return Graph(n, std::move(edges));
}

}  // namespace ecds
