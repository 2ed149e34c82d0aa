#pragma once

#include <cstdint>

#include "ecds/graph.hpp"

namespace ecds {

// Each unordered pair becomes an edge independently with probability p.
Graph random_graph(int n, double p, std::uint64_t seed);

// Random recursive tree plus independent extra edges with probability p;
// always connected.
Graph random_connected_graph(int n, double p, std::uint64_t seed);

}  // namespace ecds
