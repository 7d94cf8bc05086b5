#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "posort/dag.hpp"

namespace posort {

struct GraphSpec {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    Dag build() const;
};

// Random DAG: each pair (u, v) with u < v carries an edge with probability
// p, oriented low to high index.
GraphSpec gen_gnp(int n, double p, std::uint64_t seed);

// Vertices arranged in layers of the given widths; edges only between
// consecutive layers, each present with probability p.
GraphSpec gen_layered(std::span<const int> widths, double p, std::uint64_t seed);

// A directed path on n - t vertices plus t isolated vertices. Stresses
// finger-search distances while keeping the path trivial to extract.
GraphSpec gen_path_plus_isolated(int n, int t);

// Complete bipartite edges between consecutive blocks of the given widths.
// Block i's vertices all share one level, so the loop must insert
// sum of (width - 1) vertices.
GraphSpec gen_chain_of_antichains(std::span<const int> widths);

}  // namespace posort
