#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace posort {

// Directed acyclic graph over vertices 0..n-1. Out- and in-adjacency lists
// are sorted, duplicate-free and mutually consistent. Immutable after
// construction; safe to read from any number of threads.
struct Dag {
    int n = 0;
    std::int64_t m = 0;  // edge count after dedup
    std::vector<std::vector<int>> out_adj;
    std::vector<std::vector<int>> in_adj;
};

// Per-vertex level: the number of vertices on a longest directed path
// starting at the vertex (1 for sinks). level_counts[i] is the number of
// vertices with level i; index 0 is unused.
struct LevelData {
    std::vector<int> level;
    std::vector<std::int64_t> level_counts;
    int max_level = 0;
};

// The graph minus a vertex sequence, with in-degrees restricted to the
// remaining vertices and the resulting sources.
struct Residual {
    std::vector<char> in_residual;  // 1 iff the vertex is not on the path
    std::vector<int> indegree;      // within the residual graph; 0 elsewhere
    std::vector<int> sources;       // ascending vertex index
};

// Builds a Dag from an edge list. Duplicate edges are removed. Throws
// VertexOutOfRange, SelfLoop or CycleDetected.
Dag build_dag(int n, std::span<const std::pair<int, int>> edges);

LevelData compute_levels(const Dag& g);

// A maximum-length directed path, one vertex per level max..1. Ties are
// broken toward the smallest vertex index, so the result is deterministic.
std::vector<int> extract_longest_path(const Dag& g, const LevelData& lv);

Residual residual_with_sources(const Dag& g, std::span<const int> path);

// Text edge-list format: first line "n m", then m lines "u v".
// Lines starting with '#' and blank lines are ignored.
Dag read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Dag& g);

}  // namespace posort
