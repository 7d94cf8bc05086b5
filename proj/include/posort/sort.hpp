#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "posort/dag.hpp"
#include "posort/oracle.hpp"

namespace posort {

// Stands for the dummy head that precedes every real element.
inline constexpr int kDummy = -1;

enum class SourcePolicy {
    fifo,       // deterministic: sources popped in discovery order
    randomized  // seeded random pops; exercises policy independence
};

struct SortOptions {
    SourcePolicy policy = SourcePolicy::fifo;
    std::uint64_t seed = 0;
};

// One insertion performed by the main loop.
struct InsertStep {
    int vertex = -1;
    int finger = kDummy;           // where the search started (kDummy if it never ran)
    int predecessor = kDummy;      // element the vertex was inserted after
    std::int64_t distance = 1;     // vertices from finger to predecessor, inclusive
    std::uint32_t search_queries = 0;
    bool used_head_query = false;  // exactly one extra query when the finger was the dummy
};

// Complete instrumentation of one sorting run.
struct RunTrace {
    int n = 0;
    int k = 0;  // vertices inserted by the loop, n - |longest path|
    std::vector<int> longest_path;
    std::vector<InsertStep> inserts;
    std::uint64_t queries = 0;
    std::uint64_t compare_max_calls = 0;
    std::uint64_t rebalance_steps = 0;
    std::vector<int> position;  // final 1-based position per vertex
    std::vector<char> inserted; // 1 iff the vertex was inserted by the loop
};

// Sorts the ground set under the partial information in g, consulting the
// oracle as few times as possible: extract a longest path, then insert each
// residual source by finger search from its farthest in-neighbor.
//
// Returns the sequence in oracle order plus the full trace. The oracle must
// extend g's partial order (validated up front, NotAnExtension otherwise).
std::pair<std::vector<int>, RunTrace> sort_under_partial_information(
    const Dag& g, LinearOracle& oracle, const SortOptions& options = {});

// True iff output is g's ground set sorted by the oracle's ranks and is a
// linear extension of g.
bool replay_verify(const Dag& g, const LinearOracle& oracle,
                   std::span<const int> output);

}  // namespace posort
