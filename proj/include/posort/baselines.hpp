#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "posort/dag.hpp"
#include "posort/oracle.hpp"

namespace posort {

struct BaselineResult {
    std::vector<int> order;
    std::uint64_t queries = 0;
};

// Topological sort keeping the current sources in a binary min-heap ordered
// by oracle comparisons. Structure-oblivious beyond the source discipline;
// a Hamiltonian path costs zero queries since the heap never holds two
// elements at once.
BaselineResult heap_toposort(const Dag& g, LinearOracle& oracle);

// Insertion sort with binary-searched positions; ignores the graph
// entirely. Inserting the i-th element costs at most ceil(log2(i)) queries.
BaselineResult binary_insertion_sort(std::span<const int> elements,
                                     LinearOracle& oracle);

}  // namespace posort
