#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "posort/dag.hpp"

namespace posort {

// The ground-truth linear order, exposed through a counted comparison
// interface. Every comparison anywhere in the stack goes through
// precedes(), so query_count() is the exact number of comparisons spent.
//
// A single instance is confined to one thread (the counter is mutable
// state); independent trials use independent copies.
class LinearOracle {
public:
    LinearOracle() = default;

    // ranks[v] is v's position in the linear order; must be a bijection
    // onto 0..n-1. The Dag overload additionally validates that the order
    // extends the graph's partial order.
    static LinearOracle from_permutation(std::vector<int> ranks);
    static LinearOracle from_permutation(std::vector<int> ranks, const Dag& g);

    // One oracle query: does x come before y? Increments the counter by
    // exactly 1. Throws SameElement if x == y.
    bool precedes(int x, int y);

    int size() const { return static_cast<int>(rank_.size()); }
    std::uint64_t query_count() const { return queries_; }

    // Verification access for tests and replay checks. Not an oracle
    // query; never used on the algorithm's query path.
    int rank_of(int v) const;
    const std::vector<int>& ranks() const { return rank_; }

private:
    std::vector<int> rank_;
    std::uint64_t queries_ = 0;
};

// A random topological order of g: repeatedly pick a uniform source among
// the current sources. Deterministic per seed; always a valid extension.
// The distribution over extensions is not uniform.
LinearOracle sample_extension(const Dag& g, std::uint64_t seed);

// Permutation file format: n lines, line i holding rank(vertex i).
std::vector<int> read_permutation(std::istream& in);
void write_permutation(std::ostream& out, const LinearOracle& oracle);

}  // namespace posort
