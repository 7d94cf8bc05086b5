#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "posort/oracle.hpp"

namespace posort {

// Level-linked (2,4)-tree over a sequence of element ids. Leaves, left to
// right, hold the sequence; all leaves are at equal depth; internal nodes
// have 2..4 children; adjacent nodes on each level are linked.
//
// Supports finger_search (locate, starting from a given leaf, the last
// element that precedes a probe value in the oracle's order, spending
// O(1 + log d) oracle comparisons where d is the distance travelled) and
// finger_insert with amortized constant rebalancing.
//
// Each node stores the minimum element of its subtree. Inserts always land
// strictly after an existing leaf, so a subtree minimum never changes once
// set; splits derive the new node's minimum from its first child. Searches
// compare the probe only against these minima, never against synthetic keys.
class FingerTree {
public:
    // Builds a balanced tree over `leaves` in left-to-right order.
    // Ids must be distinct and in [0, universe).
    FingerTree(std::span<const int> leaves, int universe);

    struct SearchResult {
        int predecessor = -1;          // last element preceding the probe
        std::int64_t distance = 0;     // leaves from finger to predecessor, inclusive
        int comparisons = 0;           // oracle queries consumed by this call
    };

    // Finds the farthest element q at or after `finger` with q before
    // `probe` in the oracle order. Requires finger before probe; this is
    // verified with one counted oracle query and FingerNotBefore is thrown
    // on violation. Per call, comparisons <= 4*ceil(log2(d+1)) + 4.
    SearchResult finger_search(int probe, int finger, LinearOracle& oracle) const;

    // Inserts `value` as the immediate successor of `after`. Splits are
    // amortized constant per insert.
    void finger_insert(int after, int value);

    bool contains(int id) const;

    // Next leaf after id, or -1 at the tail.
    int successor(int id) const;

    std::vector<int> leaves_in_order() const;
    std::size_t size() const { return leaf_count_; }

    // Node splits (including root growth) since construction.
    std::uint64_t rebalance_steps() const { return splits_; }

    // Structural self-check for tests; throws InternalInvariantViolation.
    void validate() const;

private:
    struct Node {
        int parent = -1;
        int left = -1;   // level links
        int right = -1;
        int min_elem = -1;  // smallest element in this subtree
        int elem = -1;      // leaf payload, -1 for internal nodes
        int child[5] = {-1, -1, -1, -1, -1};  // slot 4 only transiently
        int degree = 0;     // 0 for leaves
    };

    int new_node();
    int leftmost_leaf() const;
    void insert_child_after(int parent, int pos, int node);
    void split(int node);

    std::vector<Node> pool_;
    std::vector<int> leaf_of_;  // element id -> leaf node, or -1
    int root_ = -1;
    std::size_t leaf_count_ = 0;
    std::uint64_t splits_ = 0;
};

}  // namespace posort
