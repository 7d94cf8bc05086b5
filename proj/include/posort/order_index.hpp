#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "posort/errors.hpp"

namespace posort {

// Order-maintenance structure over a growing sequence: constant amortized
// insert-after and constant-time "which of p, q comes later". Elements are
// integer ids in [0, universe); a reserved sentinel occupies position 0 and
// precedes everything, so front inserts need no special case.
//
// Two-level tag scheme: buckets of bounded size hold 64-bit local labels
// assigned by midpoint; buckets carry 64-bit tags in a linked list and are
// split (and occasionally globally retagged) as they fill. An element's
// order key is the pair (bucket tag, local label).
//
// Order queries never consult the comparison oracle; this structure knows
// nothing about element values, only about positions.
class OrderIndex {
public:
    static constexpr int kSentinel = -1;

    // Builds the order sentinel, path[0], path[1], ... Ids must be distinct
    // and in [0, universe).
    OrderIndex(std::span<const int> path, int universe);

    int sentinel() const { return kSentinel; }

    // The later of p and q in the maintained order; compare_max(p, p) == p.
    // Either argument may be the sentinel.
    int compare_max(int p, int q) const;

    // Places x immediately after `after`. Throws ElementAbsent if `after`
    // is not present, DuplicateElement if x already is.
    void insert_after(int after, int x);

    bool contains(int id) const;

    // Real elements in order (sentinel excluded).
    std::vector<int> to_vector() const;

    std::size_t size() const { return size_; }

    // Element visits spent on inserts, splits and retags; used by tests to
    // pin the amortized-constant bound.
    std::uint64_t work_steps() const { return work_; }

    // Structural self-check for tests; throws InternalInvariantViolation.
    void validate() const;

private:
    static constexpr int kBucketCap = 40;                   // split above this
    static constexpr std::uint64_t kLocalGap = 1ULL << 44;  // fresh label spacing
    static constexpr std::uint64_t kTagSpace = 1ULL << 63;  // bucket tags live below this

    struct Item {
        std::uint32_t bucket = 0;
        std::uint64_t label = 0;
        int next = -1;  // within bucket
        int prev = -1;
        bool present = false;
    };
    struct Bucket {
        std::uint64_t tag = 0;
        int head = -1;  // item slots
        int tail = -1;
        int count = 0;
        int next = -1;  // bucket order
        int prev = -1;
    };

    int slot_of(int id) const { return id + 1; }  // slot 0 = sentinel

    void append_to_new_bucket(int slot, std::uint32_t bucket);
    void split_bucket(std::uint32_t b);
    void relabel_bucket(std::uint32_t b);
    void retag_all();

    std::vector<Item> items_;
    std::vector<Bucket> buckets_;
    std::uint32_t first_bucket_ = 0;
    std::size_t size_ = 0;  // real elements, sentinel excluded
    std::uint64_t work_ = 0;
};

}  // namespace posort
