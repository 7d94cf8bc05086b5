#include "posort/order_index.hpp"

#include <string>

namespace posort {

OrderIndex::OrderIndex(std::span<const int> path, int universe) {
    if (universe < 0) throw BadParams("universe must be nonnegative");
    items_.assign(static_cast<std::size_t>(universe) + 1, {});

    // Lay out sentinel + path into buckets at half capacity.
    const std::size_t total = path.size() + 1;
    const std::size_t per_bucket = kBucketCap / 2;
    const std::size_t bucket_count = (total + per_bucket - 1) / per_bucket;
    buckets_.reserve(bucket_count * 2);
    const std::uint64_t spacing = kTagSpace / (bucket_count + 1);

    std::size_t placed = 0;
    for (std::size_t b = 0; b < bucket_count; ++b) {
        buckets_.push_back({});
        Bucket& bucket = buckets_.back();
        bucket.tag = spacing * (b + 1);
        bucket.prev = static_cast<int>(b) - 1;
        bucket.next = (b + 1 < bucket_count) ? static_cast<int>(b + 1) : -1;
        for (std::size_t j = 0; j < per_bucket && placed < total; ++j, ++placed) {
            const int slot =
                placed == 0 ? 0 : slot_of(path[placed - 1]);
            if (slot < 0 || slot >= static_cast<int>(items_.size()))
                throw VertexOutOfRange("element id outside the universe");
            if (items_[slot].present)
                throw DuplicateElement("duplicate element in initial path");
            append_to_new_bucket(slot, static_cast<std::uint32_t>(b));
        }
    }
    first_bucket_ = 0;
    size_ = path.size();
}

void OrderIndex::append_to_new_bucket(int slot, std::uint32_t bucket) {
    Bucket& b = buckets_[bucket];
    Item& it = items_[slot];
    it.present = true;
    it.bucket = bucket;
    it.prev = b.tail;
    it.next = -1;
    it.label = (b.tail == -1) ? kLocalGap : items_[b.tail].label + kLocalGap;
    if (b.tail != -1)
        items_[b.tail].next = slot;
    else
        b.head = slot;
    b.tail = slot;
    ++b.count;
    ++work_;
}

bool OrderIndex::contains(int id) const {
    if (id == kSentinel) return true;
    const int slot = slot_of(id);
    return slot >= 1 && slot < static_cast<int>(items_.size()) &&
           items_[slot].present;
}

int OrderIndex::compare_max(int p, int q) const {
    if (p == q) return p;
    if (!contains(p)) throw ElementAbsent("compare_max: " + std::to_string(p));
    if (!contains(q)) throw ElementAbsent("compare_max: " + std::to_string(q));
    const Item& a = items_[slot_of(p)];
    const Item& b = items_[slot_of(q)];
    if (a.bucket == b.bucket) return a.label > b.label ? p : q;
    return buckets_[a.bucket].tag > buckets_[b.bucket].tag ? p : q;
}

void OrderIndex::insert_after(int after, int x) {
    if (!contains(after))
        throw ElementAbsent("insert_after: " + std::to_string(after));
    const int slot = slot_of(x);
    if (slot < 1 || slot >= static_cast<int>(items_.size()))
        throw VertexOutOfRange("element id outside the universe");
    if (items_[slot].present)
        throw DuplicateElement("insert_after: " + std::to_string(x));

    const int aslot = slot_of(after);
    const std::uint32_t b = items_[aslot].bucket;
    Item& prev = items_[aslot];

    std::uint64_t label;
    if (prev.next == -1) {
        label = prev.label + kLocalGap;
    } else {
        std::uint64_t gap = items_[prev.next].label - prev.label;
        if (gap < 2) {
            // Exhausted only by adversarial midpoint chains; reset and retry.
            relabel_bucket(b);
            gap = items_[prev.next].label - prev.label;
        }
        label = prev.label + gap / 2;
    }

    Item& it = items_[slot];
    it.present = true;
    it.bucket = b;
    it.label = label;
    it.prev = aslot;
    it.next = prev.next;
    if (prev.next != -1)
        items_[prev.next].prev = slot;
    else
        buckets_[b].tail = slot;
    prev.next = slot;
    ++buckets_[b].count;
    ++size_;
    ++work_;

    if (buckets_[b].count > kBucketCap) split_bucket(b);
}

void OrderIndex::relabel_bucket(std::uint32_t b) {
    std::uint64_t label = kLocalGap;
    for (int slot = buckets_[b].head; slot != -1; slot = items_[slot].next) {
        items_[slot].label = label;
        label += kLocalGap;
        ++work_;
    }
}

void OrderIndex::retag_all() {
    std::size_t count = 0;
    for (int b = static_cast<int>(first_bucket_); b != -1; b = buckets_[b].next)
        ++count;
    const std::uint64_t spacing = kTagSpace / (count + 1);
    std::uint64_t tag = spacing;
    for (int b = static_cast<int>(first_bucket_); b != -1; b = buckets_[b].next) {
        buckets_[b].tag = tag;
        tag += spacing;
        ++work_;
    }
}

void OrderIndex::split_bucket(std::uint32_t b) {
    const int keep = buckets_[b].count / 2;

    const auto nb = static_cast<std::uint32_t>(buckets_.size());
    buckets_.push_back({});
    Bucket& rhs = buckets_[nb];
    Bucket& lhs = buckets_[b];

    // Find the cut point and hand the tail half to the new bucket.
    int cut = lhs.head;
    for (int i = 1; i < keep; ++i) cut = items_[cut].next;
    rhs.head = items_[cut].next;
    rhs.tail = lhs.tail;
    rhs.count = lhs.count - keep;
    lhs.tail = cut;
    lhs.count = keep;
    items_[cut].next = -1;
    items_[rhs.head].prev = -1;
    for (int slot = rhs.head; slot != -1; slot = items_[slot].next) {
        items_[slot].bucket = nb;
        ++work_;
    }

    rhs.next = lhs.next;
    rhs.prev = static_cast<int>(b);
    if (rhs.next != -1) buckets_[rhs.next].prev = static_cast<int>(nb);
    lhs.next = static_cast<int>(nb);

    relabel_bucket(b);
    relabel_bucket(nb);

    // Tag the new bucket halfway between its neighbors; when that gap is
    // exhausted, spread all tags evenly (nb already sits in the chain).
    const int after = buckets_[nb].next;
    const std::uint64_t lo = buckets_[b].tag;
    const std::uint64_t hi = (after == -1) ? kTagSpace : buckets_[after].tag;
    if (hi - lo < 2)
        retag_all();
    else
        buckets_[nb].tag = lo + (hi - lo) / 2;
}

std::vector<int> OrderIndex::to_vector() const {
    std::vector<int> out;
    out.reserve(size_);
    for (int b = static_cast<int>(first_bucket_); b != -1; b = buckets_[b].next)
        for (int slot = buckets_[b].head; slot != -1; slot = items_[slot].next)
            if (slot != 0) out.push_back(slot - 1);
    return out;
}

void OrderIndex::validate() const {
    std::size_t seen = 0;
    std::uint64_t prev_tag = 0;
    bool first_item = true;
    int prev_bucket = -1;
    for (int b = static_cast<int>(first_bucket_); b != -1; b = buckets_[b].next) {
        const Bucket& bucket = buckets_[b];
        if (bucket.prev != prev_bucket)
            throw InternalInvariantViolation("bucket chain mismatch");
        if (bucket.tag <= prev_tag)
            throw InternalInvariantViolation("bucket tags not increasing");
        prev_tag = bucket.tag;
        prev_bucket = b;

        int count = 0;
        int prev_slot = -1;
        std::uint64_t prev_label = 0;
        for (int slot = bucket.head; slot != -1; slot = items_[slot].next) {
            const Item& it = items_[slot];
            if (!it.present || it.bucket != static_cast<std::uint32_t>(b))
                throw InternalInvariantViolation("item bucket mismatch");
            if (it.prev != prev_slot)
                throw InternalInvariantViolation("item chain mismatch");
            if (prev_slot != -1 && it.label <= prev_label)
                throw InternalInvariantViolation("item labels not increasing");
            if (first_item && slot != 0)
                throw InternalInvariantViolation("sentinel is not first");
            first_item = false;
            prev_label = it.label;
            prev_slot = slot;
            ++count;
            if (slot != 0) ++seen;
        }
        if (count != bucket.count || bucket.tail != prev_slot)
            throw InternalInvariantViolation("bucket count mismatch");
    }
    if (seen != size_)
        throw InternalInvariantViolation("element count mismatch");
}

}  // namespace posort
