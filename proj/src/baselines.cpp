#include "posort/baselines.hpp"

#include <utility>

namespace posort {

namespace {

// Minimal binary min-heap with an explicit comparison count: the number of
// oracle queries spent is exactly the number of sift comparisons, with no
// dependence on a library's heap strategy.
class CountingMinHeap {
public:
    explicit CountingMinHeap(LinearOracle& oracle) : oracle_(oracle) {}

    bool empty() const { return data_.empty(); }

    void push(int v) {
        data_.push_back(v);
        std::size_t i = data_.size() - 1;
        while (i > 0) {
            const std::size_t parent = (i - 1) / 2;
            if (!oracle_.precedes(data_[i], data_[parent])) break;
            std::swap(data_[i], data_[parent]);
            i = parent;
        }
    }

    int pop() {
        const int top = data_[0];
        data_[0] = data_.back();
        data_.pop_back();
        std::size_t i = 0;
        while (true) {
            const std::size_t l = 2 * i + 1, r = 2 * i + 2;
            if (l >= data_.size()) break;
            std::size_t best = l;
            if (r < data_.size() && oracle_.precedes(data_[r], data_[l])) best = r;
            if (!oracle_.precedes(data_[best], data_[i])) break;
            std::swap(data_[i], data_[best]);
            i = best;
        }
        return top;
    }

private:
    LinearOracle& oracle_;
    std::vector<int> data_;
};

}  // namespace

BaselineResult heap_toposort(const Dag& g, LinearOracle& oracle) {
    const std::uint64_t before = oracle.query_count();
    std::vector<int> indeg(g.n);
    CountingMinHeap heap(oracle);
    for (int v = 0; v < g.n; ++v) {
        indeg[v] = static_cast<int>(g.in_adj[v].size());
        if (indeg[v] == 0) heap.push(v);
    }
    BaselineResult res;
    res.order.reserve(g.n);
    while (!heap.empty()) {
        const int v = heap.pop();
        res.order.push_back(v);
        for (int w : g.out_adj[v])
            if (--indeg[w] == 0) heap.push(w);
    }
    res.queries = oracle.query_count() - before;
    return res;
}

BaselineResult binary_insertion_sort(std::span<const int> elements,
                                     LinearOracle& oracle) {
    const std::uint64_t before = oracle.query_count();
    BaselineResult res;
    res.order.reserve(elements.size());
    for (int x : elements) {
        // First position whose element follows x.
        std::size_t lo = 0, hi = res.order.size();
        while (lo < hi) {
            const std::size_t mid = (lo + hi) / 2;
            if (oracle.precedes(x, res.order[mid]))
                hi = mid;
            else
                lo = mid + 1;
        }
        res.order.insert(res.order.begin() + static_cast<std::ptrdiff_t>(lo), x);
    }
    res.queries = oracle.query_count() - before;
    return res;
}

}  // namespace posort
