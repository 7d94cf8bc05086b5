#include "posort/sort.hpp"

#include <bit>
#include <deque>
#include <string>

#include "posort/errors.hpp"
#include "posort/finger_tree.hpp"
#include "posort/order_index.hpp"
#include "posort/rng.hpp"

namespace posort {

namespace {

int ceil_log2(std::uint64_t v) {
    return static_cast<int>(std::bit_width(v - 1));
}

// Source pool honoring the removal policy. Correctness must not depend on
// which source is popped; the randomized mode exists so tests can confirm
// that.
class SourcePool {
public:
    SourcePool(const SortOptions& opt, const std::vector<int>& initial)
        : randomized_(opt.policy == SourcePolicy::randomized), rng_(opt.seed) {
        for (int v : initial) fifo_.push_back(v);
    }
    bool empty() const { return fifo_.empty(); }
    void push(int v) { fifo_.push_back(v); }
    int pop() {
        if (!randomized_) {
            const int v = fifo_.front();
            fifo_.pop_front();
            return v;
        }
        const auto i = static_cast<std::size_t>(bounded(rng_, fifo_.size()));
        const int v = fifo_[i];
        fifo_[i] = fifo_.back();
        fifo_.pop_back();
        return v;
    }

private:
    bool randomized_;
    std::mt19937_64 rng_;
    std::deque<int> fifo_;
};

}  // namespace

std::pair<std::vector<int>, RunTrace> sort_under_partial_information(
    const Dag& g, LinearOracle& oracle, const SortOptions& options) {
    if (oracle.size() != g.n)
        throw InvalidPermutation("oracle size does not match vertex count");
    for (int u = 0; u < g.n; ++u)
        for (int v : g.out_adj[u])
            if (oracle.rank_of(u) >= oracle.rank_of(v))
                throw NotAnExtension("oracle order violates edge " +
                                     std::to_string(u) + " -> " + std::to_string(v));

    const std::uint64_t queries_at_start = oracle.query_count();

    const LevelData lv = compute_levels(g);
    const std::vector<int> path = extract_longest_path(g, lv);
    Residual residual = residual_with_sources(g, path);

    RunTrace trace;
    trace.n = g.n;
    trace.k = g.n - static_cast<int>(path.size());
    trace.longest_path = path;
    trace.inserted.assign(g.n, 0);

    // Both structures hold the dummy head: the tree as an explicit extra
    // leaf (id n), the index as its built-in sentinel.
    const int dummy_leaf = g.n;
    std::vector<int> leaves;
    leaves.reserve(path.size() + 1);
    leaves.push_back(dummy_leaf);
    leaves.insert(leaves.end(), path.begin(), path.end());
    FingerTree tree(leaves, g.n + 1);
    OrderIndex index(path, g.n);

    SourcePool sources(options, residual.sources);
    while (!sources.empty()) {
        const int x = sources.pop();

        // Finger = farthest in-neighbor along the current sequence. Every
        // in-neighbor must already be placed, otherwise x was not a source.
        int finger = OrderIndex::kSentinel;
        for (int u : g.in_adj[x]) {
            if (!index.contains(u))
                throw InternalInvariantViolation(
                    "popped vertex has an unplaced in-neighbor");
            finger = index.compare_max(finger, u);
            ++trace.compare_max_calls;
        }

        InsertStep step;
        step.vertex = x;
        int predecessor;
        if (finger == OrderIndex::kSentinel) {
            // No in-neighbors: one query decides between "new head" and a
            // regular search starting at the current head.
            const int head = tree.successor(dummy_leaf);
            step.used_head_query = true;
            if (oracle.precedes(x, head)) {
                predecessor = kDummy;
                step.finger = kDummy;
                step.distance = 1;
            } else {
                const auto found = tree.finger_search(x, head, oracle);
                predecessor = found.predecessor;
                step.finger = head;
                step.distance = found.distance;
                step.search_queries = static_cast<std::uint32_t>(found.comparisons);
            }
        } else {
            const auto found = tree.finger_search(x, finger, oracle);
            predecessor = found.predecessor;
            step.finger = finger;
            step.distance = found.distance;
            step.search_queries = static_cast<std::uint32_t>(found.comparisons);
        }
        step.predecessor = predecessor;

        if (step.search_queries + (step.used_head_query ? 1u : 0u) >
            4u * static_cast<unsigned>(
                     ceil_log2(static_cast<std::uint64_t>(step.distance) + 1)) +
                5u)
            throw InternalInvariantViolation("per-insert query budget exceeded");

        tree.finger_insert(predecessor == kDummy ? dummy_leaf : predecessor, x);
        index.insert_after(
            predecessor == kDummy ? OrderIndex::kSentinel : predecessor, x);
        trace.inserted[x] = 1;
        trace.inserts.push_back(step);

        // Knuth-style source maintenance on the residual graph.
        residual.in_residual[x] = 0;
        for (int v : g.out_adj[x])
            if (residual.in_residual[v] && --residual.indegree[v] == 0)
                sources.push(v);
    }

    std::vector<int> output = tree.leaves_in_order();
    output.erase(output.begin());  // drop the dummy head
    trace.position.assign(g.n, 0);
    for (std::size_t i = 0; i < output.size(); ++i)
        trace.position[output[i]] = static_cast<int>(i) + 1;
    trace.queries = oracle.query_count() - queries_at_start;
    trace.rebalance_steps = tree.rebalance_steps();

    std::uint64_t per_insert_sum = 0;
    for (const auto& s : trace.inserts)
        per_insert_sum += s.search_queries + (s.used_head_query ? 1 : 0);
    if (per_insert_sum != trace.queries)
        throw InternalInvariantViolation("query accounting mismatch");

    return {std::move(output), std::move(trace)};
}

bool replay_verify(const Dag& g, const LinearOracle& oracle,
                   std::span<const int> output) {
    if (static_cast<int>(output.size()) != g.n) return false;
    std::vector<int> position(g.n, -1);
    for (std::size_t i = 0; i < output.size(); ++i) {
        const int v = output[i];
        if (v < 0 || v >= g.n || position[v] != -1) return false;
        position[v] = static_cast<int>(i);
    }
    for (std::size_t i = 0; i + 1 < output.size(); ++i)
        if (oracle.rank_of(output[i]) >= oracle.rank_of(output[i + 1]))
            return false;
    for (int u = 0; u < g.n; ++u)
        for (int v : g.out_adj[u])
            if (position[u] >= position[v]) return false;
    return true;
}

}  // namespace posort
