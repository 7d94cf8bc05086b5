#include "posort/extension_count.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "posort/errors.hpp"

namespace posort {

namespace {

constexpr int kMaxExactCount = 20;  // 20! < 2^63
constexpr double kLogTolerance = 1e-9;

// Extension count of the order given by out-neighbor bitmasks: iterate
// subsets, summing over the feasible last element (one with no out-edge
// inside the subset).
std::uint64_t count_by_subsets(int n, const std::vector<std::uint32_t>& out_mask) {
    std::vector<std::uint64_t> ways(std::size_t{1} << n, 0);
    ways[0] = 1;
    for (std::uint32_t set = 1; set < (std::uint32_t{1} << n); ++set) {
        std::uint64_t total = 0;
        for (std::uint32_t rest = set; rest != 0;) {
            const std::uint32_t bit = rest & (~rest + 1);
            rest ^= bit;
            const int v = std::countr_zero(bit);
            if ((out_mask[v] & set) == 0) total += ways[set ^ bit];
        }
        ways[set] = total;
    }
    return ways[(std::uint32_t{1} << n) - 1];
}

}  // namespace

ExtensionCount count_extensions(const Dag& g) {
    if (g.n > kMaxExactCount)
        throw TooLarge("exact counting supports n <= " +
                       std::to_string(kMaxExactCount));
    std::vector<std::uint32_t> out_mask(g.n, 0);
    for (int u = 0; u < g.n; ++u)
        for (int v : g.out_adj[u]) out_mask[u] |= std::uint32_t{1} << v;
    ExtensionCount res;
    res.value = g.n == 0 ? 1 : count_by_subsets(g.n, out_mask);
    res.log2_value = std::log2(static_cast<double>(res.value));
    return res;
}

IntervalSet build_intervals(const RunTrace& trace) {
    IntervalSet set;
    set.lo.resize(trace.n);
    set.hi.resize(trace.n);
    for (int v = 0; v < trace.n; ++v)
        set.lo[v] = set.hi[v] = trace.position[v];
    for (const auto& step : trace.inserts) {
        const int finger_pos =
            step.finger == kDummy ? 0 : trace.position[step.finger];
        set.lo[step.vertex] = finger_pos + 1;
        set.hi[step.vertex] = trace.position[step.vertex];
    }
    for (int v = 0; v < trace.n; ++v)
        if (set.lo[v] < 1 || set.lo[v] > set.hi[v] || set.hi[v] > trace.n)
            throw InternalInvariantViolation("malformed interval for vertex " +
                                             std::to_string(v));
    return set;
}

bool CheckReport::all_passed() const {
    for (const auto& r : results)
        if (r.status == CheckStatus::failed) return false;
    return true;
}

const CheckResult* CheckReport::find(const std::string& id) const {
    for (const auto& r : results)
        if (r.id == id) return &r;
    return nullptr;
}

CheckReport check_run(const Dag& g, const RunTrace& trace) {
    CheckReport report;
    report.intervals = build_intervals(trace);
    const IntervalSet& intervals = report.intervals;
    const bool countable = g.n <= kMaxExactCount;

    auto add = [&report](std::string id, std::string name, CheckStatus status,
                         double slack, std::string note = "") {
        report.results.push_back(
            {std::move(id), std::move(name), status, slack, std::move(note)});
    };

    std::optional<ExtensionCount> graph_count;
    if (countable) {
        graph_count = count_extensions(g);
        report.log2_extensions = graph_count->log2_value;
    }

    // C1: the loop never inserts more vertices than the information bound.
    if (countable) {
        const double slack = graph_count->log2_value - trace.k;
        add("C1", "k_le_log2_extensions",
            slack >= -kLogTolerance ? CheckStatus::passed : CheckStatus::failed,
            slack);
    } else {
        add("C1", "k_le_log2_extensions", CheckStatus::skipped, 0.0,
            "n > 20, exact count unavailable");
    }

    // C2: k equals the surplus over one vertex per path level.
    {
        const LevelData lv = compute_levels(g);
        std::int64_t surplus = 0;
        const int path_len = static_cast<int>(trace.longest_path.size());
        for (int i = 1; i <= path_len; ++i) surplus += lv.level_counts[i] - 1;
        const bool ok = surplus == trace.k;
        add("C2", "k_eq_sum_level_excess",
            ok ? CheckStatus::passed : CheckStatus::failed,
            static_cast<double>(trace.k) - static_cast<double>(surplus));
    }

    // C3: along any directed path the intervals are disjoint and ordered.
    {
        bool ok = true;
        std::vector<char> reach(g.n, 0);
        std::vector<int> stack;
        for (int s = 0; s < g.n && ok; ++s) {
            std::fill(reach.begin(), reach.end(), 0);
            stack.assign(1, s);
            while (!stack.empty() && ok) {
                const int u = stack.back();
                stack.pop_back();
                for (int v : g.out_adj[u]) {
                    if (reach[v]) continue;
                    reach[v] = 1;
                    if (intervals.hi[s] >= intervals.lo[v]) ok = false;
                    stack.push_back(v);
                }
            }
        }
        add("C3", "reachable_pairs_interval_disjoint",
            ok ? CheckStatus::passed : CheckStatus::failed, ok ? 0.0 : -1.0);
    }

    // C4: sum of interval entropies vs. the graph order's count. Holds on
    // the vast majority of instances but is not a universal exact bound
    // (the underlying guarantee is only up to a constant factor), so a
    // rare honest failure here is possible; the slack records how close.
    // The interval order's own count is reported alongside, with C4b
    // checking it never exceeds the graph count (which does follow
    // exactly from interval disjointness along edges).
    double sum_log_sizes = 0.0;
    for (int v = 0; v < g.n; ++v)
        sum_log_sizes += std::log2(static_cast<double>(intervals.count(v)));
    if (countable) {
        std::vector<std::uint32_t> out_mask(g.n, 0);
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j)
                if (i != j && intervals.hi[i] < intervals.lo[j])
                    out_mask[i] |= std::uint32_t{1} << j;
        const std::uint64_t interval_count =
            g.n == 0 ? 1 : count_by_subsets(g.n, out_mask);
        const double log2_interval = std::log2(static_cast<double>(interval_count));
        report.log2_interval_extensions = log2_interval;

        const double slack = graph_count->log2_value - sum_log_sizes;
        add("C4", "sum_log_interval_le_log2_extensions",
            slack >= -kLogTolerance ? CheckStatus::passed : CheckStatus::failed,
            slack);
        const bool b_ok = interval_count <= graph_count->value;
        add("C4b", "interval_extensions_le_graph_extensions",
            b_ok ? CheckStatus::passed : CheckStatus::failed,
            graph_count->log2_value - log2_interval);
    } else {
        add("C4", "sum_log_interval_le_log2_extensions", CheckStatus::skipped,
            0.0, "n > 20, exact count unavailable");
        add("C4b", "interval_extensions_le_graph_extensions",
            CheckStatus::skipped, 0.0, "n > 20, exact count unavailable");
    }

    // C5: each inserted vertex's interval covers its search distance.
    {
        bool ok = true;
        double min_slack = 0.0;
        bool first = true;
        for (const auto& step : trace.inserts) {
            const double slack =
                static_cast<double>(intervals.count(step.vertex)) -
                static_cast<double>(step.distance);
            if (first || slack < min_slack) min_slack = slack;
            first = false;
            if (intervals.count(step.vertex) < step.distance) ok = false;
        }
        add("C5", "interval_size_ge_search_distance",
            ok ? CheckStatus::passed : CheckStatus::failed, min_slack);
    }

    return report;
}

}  // namespace posort
