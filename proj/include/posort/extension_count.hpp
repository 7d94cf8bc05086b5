#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "posort/dag.hpp"
#include "posort/sort.hpp"

namespace posort {

// Exact linear-extension count. value >= 1 for every DAG; value == 1 iff
// the graph has a Hamiltonian path; value == n! for the edgeless graph.
struct ExtensionCount {
    std::uint64_t value = 1;
    double log2_value = 0.0;
};

// Exact count by dynamic programming over vertex subsets, summing over the
// possible last elements of each subset. Requires n <= 20 so the count fits
// in 64 bits (20! < 2^63); throws TooLarge beyond that.
ExtensionCount count_extensions(const Dag& g);

// Integer intervals [lo, hi] within [1, n], one per vertex: a singleton at
// the final position for path vertices, and [pos(finger)+1, pos(vertex)]
// for inserted ones (the dummy finger counts as position 0).
struct IntervalSet {
    std::vector<int> lo;
    std::vector<int> hi;
    int count(int v) const { return hi[v] - lo[v] + 1; }
    int n() const { return static_cast<int>(lo.size()); }
};

IntervalSet build_intervals(const RunTrace& trace);

enum class CheckStatus { passed, failed, skipped };

struct CheckResult {
    std::string id;    // C1..C5 (plus C4a/C4b sub-results)
    std::string name;
    CheckStatus status = CheckStatus::skipped;
    double slack = 0.0;     // how far from the boundary; < 0 on failure
    std::string note;
};

struct CheckReport {
    std::vector<CheckResult> results;
    std::optional<double> log2_extensions;           // of the graph order
    std::optional<double> log2_interval_extensions;  // of the interval order
    IntervalSet intervals;

    bool all_passed() const;  // skipped entries do not count as failures
    const CheckResult* find(const std::string& id) const;
};

// Exact per-run checks:
//   C1  k <= log2 e(P)                      (needs n <= 20, else skipped)
//   C2  k == sum over path levels of (L_i - 1)
//   C3  reachable pairs have ordered, disjoint intervals
//   C4  sum log2 |R_i| <= log2 e(P)         (needs n <= 20, else skipped)
//       C4a sum log2 |R_i| <= log2 e(interval order)
//       C4b e(interval order) <= e(P)
//   C5  |R_i| >= d_i for every inserted vertex
// Log comparisons use a 1e-9 tolerance; everything else is exact integers.
CheckReport check_run(const Dag& g, const RunTrace& trace);

}  // namespace posort
