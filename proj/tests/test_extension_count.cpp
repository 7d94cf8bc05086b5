#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "posort/errors.hpp"
#include "posort/extension_count.hpp"
#include "test_support.hpp"

using namespace posort;

namespace {

CheckStatus status_of(const CheckReport& report, const std::string& id) {
    const CheckResult* r = report.find(id);
    REQUIRE(r != nullptr);
    return r->status;
}

}  // namespace

TEST_CASE("count_extensions: small closed forms") {
    const Dag chain =
        build_dag(3, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(count_extensions(chain).value == 1);

    const Dag edgeless = build_dag(3, std::vector<std::pair<int, int>>{});
    CHECK(count_extensions(edgeless).value == 6);

    // a->c, b->c, b->d: five extensions by hand.
    const Dag g = build_dag(
        4, std::vector<std::pair<int, int>>{{0, 2}, {1, 2}, {1, 3}});
    CHECK(count_extensions(g).value == 5);
}

TEST_CASE("count_extensions: size cap") {
    const Dag big = build_dag(21, std::vector<std::pair<int, int>>{});
    CHECK_THROWS_AS(count_extensions(big), TooLarge);
    const Dag empty = build_dag(0, std::vector<std::pair<int, int>>{});
    CHECK(count_extensions(empty).value == 1);
}

TEST_CASE("count_extensions agrees with permutation enumeration") {
    std::mt19937_64 rng(321);
    for (int trial = 0; trial < 300; ++trial) {
        const Dag g = test::random_dag(rng, 8);
        CHECK(count_extensions(g).value == test::naive_extension_count(g));
    }
}

TEST_CASE("adding an edge never increases the count") {
    std::mt19937_64 rng(654);
    for (int trial = 0; trial < 200; ++trial) {
        const Dag g = test::random_dag(rng, 9);
        if (g.n < 2) continue;
        const auto base = count_extensions(g).value;

        // Any low->high pair not already present keeps the graph acyclic
        // for gnp shapes; for layered shapes use a pair with an edge gap.
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < g.n; ++u)
            for (int v : g.out_adj[u]) edges.emplace_back(u, v);
        bool added = false;
        for (int tries = 0; tries < 20 && !added; ++tries) {
            const int u = static_cast<int>(bounded(rng, g.n - 1));
            const int v =
                u + 1 + static_cast<int>(bounded(rng, g.n - u - 1));
            edges.emplace_back(u, v);
            try {
                const Dag denser = build_dag(g.n, edges);
                CHECK(count_extensions(denser).value <= base);
                added = true;
            } catch (const CycleDetected&) {
                edges.pop_back();
            }
        }
    }
}

TEST_CASE("build_intervals: worked example") {
    const Dag g =
        build_dag(4, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 3}});
    auto oracle = LinearOracle::from_permutation({0, 2, 3, 1}, g);
    auto [order, trace] = sort_under_partial_information(g, oracle);
    REQUIRE(order == std::vector<int>{0, 3, 1, 2});

    const IntervalSet intervals = build_intervals(trace);
    CHECK(intervals.lo[0] == 1);  // path vertices sit at singletons
    CHECK(intervals.hi[0] == 1);
    CHECK(intervals.lo[1] == 3);
    CHECK(intervals.hi[1] == 3);
    CHECK(intervals.lo[2] == 4);
    CHECK(intervals.hi[2] == 4);
    CHECK(intervals.lo[3] == 2);  // inserted after a: [pos(a)+1, pos(d)]
    CHECK(intervals.hi[3] == 2);
}

TEST_CASE("build_intervals: Hamiltonian path gives all singletons") {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < 6; ++v) edges.emplace_back(v, v + 1);
    const Dag g = build_dag(6, edges);
    auto oracle = sample_extension(g, 1);
    auto [order, trace] = sort_under_partial_information(g, oracle);
    const IntervalSet intervals = build_intervals(trace);
    double sum_log = 0;
    for (int v = 0; v < g.n; ++v) {
        CHECK(intervals.count(v) == 1);
        sum_log += std::log2(intervals.count(v));
    }
    CHECK(sum_log == 0.0);
}

TEST_CASE("build_intervals: head inserts start at position 1") {
    const Dag g = build_dag(3, std::vector<std::pair<int, int>>{});
    auto oracle = LinearOracle::from_permutation({1, 2, 0}, g);
    auto [order, trace] = sort_under_partial_information(g, oracle);
    REQUIRE(order == std::vector<int>{2, 0, 1});
    const IntervalSet intervals = build_intervals(trace);
    CHECK(intervals.lo[2] == 1);  // inserted before the old head
    CHECK(intervals.hi[2] == 1);
    CHECK(intervals.lo[1] == 3);  // inserted at the tail, finger was the head
    CHECK(intervals.hi[1] == 3);
}

TEST_CASE("check_run: worked example passes everything") {
    const Dag g =
        build_dag(4, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 3}});
    auto oracle = LinearOracle::from_permutation({0, 2, 3, 1}, g);
    auto [order, trace] = sort_under_partial_information(g, oracle);

    const CheckReport report = check_run(g, trace);
    CHECK(report.all_passed());
    REQUIRE(report.log2_extensions.has_value());
    CHECK(*report.log2_extensions == doctest::Approx(std::log2(3.0)));
    // C1 slack is log2(3) - k = log2(3) - 1.
    CHECK(report.find("C1")->slack ==
          doctest::Approx(std::log2(3.0) - 1.0).epsilon(1e-9));
    CHECK(status_of(report, "C2") == CheckStatus::passed);
    CHECK(status_of(report, "C3") == CheckStatus::passed);
    CHECK(status_of(report, "C4") == CheckStatus::passed);
    CHECK(status_of(report, "C5") == CheckStatus::passed);
}

TEST_CASE("check_run: Hamiltonian path is all zeros") {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < 5; ++v) edges.emplace_back(v, v + 1);
    const Dag g = build_dag(5, edges);
    auto oracle = sample_extension(g, 3);
    auto [order, trace] = sort_under_partial_information(g, oracle);
    const CheckReport report = check_run(g, trace);
    CHECK(report.all_passed());
    CHECK(*report.log2_extensions == 0.0);
    CHECK(report.find("C1")->slack == 0.0);
}

TEST_CASE("check_run: large n skips the counting checks") {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < 30; ++v) edges.emplace_back(v, v + 1);
    const Dag g = build_dag(32, edges);
    auto oracle = sample_extension(g, 5);
    auto [order, trace] = sort_under_partial_information(g, oracle);
    const CheckReport report = check_run(g, trace);
    CHECK(status_of(report, "C1") == CheckStatus::skipped);
    CHECK(status_of(report, "C4") == CheckStatus::skipped);
    CHECK(status_of(report, "C2") == CheckStatus::passed);
    CHECK(status_of(report, "C3") == CheckStatus::passed);
    CHECK(status_of(report, "C5") == CheckStatus::passed);
    CHECK(report.all_passed());  // skips are not failures
}

TEST_CASE("check_run: C4 reports honest failures on rare adversarial runs") {
    // The summed interval entropy is only guaranteed within a constant
    // factor of log2(e); on this instance it exceeds log2(e) outright
    // (5.585 vs log2(40) = 5.322, verified by hand) and the check must say
    // so instead of hiding it. Everything else stays green.
    const Dag g = build_dag(
        6, std::vector<std::pair<int, int>>{
               {0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 4}});
    auto oracle = LinearOracle::from_permutation({0, 1, 2, 4, 5, 3}, g);
    auto [order, trace] = sort_under_partial_information(g, oracle);
    REQUIRE(order == std::vector<int>{0, 1, 2, 5, 3, 4});
    REQUIRE(count_extensions(g).value == 40);

    const CheckReport report = check_run(g, trace);
    CHECK(status_of(report, "C1") == CheckStatus::passed);
    CHECK(status_of(report, "C2") == CheckStatus::passed);
    CHECK(status_of(report, "C3") == CheckStatus::passed);
    CHECK(status_of(report, "C4b") == CheckStatus::passed);
    CHECK(status_of(report, "C5") == CheckStatus::passed);
    CHECK(status_of(report, "C4") == CheckStatus::failed);
    CHECK(report.find("C4")->slack ==
          doctest::Approx(std::log2(40.0) - (4.0 + std::log2(3.0)))
              .epsilon(1e-9));
    CHECK_FALSE(report.all_passed());
}

TEST_CASE("check_run: randomized sweep") {
    // C1, C2, C3, C4b and C5 are exact consequences of the construction and
    // must hold on every run. C4 pins a constant-factor guarantee at factor
    // 1; violations exist (see the frozen counterexample above) but are
    // rare, small, and never accompanied by any structural failure.
    std::mt19937_64 rng(987);
    int c4_violations = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const Dag g = test::random_dag(rng, 12);
        auto oracle = sample_extension(g, rng());
        auto [order, trace] = sort_under_partial_information(g, oracle);
        const CheckReport report = check_run(g, trace);
        CHECK(status_of(report, "C1") == CheckStatus::passed);
        CHECK(status_of(report, "C2") == CheckStatus::passed);
        CHECK(status_of(report, "C3") == CheckStatus::passed);
        CHECK(status_of(report, "C4b") == CheckStatus::passed);
        CHECK(status_of(report, "C5") == CheckStatus::passed);
        if (status_of(report, "C4") == CheckStatus::failed) {
            ++c4_violations;
            CHECK(report.find("C4")->slack > -1.0);  // overshoot stays small
        }
    }
    CHECK(c4_violations <= 10);
}
