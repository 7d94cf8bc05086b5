#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <numeric>

#include "posort/errors.hpp"
#include "posort/sort.hpp"
#include "test_support.hpp"

using namespace posort;

namespace {

int ceil_log2(std::uint64_t v) { return static_cast<int>(std::bit_width(v - 1)); }

std::vector<int> rank_sorted(const LinearOracle& oracle) {
    std::vector<int> out(oracle.size());
    for (int v = 0; v < oracle.size(); ++v) out[oracle.rank_of(v)] = v;
    return out;
}

void check_trace_invariants(const Dag& g, const LinearOracle& oracle,
                            const RunTrace& trace) {
    CHECK(static_cast<int>(trace.inserts.size()) == trace.k);
    CHECK(trace.compare_max_calls <= static_cast<std::uint64_t>(g.m));

    // Final positions form a bijection onto 1..n.
    std::vector<char> seen(g.n + 1, 0);
    for (int v = 0; v < g.n; ++v) {
        REQUIRE(trace.position[v] >= 1);
        REQUIRE(trace.position[v] <= g.n);
        CHECK(!seen[trace.position[v]]);
        seen[trace.position[v]] = 1;
    }

    std::uint64_t per_insert = 0;
    for (const auto& s : trace.inserts) {
        per_insert += s.search_queries + (s.used_head_query ? 1 : 0);
        // The search never starts past the vertex being inserted.
        if (s.finger != kDummy)
            CHECK(oracle.rank_of(s.finger) < oracle.rank_of(s.vertex));
        CHECK(s.search_queries + (s.used_head_query ? 1u : 0u) <=
              4u * static_cast<unsigned>(ceil_log2(s.distance + 1)) + 5u);
        CHECK(s.distance >= 1);
    }
    CHECK(per_insert == trace.queries);
}

}  // namespace

TEST_CASE("worked four-vertex example") {
    // Edges a->b, b->c, a->d with the true order (a, d, b, c).
    const Dag g =
        build_dag(4, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 3}});
    auto oracle = LinearOracle::from_permutation({0, 2, 3, 1}, g);

    auto [order, trace] = sort_under_partial_information(g, oracle);
    CHECK(order == std::vector<int>{0, 3, 1, 2});
    CHECK(trace.longest_path == std::vector<int>{0, 1, 2});
    CHECK(trace.k == 1);
    REQUIRE(trace.inserts.size() == 1);
    const auto& step = trace.inserts[0];
    CHECK(step.vertex == 3);
    CHECK(step.finger == 0);       // compare_max over in-neighbors {a}
    CHECK(step.predecessor == 0);  // lands right after a
    CHECK(step.distance == 1);
    CHECK_FALSE(step.used_head_query);
    check_trace_invariants(g, oracle, trace);
}

TEST_CASE("Hamiltonian path needs zero queries") {
    std::vector<std::pair<int, int>> edges;
    const int n = 10;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    const Dag g = build_dag(n, edges);
    std::vector<int> ranks(n);
    std::iota(ranks.begin(), ranks.end(), 0);
    auto oracle = LinearOracle::from_permutation(ranks, g);

    auto [order, trace] = sort_under_partial_information(g, oracle);
    CHECK(trace.k == 0);
    CHECK(trace.queries == 0);
    CHECK(oracle.query_count() == 0);
    CHECK(order == rank_sorted(oracle));
}

TEST_CASE("edgeless three vertices, reversed-ish order") {
    // True order (v2, v0, v1).
    const Dag g = build_dag(3, std::vector<std::pair<int, int>>{});
    auto oracle = LinearOracle::from_permutation({1, 2, 0}, g);

    auto [order, trace] = sort_under_partial_information(g, oracle);
    CHECK(order == std::vector<int>{2, 0, 1});
    CHECK(trace.k == 2);
    REQUIRE(trace.inserts.size() == 2);
    // Both inserts had no in-neighbors, so both used the head query.
    CHECK(trace.inserts[0].used_head_query);
    CHECK(trace.inserts[1].used_head_query);
    CHECK(trace.inserts[0].vertex == 1);  // FIFO source order
    CHECK(trace.inserts[1].vertex == 2);
    CHECK(trace.inserts[1].finger == kDummy);  // became the new head
    CHECK(trace.inserts[1].predecessor == kDummy);
    check_trace_invariants(g, oracle, trace);
}

TEST_CASE("replay_verify") {
    const Dag g =
        build_dag(4, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 3}});
    const auto oracle = LinearOracle::from_permutation({0, 2, 3, 1}, g);
    CHECK(replay_verify(g, oracle, std::vector<int>{0, 3, 1, 2}));
    CHECK_FALSE(replay_verify(g, oracle, std::vector<int>{0, 1, 3, 2}));
    CHECK_FALSE(replay_verify(g, oracle, std::vector<int>{3, 0, 1, 2}));
    CHECK_FALSE(replay_verify(g, oracle, std::vector<int>{0, 3, 1}));
    CHECK_FALSE(replay_verify(g, oracle, std::vector<int>{0, 3, 1, 1}));
}

TEST_CASE("oracle must extend the graph order") {
    const Dag chain = build_dag(2, std::vector<std::pair<int, int>>{{0, 1}});
    auto bad = LinearOracle::from_permutation({1, 0});
    CHECK_THROWS_AS(sort_under_partial_information(chain, bad), NotAnExtension);
}

TEST_CASE("random sweep: outputs, accounting and source discipline") {
    std::mt19937_64 rng(20260101);
    for (int trial = 0; trial < 1500; ++trial) {
        const Dag g = test::random_dag(rng, 11);
        auto oracle = sample_extension(g, rng());
        auto [order, trace] = sort_under_partial_information(g, oracle);
        CHECK(order == rank_sorted(oracle));
        CHECK(replay_verify(g, oracle, order));
        check_trace_invariants(g, oracle, trace);
    }
}

TEST_CASE("source policy does not affect correctness or bounds") {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 300; ++trial) {
        const Dag g = test::random_dag(rng, 11);
        auto fifo_oracle = sample_extension(g, rng());
        auto random_oracle = fifo_oracle;

        SortOptions randomized;
        randomized.policy = SourcePolicy::randomized;
        randomized.seed = rng();

        auto [fifo_order, fifo_trace] =
            sort_under_partial_information(g, fifo_oracle);
        auto [random_order, random_trace] =
            sort_under_partial_information(g, random_oracle, randomized);

        CHECK(fifo_order == random_order);  // both must equal the true order
        CHECK(fifo_trace.k == random_trace.k);
        check_trace_invariants(g, random_oracle, random_trace);
    }
}
