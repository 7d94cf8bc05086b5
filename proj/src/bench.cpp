#include "posort/bench.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <vector>

#include "posort/baselines.hpp"
#include "posort/errors.hpp"
#include "posort/extension_count.hpp"
#include "posort/generators.hpp"
#include "posort/rng.hpp"
#include "posort/sort.hpp"

namespace posort {

namespace {

const char* status_str(CheckStatus s) {
    switch (s) {
        case CheckStatus::passed: return "passed";
        case CheckStatus::failed: return "failed";
        default: return "skipped";
    }
}

std::vector<int> random_partition(std::mt19937_64& rng, int total, int max_part) {
    std::vector<int> parts;
    int remaining = total;
    while (remaining > 0) {
        const int w = 1 + static_cast<int>(bounded(
                              rng, static_cast<std::uint64_t>(
                                       std::min(remaining, max_part))));
        parts.push_back(w);
        remaining -= w;
    }
    return parts;
}

}  // namespace

InstanceOutcome run_instance(const Dag& g, const LinearOracle& oracle,
                             const RunOptions& options) {
    InstanceOutcome outcome;
    auto& rec = outcome.record;

    LinearOracle main_oracle = oracle;
    auto [order, trace] = sort_under_partial_information(g, main_oracle);
    bool ok = replay_verify(g, oracle, order);

    rec["n"] = g.n;
    rec["m"] = g.m;
    rec["k"] = trace.k;
    rec["queries_main"] = trace.queries;
    rec["compare_max_calls"] = trace.compare_max_calls;
    rec["rebalance_steps"] = trace.rebalance_steps;
    double sum_log_d = 0.0;
    for (const auto& step : trace.inserts)
        sum_log_d += std::log2(static_cast<double>(step.distance));
    rec["sum_log_d"] = sum_log_d;
    rec["output_valid"] = ok;

    if (options.baselines) {
        LinearOracle heap_oracle = oracle;
        const auto heap = heap_toposort(g, heap_oracle);
        LinearOracle bin_oracle = oracle;
        std::vector<int> everyone(g.n);
        for (int v = 0; v < g.n; ++v) everyone[v] = v;
        const auto bin = binary_insertion_sort(everyone, bin_oracle);
        rec["queries_baselines"] = {
            {"heap_toposort", heap.queries},
            {"binary_insertion_sort", bin.queries},
        };
        const bool agree = heap.order == order && bin.order == order;
        rec["baselines_agree"] = agree;
        ok = ok && agree;
    }

    if (options.check) {
        const CheckReport report = check_run(g, trace);
        if (report.log2_extensions) rec["log2_e"] = *report.log2_extensions;
        if (report.log2_interval_extensions)
            rec["log2_e_intervals"] = *report.log2_interval_extensions;
        nlohmann::ordered_json checks;
        for (const auto& r : report.results) checks[r.id] = status_str(r.status);
        rec["checks"] = checks;
        ok = ok && report.all_passed();
    }

    if (options.trace) {
        rec["order"] = order;
        rec["longest_path"] = trace.longest_path;
        nlohmann::ordered_json steps = nlohmann::ordered_json::array();
        for (const auto& s : trace.inserts) {
            steps.push_back({{"vertex", s.vertex},
                             {"finger", s.finger},
                             {"predecessor", s.predecessor},
                             {"distance", s.distance},
                             {"search_queries", s.search_queries},
                             {"head_query", s.used_head_query}});
        }
        rec["inserts"] = steps;
    }

    outcome.ok = ok;
    return outcome;
}

int run_sort_command(const SortCommand& cmd, std::ostream& out,
                     std::ostream& err) {
    try {
        std::ifstream graph_in(cmd.graph_file);
        if (!graph_in) {
            err << "error: cannot open graph file '" << cmd.graph_file << "'\n";
            return 2;
        }
        const Dag g = read_edge_list(graph_in);

        LinearOracle oracle;
        if (cmd.oracle_file) {
            std::ifstream oracle_in(*cmd.oracle_file);
            if (!oracle_in) {
                err << "error: cannot open oracle file '" << *cmd.oracle_file
                    << "'\n";
                return 2;
            }
            oracle = LinearOracle::from_permutation(read_permutation(oracle_in), g);
        } else if (cmd.random_extension_seed) {
            oracle = sample_extension(g, *cmd.random_extension_seed);
        } else {
            err << "error: need an oracle file or --random-extension seed\n";
            return 2;
        }

        const InstanceOutcome outcome = run_instance(g, oracle, cmd.options);
        out << outcome.record.dump() << '\n';
        return outcome.ok ? 0 : 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

int run_bench_command(const BenchCommand& cmd, std::ostream& report) {
    if (cmd.instances < 0 || cmd.max_n < 1)
        throw BadParams("bench requires instances >= 0 and max_n >= 1");

    static const char* kKinds[8] = {
        "gnp",  "layered", "gnp",    "layered",
        "path_plus_isolated", "gnp", "layered", "chain_of_antichains"};

    std::uint64_t master = cmd.seed;
    int failures = 0;
    std::uint64_t queries_main = 0, queries_heap = 0, queries_bin = 0;

    for (int i = 0; i < cmd.instances; ++i) {
        const std::uint64_t instance_seed = splitmix64(master);
        std::mt19937_64 rng(instance_seed);
        const std::string kind = kKinds[i % 8];
        const int n = 1 + static_cast<int>(bounded(rng, cmd.max_n));

        GraphSpec spec;
        if (kind == "gnp") {
            const double p = 0.05 + 0.9 * uniform01(rng);  // sequenced before the seed draw
            spec = gen_gnp(n, p, rng());
        } else if (kind == "layered") {
            const auto widths = random_partition(rng, n, 4);
            const double p = 0.2 + 0.7 * uniform01(rng);
            spec = gen_layered(widths, p, rng());
        } else if (kind == "path_plus_isolated") {
            spec = gen_path_plus_isolated(n, static_cast<int>(bounded(rng, n + 1)));
        } else {
            spec = gen_chain_of_antichains(random_partition(rng, n, 4));
        }
        const Dag g = spec.build();
        const LinearOracle oracle = sample_extension(g, rng());

        RunOptions options;
        options.check = cmd.checks;
        options.baselines = cmd.baselines;
        InstanceOutcome outcome = run_instance(g, oracle, options);

        nlohmann::ordered_json rec;
        rec["instance"] = i;
        rec["kind"] = kind;
        rec["seed"] = instance_seed;
        rec.update(outcome.record);
        report << rec.dump() << '\n';

        if (!outcome.ok) ++failures;
        queries_main += outcome.record["queries_main"].get<std::uint64_t>();
        if (cmd.baselines) {
            queries_heap += outcome.record["queries_baselines"]["heap_toposort"]
                                .get<std::uint64_t>();
            queries_bin +=
                outcome.record["queries_baselines"]["binary_insertion_sort"]
                    .get<std::uint64_t>();
        }
    }

    nlohmann::ordered_json summary;
    summary["summary"] = true;
    summary["instances"] = cmd.instances;
    summary["failures"] = failures;
    summary["queries_main_total"] = queries_main;
    if (cmd.baselines) {
        summary["queries_heap_total"] = queries_heap;
        summary["queries_binary_insertion_total"] = queries_bin;
    }
    report << summary.dump() << '\n';
    return failures == 0 ? 0 : 1;
}

}  // namespace posort
