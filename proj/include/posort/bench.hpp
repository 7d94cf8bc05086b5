#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"

#include "posort/dag.hpp"
#include "posort/oracle.hpp"

namespace posort {

struct RunOptions {
    bool trace = false;
    bool check = false;
    bool baselines = false;
};

struct InstanceOutcome {
    nlohmann::ordered_json record;
    bool ok = true;
};

// Runs the sorter (and optionally the baselines and per-run checks) on one
// instance and collects a self-describing record. ok is false when any
// check or output comparison fails.
InstanceOutcome run_instance(const Dag& g, const LinearOracle& oracle,
                             const RunOptions& options);

struct SortCommand {
    std::string graph_file;
    std::optional<std::string> oracle_file;
    std::optional<std::uint64_t> random_extension_seed;
    RunOptions options;
};

// Exit status 0 on success, 1 when a check or comparison fails,
// 2 on input errors (reported to err).
int run_sort_command(const SortCommand& cmd, std::ostream& out, std::ostream& err);

struct BenchCommand {
    int instances = 1000;
    int max_n = 12;
    std::uint64_t seed = 1;
    bool checks = true;
    bool baselines = true;
};

// Randomized sweep over mixed generator kinds; one record per line plus a
// final summary line. Byte-identical output for identical seeds. Exit
// status 0 iff every instance passed.
int run_bench_command(const BenchCommand& cmd, std::ostream& report);

}  // namespace posort
