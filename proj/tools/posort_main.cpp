// Command-line front end: instance generation, a single instrumented sort
// with optional checks and baselines, and the randomized benchmark sweep.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "posort/bench.hpp"
#include "posort/errors.hpp"
#include "posort/generators.hpp"

namespace {

int cmd_gen(const std::string& kind, int n, double p, int t,
            const std::vector<int>& widths, std::uint64_t seed,
            const std::string& out_path) {
    posort::GraphSpec spec;
    if (kind == "gnp") {
        spec = posort::gen_gnp(n, p, seed);
    } else if (kind == "layered") {
        if (widths.empty()) throw posort::BadParams("layered needs --widths");
        spec = posort::gen_layered(widths, p, seed);
    } else if (kind == "path_plus_isolated") {
        spec = posort::gen_path_plus_isolated(n, t);
    } else if (kind == "chain_of_antichains") {
        if (widths.empty())
            throw posort::BadParams("chain_of_antichains needs --widths");
        spec = posort::gen_chain_of_antichains(widths);
    } else {
        throw posort::BadParams("unknown kind '" + kind + "'");
    }
    const posort::Dag g = spec.build();

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw posort::BadParams("cannot open '" + out_path + "'");
        out = &file;
    }
    *out << "# kind=" << kind << " seed=" << seed << '\n';
    posort::write_edge_list(*out, g);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sorting under partial information given as a DAG"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph instance");
    std::string gen_kind;
    int gen_n = 8;
    double gen_p = 0.5;
    int gen_t = 0;
    std::vector<int> gen_widths;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    gen->add_option("--kind", gen_kind, "gnp|layered|path_plus_isolated|chain_of_antichains")
        ->required();
    gen->add_option("--n", gen_n, "vertex count");
    gen->add_option("--p", gen_p, "edge probability");
    gen->add_option("--t", gen_t, "isolated vertex count (path_plus_isolated)");
    gen->add_option("--widths", gen_widths, "layer/block widths")->delimiter(',');
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("--out", gen_out, "output file (default stdout)");

    // sort
    auto* sort_cmd = app.add_subcommand("sort", "sort one instance and report");
    posort::SortCommand sort_config;
    std::string sort_oracle;
    std::uint64_t sort_seed = 0;
    bool have_seed = false;
    sort_cmd->add_option("graph", sort_config.graph_file, "edge-list file")
        ->required();
    sort_cmd->add_option("--oracle", sort_oracle, "permutation file");
    auto* seed_opt = sort_cmd->add_option("--random-extension", sort_seed,
                                          "sample a random extension with this seed");
    sort_cmd->add_flag("--trace", sort_config.options.trace, "include per-insert records");
    sort_cmd->add_flag("--check", sort_config.options.check, "run the per-run checks");
    sort_cmd->add_flag("--baselines", sort_config.options.baselines,
                       "also run the baseline sorters");

    // bench
    auto* bench = app.add_subcommand("bench", "randomized verification sweep");
    posort::BenchCommand bench_config;
    std::string bench_out;
    bench->add_option("--instances", bench_config.instances, "instance count");
    bench->add_option("--max-n", bench_config.max_n, "maximum vertex count");
    bench->add_option("--seed", bench_config.seed, "master seed");
    bench->add_option("--out", bench_out, "report file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return cmd_gen(gen_kind, gen_n, gen_p, gen_t, gen_widths, gen_seed,
                           gen_out);
        if (sort_cmd->parsed()) {
            have_seed = seed_opt->count() > 0;
            if (!sort_oracle.empty()) sort_config.oracle_file = sort_oracle;
            if (have_seed) sort_config.random_extension_seed = sort_seed;
            return posort::run_sort_command(sort_config, std::cout, std::cerr);
        }
        if (bench->parsed()) {
            if (!bench_out.empty()) {
                std::ofstream file(bench_out);
                if (!file) {
                    std::cerr << "error: cannot open '" << bench_out << "'\n";
                    return 2;
                }
                const int rc = posort::run_bench_command(bench_config, file);
                std::cout << (rc == 0 ? "bench passed\n" : "bench FAILED\n");
                return rc;
            }
            return posort::run_bench_command(bench_config, std::cout);
        }
        return 2;
    } catch (const posort::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
