#include "posort/generators.hpp"

#include <numeric>
#include <string>

#include "posort/errors.hpp"
#include "posort/rng.hpp"

namespace posort {

Dag GraphSpec::build() const { return build_dag(n, edges); }

GraphSpec gen_gnp(int n, double p, std::uint64_t seed) {
    if (n < 0 || p < 0.0 || p > 1.0)
        throw BadParams("gnp requires n >= 0 and p in [0, 1]");
    GraphSpec spec;
    spec.n = n;
    std::mt19937_64 rng(seed);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (uniform01(rng) < p) spec.edges.emplace_back(u, v);
    return spec;
}

GraphSpec gen_layered(std::span<const int> widths, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw BadParams("layered requires p in [0, 1]");
    for (int w : widths)
        if (w <= 0) throw BadParams("layer widths must be positive");
    GraphSpec spec;
    spec.n = std::accumulate(widths.begin(), widths.end(), 0);
    std::mt19937_64 rng(seed);
    int base = 0;
    for (std::size_t layer = 0; layer + 1 < widths.size(); ++layer) {
        const int next_base = base + widths[layer];
        for (int u = base; u < next_base; ++u)
            for (int v = next_base; v < next_base + widths[layer + 1]; ++v)
                if (uniform01(rng) < p) spec.edges.emplace_back(u, v);
        base = next_base;
    }
    return spec;
}

GraphSpec gen_path_plus_isolated(int n, int t) {
    if (n < 0 || t < 0 || t > n)
        throw BadParams("path_plus_isolated requires 0 <= t <= n");
    GraphSpec spec;
    spec.n = n;
    for (int v = 0; v + 1 < n - t; ++v) spec.edges.emplace_back(v, v + 1);
    return spec;
}

GraphSpec gen_chain_of_antichains(std::span<const int> widths) {
    for (int w : widths)
        if (w <= 0) throw BadParams("block widths must be positive");
    GraphSpec spec;
    spec.n = std::accumulate(widths.begin(), widths.end(), 0);
    int base = 0;
    for (std::size_t block = 0; block + 1 < widths.size(); ++block) {
        const int next_base = base + widths[block];
        for (int u = base; u < next_base; ++u)
            for (int v = next_base; v < next_base + widths[block + 1]; ++v)
                spec.edges.emplace_back(u, v);
        base = next_base;
    }
    return spec;
}

}  // namespace posort
