#include "posort/dag.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "posort/errors.hpp"

namespace posort {

Dag build_dag(int n, std::span<const std::pair<int, int>> edges) {
    if (n < 0) throw BadParams("vertex count must be nonnegative");
    Dag g;
    g.n = n;
    g.out_adj.assign(n, {});
    g.in_adj.assign(n, {});

    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw VertexOutOfRange("edge (" + std::to_string(u) + ", " +
                                   std::to_string(v) + ") outside 0.." +
                                   std::to_string(n - 1));
        if (u == v) throw SelfLoop("self-loop at vertex " + std::to_string(u));
        g.out_adj[u].push_back(v);
    }
    for (int u = 0; u < n; ++u) {
        auto& out = g.out_adj[u];
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        g.m += static_cast<std::int64_t>(out.size());
        for (int v : out) g.in_adj[v].push_back(u);
    }
    for (auto& in : g.in_adj) std::sort(in.begin(), in.end());

    // Kahn elimination; anything left over sits on a cycle.
    std::vector<int> indeg(n);
    for (int v = 0; v < n; ++v) indeg[v] = static_cast<int>(g.in_adj[v].size());
    std::vector<int> queue;
    queue.reserve(n);
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    std::size_t head = 0;
    while (head < queue.size()) {
        const int u = queue[head++];
        for (int v : g.out_adj[u])
            if (--indeg[v] == 0) queue.push_back(v);
    }
    if (queue.size() != static_cast<std::size_t>(n))
        throw CycleDetected("graph contains a directed cycle");
    return g;
}

LevelData compute_levels(const Dag& g) {
    // Topological order, then a sink-to-source sweep.
    std::vector<int> indeg(g.n);
    for (int v = 0; v < g.n; ++v) indeg[v] = static_cast<int>(g.in_adj[v].size());
    std::vector<int> order;
    order.reserve(g.n);
    for (int v = 0; v < g.n; ++v)
        if (indeg[v] == 0) order.push_back(v);
    for (std::size_t head = 0; head < order.size(); ++head)
        for (int v : g.out_adj[order[head]])
            if (--indeg[v] == 0) order.push_back(v);

    LevelData lv;
    lv.level.assign(g.n, 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int u = *it;
        int best = 0;
        for (int v : g.out_adj[u]) best = std::max(best, lv.level[v]);
        lv.level[u] = best + 1;
        lv.max_level = std::max(lv.max_level, lv.level[u]);
    }
    lv.level_counts.assign(lv.max_level + 1, 0);
    for (int v = 0; v < g.n; ++v) ++lv.level_counts[lv.level[v]];
    return lv;
}

std::vector<int> extract_longest_path(const Dag& g, const LevelData& lv) {
    std::vector<int> path;
    if (g.n == 0) return path;

    int cur = -1;
    for (int v = 0; v < g.n; ++v)
        if (lv.level[v] == lv.max_level) { cur = v; break; }

    path.reserve(lv.max_level);
    path.push_back(cur);
    for (int need = lv.max_level - 1; need >= 1; --need) {
        // out_adj is sorted, so the first matching neighbor is the smallest.
        int next = -1;
        for (int v : g.out_adj[cur])
            if (lv.level[v] == need) { next = v; break; }
        cur = next;
        path.push_back(cur);
    }
    return path;
}

Residual residual_with_sources(const Dag& g, std::span<const int> path) {
    Residual r;
    r.in_residual.assign(g.n, 1);
    r.indegree.assign(g.n, 0);
    for (int v : path) r.in_residual[v] = 0;
    for (int u = 0; u < g.n; ++u) {
        if (!r.in_residual[u]) continue;
        for (int v : g.out_adj[u])
            if (r.in_residual[v]) ++r.indegree[v];
    }
    for (int v = 0; v < g.n; ++v)
        if (r.in_residual[v] && r.indegree[v] == 0) r.sources.push_back(v);
    return r;
}

namespace {

// Next content-bearing line, with '#' comments and blank lines skipped.
bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        const auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        return true;
    }
    return false;
}

}  // namespace

Dag read_edge_list(std::istream& in) {
    std::string line;
    if (!next_data_line(in, line)) throw ParseError("empty edge-list input");
    std::istringstream header(line);
    long long n = 0, m = 0;
    if (!(header >> n >> m) || n < 0 || m < 0)
        throw ParseError("bad header line: expected 'n m'");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(in, line))
            throw ParseError("expected " + std::to_string(m) + " edges, got " +
                             std::to_string(i));
        std::istringstream es(line);
        long long u = 0, v = 0;
        if (!(es >> u >> v))
            throw ParseError("bad edge line: '" + line + "'");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return build_dag(static_cast<int>(n), edges);
}

void write_edge_list(std::ostream& out, const Dag& g) {
    out << g.n << ' ' << g.m << '\n';
    for (int u = 0; u < g.n; ++u)
        for (int v : g.out_adj[u]) out << u << ' ' << v << '\n';
}

}  // namespace posort
