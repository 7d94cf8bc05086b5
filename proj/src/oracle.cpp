#include "posort/oracle.hpp"

#include <istream>
#include <ostream>
#include <string>

#include "posort/errors.hpp"
#include "posort/rng.hpp"

namespace posort {

LinearOracle LinearOracle::from_permutation(std::vector<int> ranks) {
    const int n = static_cast<int>(ranks.size());
    std::vector<char> seen(n, 0);
    for (int r : ranks) {
        if (r < 0 || r >= n || seen[r])
            throw InvalidPermutation("ranks are not a bijection onto 0.." +
                                     std::to_string(n - 1));
        seen[r] = 1;
    }
    LinearOracle o;
    o.rank_ = std::move(ranks);
    return o;
}

LinearOracle LinearOracle::from_permutation(std::vector<int> ranks, const Dag& g) {
    if (static_cast<int>(ranks.size()) != g.n)
        throw InvalidPermutation("permutation size does not match vertex count");
    LinearOracle o = from_permutation(std::move(ranks));
    for (int u = 0; u < g.n; ++u)
        for (int v : g.out_adj[u])
            if (o.rank_[u] >= o.rank_[v])
                throw NotAnExtension("edge " + std::to_string(u) + " -> " +
                                     std::to_string(v) + " violated by the order");
    return o;
}

bool LinearOracle::precedes(int x, int y) {
    if (x == y) throw SameElement("comparison of an element with itself");
    if (x < 0 || y < 0 || x >= size() || y >= size())
        throw VertexOutOfRange("oracle query outside the ground set");
    ++queries_;
    return rank_[x] < rank_[y];
}

int LinearOracle::rank_of(int v) const {
    if (v < 0 || v >= size())
        throw VertexOutOfRange("rank lookup outside the ground set");
    return rank_[v];
}

LinearOracle sample_extension(const Dag& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<int> indeg(g.n);
    std::vector<int> pool;  // current sources, order irrelevant
    for (int v = 0; v < g.n; ++v) {
        indeg[v] = static_cast<int>(g.in_adj[v].size());
        if (indeg[v] == 0) pool.push_back(v);
    }
    std::vector<int> rank(g.n, -1);
    for (int pos = 0; pos < g.n; ++pos) {
        const auto pick = static_cast<std::size_t>(bounded(rng, pool.size()));
        const int v = pool[pick];
        pool[pick] = pool.back();
        pool.pop_back();
        rank[v] = pos;
        for (int w : g.out_adj[v])
            if (--indeg[w] == 0) pool.push_back(w);
    }
    return LinearOracle::from_permutation(std::move(rank), g);
}

std::vector<int> read_permutation(std::istream& in) {
    std::vector<int> ranks;
    std::string token;
    while (in >> token) {
        try {
            std::size_t used = 0;
            const int r = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            ranks.push_back(r);
        } catch (const std::exception&) {
            throw ParseError("bad rank token: '" + token + "'");
        }
    }
    return ranks;
}

void write_permutation(std::ostream& out, const LinearOracle& oracle) {
    for (int v = 0; v < oracle.size(); ++v) out << oracle.rank_of(v) << '\n';
}

}  // namespace posort
