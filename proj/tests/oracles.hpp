#pragma once

// Brute-force reference implementations. They only read the edge list of a
// graph and share no code with the library's solvers.

#include "mopdom/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace oracle {

using mopdom::MopGraph;

inline std::vector<std::vector<bool>> adjacency_matrix(const MopGraph& g)
{
    std::vector<std::vector<bool>> adj(g.n(), std::vector<bool>(g.n(), false));
    for (const auto& e : g.edges())
        adj[e.a][e.b] = adj[e.b][e.a] = true;
    return adj;
}

enum class Kind { double_literal, double_standard, two };

inline bool satisfies(const std::vector<std::vector<bool>>& adj, std::uint64_t mask, Kind kind)
{
    const int n = static_cast<int>(adj.size());
    for (int v = 0; v < n; ++v) {
        const bool in = (mask >> v) & 1U;
        if (in && kind != Kind::double_standard)
            continue;
        int count = in && kind != Kind::two ? 1 : 0;
        for (int w = 0; w < n; ++w)
            if (adj[v][w] && ((mask >> w) & 1U))
                ++count;
        if (count < 2)
            return false;
    }
    return true;
}

struct Best {
    int size = 0;
    std::vector<int> witness;  // lexicographically smallest among minimum sets
};

/// Scans all 2^n subsets. `forbid_deg2` drops subsets containing a degree-2 vertex.
inline std::optional<Best> min_set(const MopGraph& g, Kind kind, bool forbid_deg2 = false)
{
    const auto adj = adjacency_matrix(g);
    const int n = g.n();
    std::uint64_t banned = 0;
    if (forbid_deg2)
        for (int v = 0; v < n; ++v) {
            int d = 0;
            for (int w = 0; w < n; ++w)
                d += adj[v][w] ? 1 : 0;
            if (d == 2)
                banned |= std::uint64_t{1} << v;
        }
    std::optional<Best> best;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (mask & banned)
            continue;
        const int size = __builtin_popcountll(mask);
        if (best && size > best->size)
            continue;
        if (!satisfies(adj, mask, kind))
            continue;
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1U)
                members.push_back(v);
        if (!best || size < best->size || members < best->witness)
            best = Best{size, members};
    }
    return best;
}

inline std::vector<std::vector<int>> floyd_warshall(const MopGraph& g)
{
    const int n = g.n();
    const int inf = n + 1;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int v = 0; v < n; ++v)
        d[v][v] = 0;
    for (const auto& e : g.edges())
        d[e.a][e.b] = d[e.b][e.a] = 1;
    for (int m = 0; m < n; ++m)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (d[i][m] + d[m][j] < d[i][j])
                    d[i][j] = d[i][m] + d[m][j];
    return d;
}

/// C_0 = 1, C_m = sum_{i<m} C_i C_{m-1-i}.
inline std::uint64_t catalan(int m)
{
    std::vector<std::uint64_t> c(m + 1, 0);
    c[0] = 1;
    for (int j = 1; j <= m; ++j)
        for (int i = 0; i < j; ++i)
            c[j] += c[i] * c[j - 1 - i];
    return c[m];
}

/// Bad-vertex count straight from the definition, with Floyd-Warshall distances.
inline int bad_count(const MopGraph& g)
{
    const auto d = floyd_warshall(g);
    std::vector<int> deg2;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 2)
            deg2.push_back(v);
    int k = 0;
    for (std::size_t i = 0; i < deg2.size(); ++i)
        if (d[deg2[i]][deg2[(i + 1) % deg2.size()]] >= 3)
            ++k;
    return k;
}

}  // namespace oracle
