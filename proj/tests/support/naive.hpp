#pragma once

// Reference implementations kept deliberately independent of the library's
// bit-parallel paths: subset enumeration only.

#include "satlab/graph.hpp"

#include <vector>

namespace satlab::testing {

inline bool naive_is_clique(const Graph& g, const std::vector<int>& vs)
{
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.adjacent(vs[i], vs[j]))
                return false;
    return true;
}

inline bool naive_subset_clique(const Graph& g, const std::vector<int>& pool, int k,
    std::size_t from, std::vector<int>& cur)
{
    if (k == 0)
        return naive_is_clique(g, cur);
    for (std::size_t i = from; i < pool.size(); ++i) {
        cur.push_back(pool[i]);
        if (naive_subset_clique(g, pool, k - 1, i + 1, cur))
            return true;
        cur.pop_back();
    }
    return false;
}

/// Does g contain a clique on k vertices? All-subsets check.
inline bool naive_has_clique(const Graph& g, int k)
{
    if (k <= 0)
        return true;
    std::vector<int> pool(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        pool[v] = v;
    std::vector<int> cur;
    return naive_subset_clique(g, pool, k, 0, cur);
}

/// Reference saturating test: enumerate all (r-2)-subsets of the common
/// neighborhood of u and v.
inline bool naive_is_saturating(const Graph& g, int u, int v, int r)
{
    std::vector<int> pool;
    for (int w = 0; w < g.vertex_count(); ++w)
        if (w != u && w != v && g.adjacent(w, u) && g.adjacent(w, v))
            pool.push_back(w);
    if (r - 2 == 0)
        return true;
    std::vector<int> cur;
    return naive_subset_clique(g, pool, r - 2, 0, cur);
}

inline long long naive_count_saturating(const Graph& g, int r)
{
    long long count = 0;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (!g.adjacent(u, v) && naive_is_saturating(g, u, v, r))
                ++count;
    return count;
}

} // namespace satlab::testing
