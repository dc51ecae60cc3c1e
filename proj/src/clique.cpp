#include "satlab/clique.hpp"

#include "edge_scanner.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace satlab {

namespace {

    int popcount_words(std::span<const std::uint64_t> w)
    {
        int c = 0;
        for (auto x : w)
            c += std::popcount(x);
        return c;
    }

    // Branch over candidate vertices in ascending order: any k-clique inside
    // `cand` has a least vertex, so restricting to candidates above the chosen
    // vertex is complete and duplicate-free.
    bool clique_rec(const Graph& g, std::vector<std::vector<std::uint64_t>>& scratch, int depth,
        int k, std::vector<int>* witness)
    {
        auto& cand = scratch[depth];
        if (k == 0)
            return true;
        if (popcount_words(cand) < k)
            return false;
        const int words = g.words_per_row();
        auto& next = scratch[depth + 1];
        for (int i = 0; i < words; ++i) {
            std::uint64_t m = cand[i];
            while (m) {
                const int v = i * 64 + std::countr_zero(m);
                m &= m - 1;
                auto rv = g.row(v);
                // candidates strictly above v that are adjacent to v
                for (int j = 0; j < i; ++j)
                    next[j] = 0;
                next[i] = cand[i] & rv[i] & ~((std::uint64_t{2} << (v % 64)) - 1);
                for (int j = i + 1; j < words; ++j)
                    next[j] = cand[j] & rv[j];
                if (witness)
                    witness->push_back(v);
                if (clique_rec(g, scratch, depth + 1, k - 1, witness))
                    return true;
                if (witness)
                    witness->pop_back();
            }
        }
        return false;
    }

    std::vector<int> degeneracy_order(const Graph& g)
    {
        const int n = g.vertex_count();
        std::vector<int> deg(n), pos(n), order;
        order.reserve(n);
        std::vector<char> removed(n, 0);
        for (int v = 0; v < n; ++v)
            deg[v] = g.degree(v);
        for (int step = 0; step < n; ++step) {
            int best = -1;
            for (int v = 0; v < n; ++v)
                if (!removed[v] && (best < 0 || deg[v] < deg[best]))
                    best = v;
            removed[best] = 1;
            order.push_back(best);
            auto r = g.row(best);
            for (int i = 0; i < g.words_per_row(); ++i) {
                std::uint64_t m = r[i];
                while (m) {
                    const int u = i * 64 + std::countr_zero(m);
                    m &= m - 1;
                    if (!removed[u])
                        --deg[u];
                }
            }
        }
        return order;
    }

} // namespace

VertexSet common_neighborhood(const Graph& g, const VertexSet& us)
{
    if (us.capacity() != g.vertex_count())
        throw std::invalid_argument("vertex set capacity does not match graph");
    if (us.empty())
        throw std::invalid_argument("common_neighborhood of an empty set is undefined");
    VertexSet out = VertexSet::all(g.vertex_count());
    us.for_each([&](int v) { out &= g.neighbors(v); });
    return out;
}

bool contains_triangle(const Graph& g)
{
    const int n = g.vertex_count();
    const int words = g.words_per_row();
    for (int u = 0; u < n; ++u) {
        auto ru = g.row(u);
        for (int i = u / 64; i < words; ++i) {
            std::uint64_t m = ru[i];
            if (i == u / 64)
                m &= ~((std::uint64_t{2} << (u % 64)) - 1);
            while (m) {
                const int v = i * 64 + std::countr_zero(m);
                m &= m - 1;
                auto rv = g.row(v);
                for (int j = 0; j < words; ++j)
                    if (ru[j] & rv[j])
                        return true;
            }
        }
    }
    return false;
}

bool clique_in_mask(const Graph& g, std::span<const std::uint64_t> mask, int k,
    std::vector<int>* witness)
{
    if (k <= 0)
        return true;
    const int words = g.words_per_row();
    std::vector<std::vector<std::uint64_t>> scratch(k + 1, std::vector<std::uint64_t>(words, 0));
    for (int i = 0; i < words; ++i)
        scratch[0][i] = mask[i];
    if (witness)
        witness->clear();
    return clique_rec(g, scratch, 0, k, witness);
}

std::optional<std::vector<int>> find_clique(const Graph& g, int k)
{
    const int n = g.vertex_count();
    if (k <= 0)
        return std::vector<int>{};
    if (k == 1)
        return n > 0 ? std::optional<std::vector<int>>(std::vector<int>{0}) : std::nullopt;
    if (k == 4) {
        if (auto k4 = find_k4(g)) {
            std::vector<int> w(k4->begin(), k4->end());
            std::sort(w.begin(), w.end());
            return w;
        }
        return std::nullopt;
    }

    // Greedy-degeneracy order: a k-clique has a first vertex in this order,
    // and its remaining vertices all come later.
    auto order = degeneracy_order(g);
    const int words = g.words_per_row();
    std::vector<std::uint64_t> later_mask(words, 0);
    for (int i = 0; i < words; ++i)
        later_mask[i] = ~std::uint64_t{0};
    if (n % 64 != 0 && words > 0)
        later_mask[words - 1] = (std::uint64_t{1} << (n % 64)) - 1;

    for (int v : order) {
        later_mask[v / 64] &= ~(std::uint64_t{1} << (v % 64));
        auto rv = g.row(v);
        std::vector<std::uint64_t> cand(words);
        for (int i = 0; i < words; ++i)
            cand[i] = rv[i] & later_mask[i];
        std::vector<int> rest;
        if (clique_in_mask(g, cand, k - 1, &rest)) {
            rest.push_back(v);
            std::sort(rest.begin(), rest.end());
            return rest;
        }
    }
    return std::nullopt;
}

bool is_clique_free(const Graph& g, int r)
{
    if (r < 2)
        throw std::invalid_argument("clique order must be at least 2");
    return !find_clique(g, r).has_value();
}

std::optional<std::array<int, 4>> find_k4(const Graph& g)
{
    const int n = g.vertex_count();
    detail::EdgeInCommonScanner scanner(g);
    for (int u = 0; u < n; ++u) {
        if (g.degree(u) < 3)
            continue;
        scanner.prepare(u);
        auto ru = g.row(u);
        for (int i = u / 64; i < g.words_per_row(); ++i) {
            std::uint64_t m = ru[i];
            if (i == u / 64)
                m &= ~((std::uint64_t{2} << (u % 64)) - 1);
            while (m) {
                const int v = i * 64 + std::countr_zero(m);
                m &= m - 1;
                auto [w, x] = scanner.witness_edge(g.row(v).data());
                if (w >= 0)
                    return std::array<int, 4>{u, v, w, x};
            }
        }
    }
    return std::nullopt;
}

} // namespace satlab
