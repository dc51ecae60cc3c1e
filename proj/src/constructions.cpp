#include "satlab/constructions.hpp"

#include "satlab/clique.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace satlab {

Graph c5_with_chord()
{
    return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}});
}

Graph blowup(const BlowupPattern& bp)
{
    const int p = bp.pattern.vertex_count();
    if (static_cast<int>(bp.sizes.size()) != p)
        throw std::invalid_argument("blow-up needs one size per pattern vertex");
    long long n = 0;
    for (int s : bp.sizes) {
        if (s < 0)
            throw std::invalid_argument("part sizes must be non-negative");
        n += s;
    }
    if (n > Graph::max_vertices())
        throw std::invalid_argument("blow-up on " + std::to_string(n) + " vertices exceeds max "
            + std::to_string(Graph::max_vertices()));

    std::vector<int> start(p + 1, 0);
    for (int i = 0; i < p; ++i)
        start[i + 1] = start[i] + bp.sizes[i];

    GraphBuilder b(static_cast<int>(n));
    for (auto [i, j] : bp.pattern.edges())
        for (int a = start[i]; a < start[i + 1]; ++a)
            for (int c = start[j]; c < start[j + 1]; ++c)
                b.add_edge(a, c);
    return b.build();
}

PartClassification classify_parts(const Graph& pattern, const VertexSet& nonempty, int r)
{
    if (nonempty.capacity() != pattern.vertex_count())
        throw std::invalid_argument("support capacity does not match pattern");
    if (r < 2)
        throw std::invalid_argument("clique order must be at least 2");

    const int p = pattern.vertex_count();
    PartClassification out;
    out.r = r;
    out.within = VertexSet(p);

    auto support_words = [&](const VertexSet& s) {
        std::vector<std::uint64_t> w(s.words().begin(), s.words().end());
        return w;
    };

    for (int i = 0; i < p; ++i) {
        if (!nonempty.test(i))
            continue;
        VertexSet mask = pattern.neighbors(i) & nonempty;
        if (clique_in_mask(pattern, support_words(mask), r - 2))
            out.within.set(i);
    }
    for (int i = 0; i < p; ++i) {
        if (!nonempty.test(i))
            continue;
        for (int j = i + 1; j < p; ++j) {
            if (!nonempty.test(j) || pattern.adjacent(i, j))
                continue;
            VertexSet mask = pattern.neighbors(i) & pattern.neighbors(j) & nonempty;
            if (clique_in_mask(pattern, support_words(mask), r - 2))
                out.cross.emplace_back(i, j);
        }
    }
    return out;
}

namespace {
    int h_scale(int n)
    {
        if (n <= 0 || n % 66 != 0)
            throw std::invalid_argument("n must be divisible by 66, got " + std::to_string(n));
        return n / 66;
    }
}

std::array<int, 5> h_part_sizes(int n)
{
    const int m = h_scale(n);
    return {16 * m, 4 * m + 1, 16 * m, 15 * m, 15 * m - 1};
}

std::array<int, 5> h_prime_part_sizes(int n)
{
    const int m = h_scale(n);
    return {16 * m, 4 * m, 16 * m, 15 * m, 15 * m};
}

Graph construct_h(int n)
{
    auto sizes = h_part_sizes(n);
    return blowup({c5_with_chord(), {sizes.begin(), sizes.end()}});
}

Graph construct_h_prime(int n)
{
    auto sizes = h_prime_part_sizes(n);
    return blowup({c5_with_chord(), {sizes.begin(), sizes.end()}});
}

Graph construct_h_minus(int n, int k)
{
    const int m = h_scale(n);
    if (k < 0 || k > m - 1)
        throw std::invalid_argument("k must lie in [0," + std::to_string(m - 1) + "], got "
            + std::to_string(k));
    Graph g = construct_h(n);
    auto sizes = h_part_sizes(n);
    const int v4_start = sizes[0] + sizes[1] + sizes[2];
    const int v5_start = v4_start + sizes[3];
    // V4/V5 pairs are never saturating and no witness K4 uses a V4-V5 edge,
    // so dropping cross edges here leaves the saturating-pair set intact.
    int removed = 0;
    for (int a = v4_start; a < v5_start && removed < k; ++a)
        for (int c = v5_start; c < n && removed < k; ++c) {
            g = g.without_edge(a, c);
            ++removed;
        }
    return g;
}

Graph bollobas_f(int n)
{
    if (n < 4)
        throw std::invalid_argument("bollobas_f needs n >= 4, got " + std::to_string(n));
    GraphBuilder b(n);
    b.add_edge(0, 1);
    for (int v = 2; v < n; ++v) {
        b.add_edge(0, v);
        b.add_edge(1, v);
    }
    return b.build();
}

Graph turan_bipartite(int n)
{
    if (n < 1)
        throw std::invalid_argument("turan_bipartite needs n >= 1");
    const int a = (n + 1) / 2;
    GraphBuilder b(n);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < n; ++v)
            b.add_edge(u, v);
    return b.build();
}

Graph join_pattern(int r)
{
    if (r < 4)
        throw std::invalid_argument("join pattern needs r >= 4, got " + std::to_string(r));
    const int apexes = r - 4;
    const int n = apexes + 5;
    GraphBuilder b(n);
    for (int i = 0; i < apexes; ++i)
        for (int j = i + 1; j < apexes; ++j)
            b.add_edge(i, j);
    for (int i = 0; i < apexes; ++i)
        for (int v = apexes; v < n; ++v)
            b.add_edge(i, v);
    for (auto [u, v] : c5_with_chord().edges())
        b.add_edge(apexes + u, apexes + v);
    return b.build();
}

} // namespace satlab
