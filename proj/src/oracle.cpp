#include "satlab/oracle.hpp"

#include "satlab/saturation.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace satlab {

namespace {

    void check_cap(int n)
    {
        if (n < 0 || n > kOracleMaxVertices)
            throw std::invalid_argument("oracle supports 0 <= n <= "
                + std::to_string(kOracleMaxVertices) + ", got " + std::to_string(n));
    }

    // column-order position of pair (i,j), i < j: (0,1),(0,2),(1,2),(0,3),...
    constexpr int pair_position(int i, int j) { return j * (j - 1) / 2 + i; }

    // Adjacency of a small labeled graph as one row mask per vertex.
    struct SmallGraph {
        int n = 0;
        std::array<std::uint16_t, 9> row{};

        bool adjacent(int i, int j) const { return row[i] >> j & 1; }
        void add(int i, int j)
        {
            row[i] |= std::uint16_t(1 << j);
            row[j] |= std::uint16_t(1 << i);
        }
        void remove(int i, int j)
        {
            row[i] &= std::uint16_t(~(1 << j));
            row[j] &= std::uint16_t(~(1 << i));
        }

        // Would adding ij close a K4? True iff N(i) ∩ N(j) spans an edge.
        bool edge_creates_k4(int i, int j) const
        {
            std::uint16_t common = row[i] & row[j];
            for (std::uint16_t m = common; m;) {
                const int w = std::countr_zero(m);
                m &= std::uint16_t(m - 1);
                if (row[w] & common)
                    return true;
            }
            return false;
        }

        std::uint64_t bitstring() const
        {
            const int bits = n * (n - 1) / 2;
            std::uint64_t s = 0;
            for (int j = 1; j < n; ++j)
                for (int i = 0; i < j; ++i)
                    if (adjacent(i, j))
                        s |= std::uint64_t{1} << (bits - 1 - pair_position(i, j));
            return s;
        }

        Graph to_graph() const
        {
            GraphBuilder b(n);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (adjacent(i, j))
                        b.add_edge(i, j);
            return b.build();
        }

        static SmallGraph from_graph(const Graph& g)
        {
            SmallGraph s;
            s.n = g.vertex_count();
            for (int i = 0; i < s.n; ++i)
                for (int j = i + 1; j < s.n; ++j)
                    if (g.adjacent(i, j))
                        s.add(i, j);
            return s;
        }
    };

    // Is the identity labeling the maximum-bitstring representative? Columns
    // are compared position by position so any relabeling that could beat the
    // identity is found (or ruled out) without enumerating all n! orders.
    struct CanonicityCheck {
        const SmallGraph& g;
        std::array<std::uint8_t, 9> gcol{}; // g's column d as bits over i<d
        std::array<int, 9> placed{};
        std::array<bool, 9> used{};

        explicit CanonicityCheck(const SmallGraph& graph) : g(graph)
        {
            for (int d = 0; d < g.n; ++d) {
                std::uint8_t col = 0;
                for (int i = 0; i < d; ++i)
                    if (g.adjacent(i, d))
                        col |= std::uint8_t(1 << i);
                gcol[d] = col;
            }
        }

        // true iff some permutation yields a strictly larger bitstring
        bool larger_exists(int depth)
        {
            if (depth == g.n)
                return false; // automorphism
            for (int v = 0; v < g.n; ++v) {
                if (used[v])
                    continue;
                int cmp = 0; // -1 smaller, 0 equal so far, +1 larger
                for (int i = 0; i < depth; ++i) {
                    const int bit = g.adjacent(placed[i], v) ? 1 : 0;
                    const int gbit = gcol[depth] >> i & 1;
                    if (bit != gbit) {
                        cmp = bit > gbit ? 1 : -1;
                        break;
                    }
                }
                if (cmp > 0)
                    return true;
                if (cmp < 0)
                    continue;
                used[v] = true;
                placed[depth] = v;
                if (larger_exists(depth + 1))
                    return true;
                used[v] = false;
            }
            return false;
        }
    };

    bool is_canonical(const SmallGraph& g)
    {
        CanonicityCheck check(g);
        return !check.larger_exists(0);
    }

    // Stable degree-refinement coloring; cell order is determined by the
    // (isomorphism-invariant) sorted signatures.
    std::vector<int> refine_colors(const SmallGraph& g)
    {
        std::vector<int> color(g.n, 0);
        int classes = 1;
        for (int round = 0; round < g.n; ++round) {
            // signature: own color + sorted neighbor colors
            std::vector<std::vector<int>> sig(g.n);
            for (int v = 0; v < g.n; ++v) {
                sig[v].push_back(color[v]);
                std::vector<int> nb;
                for (int u = 0; u < g.n; ++u)
                    if (g.adjacent(u, v))
                        nb.push_back(color[u]);
                std::sort(nb.begin(), nb.end());
                sig[v].insert(sig[v].end(), nb.begin(), nb.end());
            }
            std::vector<std::vector<int>> uniq(sig.begin(), sig.end());
            std::sort(uniq.begin(), uniq.end());
            uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
            for (int v = 0; v < g.n; ++v)
                color[v] = static_cast<int>(
                    std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
            if (static_cast<int>(uniq.size()) == classes)
                break;
            classes = static_cast<int>(uniq.size());
        }
        return color;
    }

} // namespace

std::string canonical_form(const Graph& g)
{
    check_cap(g.vertex_count());
    SmallGraph s = SmallGraph::from_graph(g);
    auto color = refine_colors(s);

    // cells in color order; relabelings permute within cells only
    std::vector<std::vector<int>> cells;
    const int classes = color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
    cells.resize(classes);
    for (int v = 0; v < s.n; ++v)
        cells[color[v]].push_back(v);

    std::vector<int> perm; // position -> original vertex
    perm.reserve(s.n);
    for (auto& cell : cells)
        for (int v : cell)
            perm.push_back(v);

    std::uint64_t best = 0;
    bool first = true;
    // iterate the product of within-cell permutations
    std::vector<std::size_t> starts;
    std::size_t at = 0;
    for (auto& cell : cells) {
        starts.push_back(at);
        at += cell.size();
    }
    auto evaluate = [&]() {
        SmallGraph relabeled;
        relabeled.n = s.n;
        for (int a = 0; a < s.n; ++a)
            for (int b = a + 1; b < s.n; ++b)
                if (s.adjacent(perm[a], perm[b]))
                    relabeled.add(a, b);
        const std::uint64_t str = relabeled.bitstring();
        if (first || str > best) {
            best = str;
            first = false;
        }
    };
    // odometer over cells, each cell running through its permutations
    std::function<void(std::size_t)> rec = [&](std::size_t cell_idx) {
        if (cell_idx == cells.size()) {
            evaluate();
            return;
        }
        auto begin = perm.begin() + static_cast<std::ptrdiff_t>(starts[cell_idx]);
        auto end = begin + static_cast<std::ptrdiff_t>(cells[cell_idx].size());
        std::sort(begin, end);
        do {
            rec(cell_idx + 1);
        } while (std::next_permutation(begin, end));
    };
    if (s.n == 0)
        evaluate();
    else
        rec(0);

    std::string out;
    out.push_back(static_cast<char>(s.n));
    for (int shift = 56; shift >= 0; shift -= 8)
        out.push_back(static_cast<char>((best >> shift) & 0xff));
    return out;
}

namespace {

    struct OrderlyEnumerator {
        int n;
        long long target_edges;
        bool prune_k4;
        const std::function<bool(const Graph&)>& visit;
        SmallGraph cur{};
        std::vector<int> path; // edge positions, ascending
        std::vector<int> resume;
        bool stopped = false;
        long long emitted = 0;

        bool run(int last_pos, bool on_prefix)
        {
            if (static_cast<long long>(path.size()) == target_edges) {
                if (!on_prefix) { // on_prefix at a leaf means path == resume
                    ++emitted;
                    if (!visit(cur.to_graph())) {
                        stopped = true;
                        return false;
                    }
                }
                return true;
            }
            const int total = n * (n - 1) / 2;
            for (int pos = last_pos + 1; pos < total; ++pos) {
                bool child_prefix = false;
                if (on_prefix) {
                    const int want = resume[path.size()];
                    if (pos < want)
                        continue; // whole subtree precedes the checkpoint
                    child_prefix = pos == want;
                }
                // invert pos -> (i,j)
                int j = 1;
                while (pair_position(0, j + 1) <= pos)
                    ++j;
                const int i = pos - pair_position(0, j);
                if (prune_k4 && cur.edge_creates_k4(i, j))
                    continue;
                cur.add(i, j);
                if (is_canonical(cur)) {
                    path.push_back(pos);
                    if (!run(pos, child_prefix)) {
                        cur.remove(i, j);
                        return false;
                    }
                    path.pop_back();
                }
                cur.remove(i, j);
            }
            return true;
        }
    };

} // namespace

long long enumerate_k4free(int n, long long e, const std::function<bool(const Graph&)>& visit,
    const EnumerateOptions& opts)
{
    check_cap(n);
    const long long max_e = static_cast<long long>(n) * (n - 1) / 2;
    if (e < 0 || e > max_e)
        return 0;

    OrderlyEnumerator en{n, e, opts.prune_k4, visit, {}, {}, {}, false, 0};
    en.cur.n = n;
    bool on_prefix = false;
    if (opts.resume_after) {
        for (auto [i, j] : *opts.resume_after) {
            if (i > j)
                std::swap(i, j);
            if (i < 0 || j >= n || i == j)
                throw std::invalid_argument("invalid resume edge");
            en.resume.push_back(pair_position(i, j));
        }
        std::sort(en.resume.begin(), en.resume.end());
        if (static_cast<long long>(en.resume.size()) != e)
            throw std::invalid_argument("resume checkpoint must list exactly e edges");
        on_prefix = true;
    }
    en.run(-1, on_prefix);
    return en.emitted;
}

std::vector<Graph> enumerate_k4free_bruteforce(int n, long long e, bool prune_k4)
{
    if (n < 0 || n > 6)
        throw std::invalid_argument("brute-force enumeration supports n <= 6");
    const int total = n * (n - 1) / 2;
    std::vector<Graph> out;
    std::vector<std::string> seen;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << total); ++mask) {
        if (std::popcount(mask) != e)
            continue;
        SmallGraph s;
        s.n = n;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (mask >> pair_position(i, j) & 1)
                    s.add(i, j);
        if (prune_k4) {
            bool has_k4 = false;
            for (int j = 1; j < n && !has_k4; ++j)
                for (int i = 0; i < j && !has_k4; ++i)
                    if (s.adjacent(i, j)) {
                        s.remove(i, j);
                        has_k4 = s.edge_creates_k4(i, j);
                        s.add(i, j);
                    }
            if (has_k4)
                continue;
        }
        Graph g = s.to_graph();
        std::string canon = canonical_form(g);
        if (std::find(seen.begin(), seen.end(), canon) == seen.end()) {
            seen.push_back(canon);
            out.push_back(std::move(g));
        }
    }
    return out;
}

OracleRecord f_table(int n, long long e)
{
    OracleRecord rec;
    rec.n = n;
    rec.e = e;
    bool any = false;
    rec.classes = enumerate_k4free(n, e, [&](const Graph& g) {
        const long long f = count_saturating(g, 4).count;
        if (!any || f < rec.f_min) {
            rec.f_min = f;
            rec.witness = g;
            any = true;
        }
        return true;
    });
    if (!any)
        throw std::invalid_argument("no K4-free graph with n = " + std::to_string(n)
            + " and e = " + std::to_string(e));
    return rec;
}

} // namespace satlab
