#include "satlab/decomposition.hpp"

#include "satlab/clique.hpp"
#include "satlab/errors.hpp"
#include "satlab/saturation.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace satlab {

namespace {

    std::vector<Triangle> all_triangles(const Graph& g)
    {
        std::vector<Triangle> out;
        const int n = g.vertex_count();
        const int words = g.words_per_row();
        std::vector<std::uint64_t> common(words);
        for (int u = 0; u < n; ++u) {
            auto ru = g.row(u);
            for (int v = u + 1; v < n; ++v) {
                if (!(ru[v / 64] & (std::uint64_t{1} << (v % 64))))
                    continue;
                auto rv = g.row(v);
                for (int i = v / 64; i < words; ++i) {
                    std::uint64_t m = ru[i] & rv[i];
                    if (i == v / 64)
                        m &= ~((std::uint64_t{2} << (v % 64)) - 1);
                    while (m) {
                        const int w = i * 64 + std::countr_zero(m);
                        m &= m - 1;
                        out.push_back({u, v, w});
                    }
                }
            }
        }
        return out;
    }

    // Upper bound on the number of disjoint triangles among `cand`: a greedy
    // hitting set. Every triangle contains a picked vertex and each picked
    // vertex meets at most one packing triangle, so #picks bounds the packing.
    int greedy_hitting_bound(const std::vector<Triangle>& tris, const std::vector<int>& cand,
        std::vector<int>& cnt, std::vector<char>& alive)
    {
        for (int idx : cand)
            alive[idx] = 1;
        int remaining = static_cast<int>(cand.size());
        int picks = 0;
        while (remaining > 0) {
            for (int idx : cand)
                if (alive[idx])
                    for (int x : tris[idx])
                        ++cnt[x];
            int best = -1;
            int best_cnt = 0;
            for (int idx : cand)
                if (alive[idx])
                    for (int x : tris[idx])
                        if (cnt[x] > best_cnt || (cnt[x] == best_cnt && best >= 0 && x < best)) {
                            best = x;
                            best_cnt = cnt[x];
                        }
            for (int idx : cand)
                if (alive[idx])
                    for (int x : tris[idx])
                        cnt[x] = 0;
            ++picks;
            for (int idx : cand)
                if (alive[idx] && (tris[idx][0] == best || tris[idx][1] == best || tris[idx][2] == best)) {
                    alive[idx] = 0;
                    --remaining;
                }
        }
        for (int idx : cand)
            alive[idx] = 0;
        return picks;
    }

    struct PackingSearch {
        const Graph& g;
        std::vector<Triangle> tris;
        std::uint64_t nodes = 0;
        std::uint64_t budget = 0;
        std::vector<int> cnt;     // scratch for the hitting bound
        std::vector<char> alive;  // scratch for the hitting bound

        PackingSearch(const Graph& graph, std::uint64_t node_budget)
            : g(graph), tris(all_triangles(graph)), budget(node_budget)
            , cnt(graph.vertex_count(), 0), alive(tris.size(), 0)
        {
        }

        void tick()
        {
            if (++nodes > budget)
                throw PackingBudgetError("triangle packing search gave up after "
                    + std::to_string(budget) + " nodes; raise node_budget");
        }

        // Vertex covering the fewest candidate triangles (ties: smallest id).
        int branch_vertex(const std::vector<int>& cand)
        {
            for (int idx : cand)
                for (int x : tris[idx])
                    ++cnt[x];
            int best = -1;
            for (int idx : cand)
                for (int x : tris[idx])
                    if (best < 0 || cnt[x] < cnt[best] || (cnt[x] == cnt[best] && x < best))
                        best = x;
            for (int idx : cand)
                for (int x : tris[idx])
                    cnt[x] = 0;
            return best;
        }

        // Largest packing size reachable from this node; `target` <= 0 means
        // exhaustive, otherwise stop early once target is reached.
        int search(const std::vector<int>& cand, int chosen, int best_known, int target)
        {
            tick();
            if (cand.empty())
                return chosen;
            const int ub = chosen + greedy_hitting_bound(tris, cand, cnt, alive);
            if (target > 0 && ub < target)
                return chosen;
            if (target <= 0 && ub <= best_known)
                return best_known; // cannot improve
            const int v = branch_vertex(cand);
            int best = chosen;
            // branches: each candidate triangle through v, then "v unused"
            for (int idx : cand) {
                const auto& t = tris[idx];
                if (t[0] != v && t[1] != v && t[2] != v)
                    continue;
                std::vector<int> next;
                next.reserve(cand.size());
                for (int other : cand) {
                    const auto& o = tris[other];
                    bool clash = false;
                    for (int x : o)
                        clash = clash || x == t[0] || x == t[1] || x == t[2];
                    if (!clash)
                        next.push_back(other);
                }
                int got = search(next, chosen + 1, std::max(best, best_known), target);
                best = std::max(best, got);
                if (target > 0 && best >= target)
                    return best;
            }
            std::vector<int> without;
            without.reserve(cand.size());
            for (int other : cand) {
                const auto& o = tris[other];
                if (o[0] != v && o[1] != v && o[2] != v)
                    without.push_back(other);
            }
            int got = search(without, chosen, std::max(best, best_known), target);
            best = std::max(best, got);
            return best;
        }
    };

    bool disjoint(const Triangle& a, const Triangle& b)
    {
        for (int x : a)
            for (int y : b)
                if (x == y)
                    return false;
        return true;
    }

    // Lexicographically least triangle avoiding `used`.
    std::optional<Triangle> least_triangle(const Graph& g, const VertexSet& used)
    {
        const int n = g.vertex_count();
        const int words = g.words_per_row();
        for (int u = 0; u < n; ++u) {
            if (used.test(u))
                continue;
            auto ru = g.row(u);
            for (int v = u + 1; v < n; ++v) {
                if (used.test(v) || !(ru[v / 64] & (std::uint64_t{1} << (v % 64))))
                    continue;
                auto rv = g.row(v);
                for (int i = v / 64; i < words; ++i) {
                    std::uint64_t m = ru[i] & rv[i];
                    if (i == v / 64)
                        m &= ~((std::uint64_t{2} << (v % 64)) - 1);
                    while (m) {
                        const int w = i * 64 + std::countr_zero(m);
                        m &= m - 1;
                        if (!used.test(w))
                            return Triangle{u, v, w};
                    }
                }
            }
        }
        return std::nullopt;
    }

    TrianglePacking greedy_packing(const Graph& g)
    {
        TrianglePacking p;
        VertexSet used(g.vertex_count());
        while (auto t = least_triangle(g, used)) {
            p.triangles.push_back(*t);
            for (int x : *t)
                used.set(x);
        }
        return p;
    }

    void local_search(const Graph& g, TrianglePacking& p)
    {
        bool improved = true;
        int passes = 0;
        while (improved && passes < 50) {
            improved = false;
            ++passes;
            for (std::size_t i = 0; i < p.triangles.size() && !improved; ++i) {
                VertexSet used(g.vertex_count());
                for (std::size_t j = 0; j < p.triangles.size(); ++j)
                    if (j != i)
                        for (int x : p.triangles[j])
                            used.set(x);
                auto t1 = least_triangle(g, used);
                if (!t1)
                    continue;
                VertexSet used2 = used;
                for (int x : *t1)
                    used2.set(x);
                auto t2 = least_triangle(g, used2);
                if (!t2)
                    continue;
                p.triangles.erase(p.triangles.begin() + static_cast<std::ptrdiff_t>(i));
                p.triangles.push_back(*t1);
                p.triangles.push_back(*t2);
                std::sort(p.triangles.begin(), p.triangles.end());
                improved = true;
            }
        }
    }

    void validate_packing(const Graph& g, const TrianglePacking& p)
    {
        VertexSet used(g.vertex_count());
        for (const auto& t : p.triangles) {
            if (!(t[0] < t[1] && t[1] < t[2]))
                throw std::invalid_argument("packing triangles must list ascending vertices");
            for (int x : t) {
                if (x < 0 || x >= g.vertex_count())
                    throw std::invalid_argument("packing vertex out of range");
                if (used.test(x))
                    throw std::invalid_argument("packing triangles are not vertex-disjoint");
                used.set(x);
            }
            if (!g.adjacent(t[0], t[1]) || !g.adjacent(t[1], t[2]) || !g.adjacent(t[0], t[2]))
                throw std::invalid_argument("packing entry is not a triangle of the graph");
        }
    }

    VertexSet packed_vertices(const Graph& g, const TrianglePacking& p)
    {
        VertexSet used(g.vertex_count());
        for (const auto& t : p.triangles)
            for (int x : t)
                used.set(x);
        return used;
    }

    long long edges_within(const Graph& g, const VertexSet& mask)
    {
        long long total = 0;
        auto mw = mask.words();
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (!mask.test(v))
                continue;
            auto rv = g.row(v);
            for (std::size_t i = 0; i < mw.size(); ++i)
                total += std::popcount(rv[i] & mw[i]);
        }
        return total / 2;
    }

} // namespace

TrianglePacking max_triangle_packing(const Graph& g, const PackingOptions& opts)
{
    if (!contains_triangle(g))
        return {.triangles = {}, .exact = true};

    if (g.vertex_count() > opts.exact_limit) {
        TrianglePacking p = greedy_packing(g);
        local_search(g, p);
        std::sort(p.triangles.begin(), p.triangles.end());
        p.exact = false;
        return p;
    }

    PackingSearch search(g, opts.node_budget);
    std::vector<int> all(search.tris.size());
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = static_cast<int>(i);

    const int greedy_size = static_cast<int>(greedy_packing(g).triangles.size());
    const int k = search.search(all, 0, greedy_size - 1, 0);

    // lexicographic extraction: repeatedly commit the least triangle that
    // still extends to a maximum packing
    TrianglePacking out;
    out.exact = true;
    std::vector<int> cand = all;
    for (int slot = 0; slot < k; ++slot) {
        const int need = k - slot - 1;
        for (int idx : cand) {
            const auto& t = search.tris[idx];
            std::vector<int> next;
            next.reserve(cand.size());
            for (int other : cand)
                if (disjoint(search.tris[other], t))
                    next.push_back(other);
            const bool ok = need == 0
                || search.search(next, 0, need - 1, need) >= need;
            if (ok) {
                out.triangles.push_back(t);
                cand = std::move(next);
                break;
            }
        }
    }
    if (static_cast<int>(out.triangles.size()) != k)
        throw std::logic_error("lexicographic packing extraction failed");
    return out;
}

DecompositionReport decompose(const Graph& g, const TrianglePacking& packing)
{
    validate_packing(g, packing);
    DecompositionReport rep;
    rep.n = g.vertex_count();
    rep.packing_size = static_cast<int>(packing.triangles.size());
    rep.t = rep.n > 0 ? Rational(BigInt(rep.packing_size), BigInt(rep.n)) : Rational(0);

    VertexSet vt = packed_vertices(g, packing);
    VertexSet gprime = VertexSet::all(rep.n) - vt;
    rep.e_t = edges_within(g, vt);
    rep.e_gprime = edges_within(g, gprime);

    // cascade degrees: edges from T_i to everything after T_1..T_i
    VertexSet removed(rep.n);
    for (const auto& t : packing.triangles) {
        for (int x : t)
            removed.set(x);
        long long ti = 0;
        auto rw = removed.words();
        for (int x : t) {
            auto r = g.row(x);
            for (std::size_t i = 0; i < rw.size(); ++i)
                ti += std::popcount(r[i] & ~rw[i]);
        }
        rep.t_i.push_back(ti);
    }

    auto report = classify_nonedges(g, 4);
    for (const auto& pv : *report.classified) {
        if (!pv.saturating)
            continue;
        if (vt.test(pv.u) || vt.test(pv.v))
            ++rep.r1_count;
        else
            ++rep.r2_count;
    }
    return rep;
}

TriangleAnalysis analyze_triangle(const Graph& g, const TrianglePacking& packing, int which)
{
    validate_packing(g, packing);
    if (which < 0 || which >= static_cast<int>(packing.triangles.size()))
        throw std::invalid_argument("triangle index out of range");

    const int n = g.vertex_count();
    TriangleAnalysis an;
    an.t = packing.triangles[which];
    const auto [x, y, z] = an.t;

    VertexSet vt = packed_vertices(g, packing);
    VertexSet gprime = VertexSet::all(n) - vt;

    an.n0 = VertexSet(n);
    an.n1 = VertexSet(n);
    an.n2 = VertexSet(n);
    gprime.for_each([&](int v) {
        const int d = (g.adjacent(v, x) ? 1 : 0) + (g.adjacent(v, y) ? 1 : 0) + (g.adjacent(v, z) ? 1 : 0);
        if (d == 3)
            throw std::invalid_argument("graph is not K4-free: contains clique {"
                + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ","
                + std::to_string(v) + "}");
        if (d == 0)
            an.n0.set(v);
        else if (d == 1)
            an.n1.set(v);
        else
            an.n2.set(v);
    });
    an.p0 = Rational(BigInt(an.n0.count()), BigInt(n));
    an.p1 = Rational(BigInt(an.n1.count()), BigInt(n));
    an.p2 = Rational(BigInt(an.n2.count()), BigInt(n));

    an.a = g.neighbors(x) & g.neighbors(y) & gprime;
    an.b = g.neighbors(y) & g.neighbors(z) & gprime;
    an.c = g.neighbors(x) & g.neighbors(z) & gprime;
    an.nx = g.neighbors(x) & gprime;
    an.ny = g.neighbors(y) & gprime;
    an.nz = g.neighbors(z) & gprime;

    const int n2 = an.n2.count();
    if (n2 > 0) {
        an.ra = Rational(BigInt(an.a.count()), BigInt(n2));
        an.rb = Rational(BigInt(an.b.count()), BigInt(n2));
        an.rc = Rational(BigInt(an.c.count()), BigInt(n2));
    }
    an.joint_book_k = (an.a.empty() ? 0 : 1) + (an.b.empty() ? 0 : 1) + (an.c.empty() ? 0 : 1);
    return an;
}

int select_best_triangle(const Graph& g, const TrianglePacking& packing)
{
    validate_packing(g, packing);
    if (packing.triangles.empty())
        throw std::invalid_argument("packing is empty");
    VertexSet gprime = VertexSet::all(g.vertex_count()) - packed_vertices(g, packing);
    auto gw = gprime.words();
    int best = 0;
    long long best_edges = -1;
    for (std::size_t i = 0; i < packing.triangles.size(); ++i) {
        long long e = 0;
        for (int x : packing.triangles[i]) {
            auto r = g.row(x);
            for (std::size_t j = 0; j < gw.size(); ++j)
                e += std::popcount(r[j] & gw[j]);
        }
        if (e > best_edges) {
            best_edges = e;
            best = static_cast<int>(i);
        }
    }
    return best;
}

namespace {

    LemmaAudit make_audit(std::string name, Rational left, Rational right)
    {
        LemmaAudit a;
        a.name = std::move(name);
        a.left = std::move(left);
        a.right = std::move(right);
        a.slack = a.left - a.right;
        a.holds = a.slack >= Rational(0);
        return a;
    }

} // namespace

namespace {

    void check_audit_preconditions(const Graph& g)
    {
        const int n = g.vertex_count();
        if (n == 0)
            throw std::invalid_argument("audit needs a non-empty graph");
        if (auto k4 = find_k4(g)) {
            std::vector<int> sorted(k4->begin(), k4->end());
            std::sort(sorted.begin(), sorted.end());
            throw std::invalid_argument("graph is not K4-free: contains clique {"
                + std::to_string(sorted[0]) + "," + std::to_string(sorted[1]) + ","
                + std::to_string(sorted[2]) + "," + std::to_string(sorted[3]) + "}");
        }
        const long long quarter = static_cast<long long>(n) * n / 4;
        if (g.edge_count() != quarter)
            throw std::invalid_argument("audit requires e(G) = floor(n^2/4) = "
                + std::to_string(quarter) + ", got e = " + std::to_string(g.edge_count()));
        if (!contains_triangle(g))
            throw std::invalid_argument("graph contains no triangle");
    }

} // namespace

AuditReport audit_report(const Graph& g, const TrianglePacking& packing)
{
    const int n = g.vertex_count();
    check_audit_preconditions(g);
    if (!packing.exact)
        throw std::invalid_argument("audits require an exact (maximum) packing");

    AuditReport rep;
    rep.decomposition = decompose(g, packing);
    rep.selected = select_best_triangle(g, packing);
    rep.analysis = analyze_triangle(g, packing, rep.selected);

    const auto& d = rep.decomposition;
    const Rational t = d.t;
    const Rational nn{BigInt(n) * BigInt(n)};
    const Rational nr{BigInt(n)};
    const Rational r1{BigInt(d.r1_count)};
    const Rational r2{BigInt(d.r2_count)};
    const Rational egp{BigInt(d.e_gprime)};
    const Rational eg{BigInt(g.edge_count())};
    const BigInt tn(d.packing_size);

    // These bounds are usually quoted with e(G) = n^2/4 exactly; for odd n
    // that form overstates the provable count by exactly 1/4, so each audit
    // instantiates the underlying counting argument with e(G) itself. For
    // even n the two forms coincide.

    // L1: r1 n^2 >= (e(G) - e(G') - 3tn) - (t n^2 - 3 tn (tn+1)/2)
    //            =  (1/4 - t + 3t^2/2) n^2 - e(G') - (3/2) t n  when e = n^2/4
    rep.audits.push_back(make_audit("L1",
        r1, eg - egp - Rational(3 * tn) - t * nn + Rational(3 * tn * (tn + 1), 2)));

    // L2(i): e(T, G') >= (e(G) - (1-3t)^2 n^2 / 4 - 3 t^2 n^2) / (tn)
    //                 =  (3/2 - 21t/4) n  when e = n^2/4
    const Rational residual = rat(1) - rat(3) * t; // (1 - 3t)
    const Rational l2i_bound = (eg - residual * residual * nn / rat(4) - rat(3) * t * t * nn)
        / Rational(tn);
    const long long etg = rep.analysis.nx.count() + rep.analysis.ny.count() + rep.analysis.nz.count();
    rep.audits.push_back(make_audit("L2i", Rational(BigInt(etg)), l2i_bound));

    // L2(ii): p2 >= bound(L2i)/n - (1 - 3t) + p0   (= 1/2 - 9t/4 + p0 at e = n^2/4)
    rep.audits.push_back(make_audit("L2ii", rep.analysis.p2,
        l2i_bound / nr - residual + rep.analysis.p0));

    if (rep.analysis.joint_book_k == 3) {
        // L3: r2 n^2 >= (1/6) B^2 - e(comp G') - (1-3t) n with B the L2(i) bound
        const BigInt gp_n = BigInt(n) - 3 * tn;
        const Rational comp_edges = Rational(gp_n * (gp_n - 1), 2) - egp;
        rep.audits.push_back(make_audit("L3", r2,
            rat(1, 6) * l2i_bound * l2i_bound - comp_edges - residual * nr));
    } else {
        // Eq. (1): pairs inside A, B, C are saturating and live in G'
        const Rational rhs = binom2(BigInt(rep.analysis.a.count()))
            + binom2(BigInt(rep.analysis.b.count())) + binom2(BigInt(rep.analysis.c.count()));
        rep.audits.push_back(make_audit("Eq1", r2, rhs));
    }

    // final bound: f(G) >= 2n^2/33 - 3n/11
    rep.audits.push_back(make_audit("Thm2", r1 + r2,
        rat(2, 33) * nn - rat(3, 11) * nr));
    return rep;
}

AuditReport audit_report(const Graph& g, const PackingOptions& opts)
{
    check_audit_preconditions(g);
    if (g.vertex_count() > opts.exact_limit)
        throw std::invalid_argument("n = " + std::to_string(g.vertex_count())
            + " exceeds exact packing limit " + std::to_string(opts.exact_limit)
            + "; supply an exact packing or raise exact_limit");
    return audit_report(g, max_triangle_packing(g, opts));
}

std::vector<LemmaAudit> audit_lemmas(const Graph& g, const TrianglePacking& packing)
{
    return audit_report(g, packing).audits;
}

std::vector<LemmaAudit> audit_lemmas(const Graph& g, const PackingOptions& opts)
{
    return audit_report(g, opts).audits;
}

Graph reduce_preserving_triangle(const Graph& g)
{
    if (!contains_triangle(g))
        throw std::invalid_argument("graph contains no triangle");
    for (auto [u, v] : g.edges()) {
        Graph h = g.without_edge(u, v);
        if (contains_triangle(h))
            return h;
    }
    throw std::invalid_argument("no removable edge: every edge removal destroys all triangles");
}

} // namespace satlab
