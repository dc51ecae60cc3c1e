#include "satlab/saturation.hpp"

#include "satlab/clique.hpp"
#include "satlab/parallel.hpp"

#include "edge_scanner.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace satlab {

namespace {

    std::string clique_to_string(const std::vector<int>& clique)
    {
        std::ostringstream os;
        os << '{';
        for (std::size_t i = 0; i < clique.size(); ++i)
            os << (i ? "," : "") << clique[i];
        os << '}';
        return os.str();
    }

    void require_kr_free(const Graph& g, int r)
    {
        if (r < 2)
            throw std::invalid_argument("clique order must be at least 2");
        std::optional<std::vector<int>> witness;
        if (r == 4) {
            if (auto k4 = find_k4(g)) {
                witness.emplace(k4->begin(), k4->end());
                std::sort(witness->begin(), witness->end());
            }
        } else {
            witness = find_clique(g, r);
        }
        if (witness)
            throw std::invalid_argument("graph is not K" + std::to_string(r)
                + "-free: contains clique " + clique_to_string(*witness));
    }

    // Shared worker loop over sources u (cyclic striping); visit(u, v, sat)
    // is called for every non-edge u < v.
    template <typename Visit>
    void saturating_pass(const Graph& g, int r, int workers, Visit&& visit)
    {
        const int n = g.vertex_count();
        const int words = g.words_per_row();
        const int nthreads = resolve_worker_count(workers);
        std::atomic<bool> clique_found{false};

        std::vector<std::uint64_t> vsigs(n);
        for (int v = 0; v < n; ++v)
            vsigs[v] = detail::EdgeInCommonScanner::word_signature(g.row(v).data(), words);

        auto worker = [&](int tid) {
            detail::EdgeInCommonScanner scanner(g);
            std::vector<std::uint64_t> common(words);
            for (int u = tid; u < n; u += nthreads) {
                if (clique_found.load(std::memory_order_relaxed))
                    return;
                auto ru = g.row(u);
                const bool active = g.degree(u) >= 2;
                if (r == 4 && active)
                    scanner.prepare(u);
                for (int v = u + 1; v < n; ++v) {
                    const bool adj = ru[v / 64] & (std::uint64_t{1} << (v % 64));
                    if (r == 4) {
                        const bool sat = active && scanner.query(g.row(v).data(), vsigs[v]);
                        if (adj) {
                            if (sat) { // K4 through edge uv
                                clique_found.store(true, std::memory_order_relaxed);
                                return;
                            }
                        } else {
                            visit(u, v, sat);
                        }
                    } else {
                        auto rv = g.row(v);
                        for (int i = 0; i < words; ++i)
                            common[i] = ru[i] & rv[i];
                        if (adj) {
                            if (clique_in_mask(g, common, r - 2)) {
                                clique_found.store(true, std::memory_order_relaxed);
                                return;
                            }
                        } else {
                            visit(u, v, clique_in_mask(g, common, r - 2));
                        }
                    }
                }
            }
        };

        if (nthreads == 1) {
            worker(0);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(nthreads);
            for (int t = 0; t < nthreads; ++t)
                pool.emplace_back(worker, t);
            for (auto& th : pool)
                th.join();
        }

        if (clique_found.load()) {
            require_kr_free(g, r); // throws with a deterministic witness
            throw std::logic_error("saturating pass flagged a clique the verifier cannot find");
        }
    }

    SaturationReport run(const Graph& g, int r, int workers, bool classify)
    {
        if (r < 2)
            throw std::invalid_argument("clique order must be at least 2");
        if (r != 4)
            require_kr_free(g, r); // for r=4 freeness is folded into the pass

        const int n = g.vertex_count();
        SaturationReport report;
        report.r = r;
        report.total_nonedges = static_cast<long long>(n) * (n - 1) / 2 - g.edge_count();

        std::vector<long long> per_u(n, 0);
        std::vector<std::vector<PairVerdict>> slots;
        if (classify)
            slots.resize(n);

        saturating_pass(g, r, workers, [&](int u, int v, bool sat) {
            if (sat)
                ++per_u[u];
            if (classify)
                slots[u].push_back({u, v, sat});
        });

        for (int u = 0; u < n; ++u)
            report.count += per_u[u];
        if (classify) {
            std::vector<PairVerdict> flat;
            flat.reserve(static_cast<std::size_t>(report.total_nonedges));
            for (auto& s : slots)
                flat.insert(flat.end(), s.begin(), s.end());
            report.classified = std::move(flat);
        }
        return report;
    }

} // namespace

bool is_saturating_pair(const Graph& g, int u, int v, int r)
{
    if (u == v)
        throw std::invalid_argument("pair endpoints must differ");
    if (g.adjacent(u, v))
        throw std::invalid_argument(
            "(" + std::to_string(u) + "," + std::to_string(v) + ") is already an edge");
    require_kr_free(g, r);
    const int words = g.words_per_row();
    auto ru = g.row(u);
    auto rv = g.row(v);
    std::vector<std::uint64_t> common(words);
    for (int i = 0; i < words; ++i)
        common[i] = ru[i] & rv[i];
    return clique_in_mask(g, common, r - 2);
}

SaturationReport count_saturating(const Graph& g, int r, int workers)
{
    return run(g, r, workers, false);
}

SaturationReport classify_nonedges(const Graph& g, int r, int workers)
{
    return run(g, r, workers, true);
}

void write_classification_csv(std::ostream& out, const SaturationReport& report)
{
    if (!report.classified)
        throw std::invalid_argument("report carries no classification");
    out << "u,v,saturating\n";
    for (const auto& p : *report.classified)
        out << p.u << ',' << p.v << ',' << (p.saturating ? 1 : 0) << '\n';
}

} // namespace satlab
