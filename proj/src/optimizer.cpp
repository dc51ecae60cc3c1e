#include "satlab/optimizer.hpp"

#include "satlab/clique.hpp"
#include "satlab/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace satlab {

namespace {

    constexpr double kSupportEps = 1e-9;   // below this a part counts as absent
    constexpr double kRequiredFloor = 1e-6; // search-time lower bound on required parts

    struct Classification {
        std::vector<char> within;
        std::vector<std::pair<int, int>> cross;
    };

    std::vector<std::uint64_t> set_words(const VertexSet& s)
    {
        return {s.words().begin(), s.words().end()};
    }

    Classification classify_support(const Graph& pattern, int r, std::span<const double> w)
    {
        const int p = pattern.vertex_count();
        VertexSet supp(p);
        for (int i = 0; i < p; ++i)
            if (w[i] > kSupportEps)
                supp.set(i);
        auto pc = classify_parts(pattern, supp, r);
        Classification out;
        out.within.assign(p, 0);
        pc.within.for_each([&](int v) { out.within[v] = 1; });
        out.cross = pc.cross;
        return out;
    }

    double edge_value(const Graph& pattern, std::span<const double> w)
    {
        double q = 0;
        for (auto [i, j] : pattern.edges())
            q += w[i] * w[j];
        return q;
    }

    double sat_value(const Classification& cls, std::span<const double> w)
    {
        double s = 0;
        for (std::size_t i = 0; i < cls.within.size(); ++i)
            if (cls.within[i])
                s += 0.5 * w[i] * w[i];
        for (auto [i, j] : cls.cross)
            s += w[i] * w[j];
        return s;
    }

    void validate_weights(const Graph& pattern, std::span<const double> w)
    {
        if (static_cast<int>(w.size()) != pattern.vertex_count())
            throw std::invalid_argument("weight vector size does not match pattern");
        double sum = 0;
        for (double x : w) {
            if (!(x >= -1e-12))
                throw std::invalid_argument("weights must be non-negative");
            sum += x;
        }
        if (std::abs(sum - 1.0) > 1e-9)
            throw std::invalid_argument("weights must sum to 1");
    }

    // Projection onto { w >= lo, sum w = 1 }.
    std::vector<double> project(std::span<const double> v, std::span<const double> lo)
    {
        const std::size_t p = v.size();
        double mass = 1.0;
        std::vector<double> u(p);
        for (std::size_t i = 0; i < p; ++i) {
            u[i] = v[i] - lo[i];
            mass -= lo[i];
        }
        std::vector<double> sorted(u.begin(), u.end());
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        double cum = 0;
        double theta = 0;
        int rho = 0;
        for (std::size_t k = 0; k < p; ++k) {
            cum += sorted[k];
            const double cand = (cum - mass) / static_cast<double>(k + 1);
            if (sorted[k] - cand > 0) {
                theta = cand;
                rho = static_cast<int>(k + 1);
            }
        }
        (void)rho;
        std::vector<double> out(p);
        for (std::size_t i = 0; i < p; ++i)
            out[i] = std::max(u[i] - theta, 0.0) + lo[i];
        return out;
    }

    double uniform53(std::mt19937_64& rng)
    {
        return static_cast<double>(rng() >> 11) * 0x1p-53;
    }

    std::vector<double> dirichlet(std::mt19937_64& rng, std::size_t p)
    {
        std::vector<double> w(p);
        double sum = 0;
        for (auto& x : w) {
            x = -std::log(1.0 - uniform53(rng)) + 1e-12;
            sum += x;
        }
        for (auto& x : w)
            x /= sum;
        return w;
    }

    // Dense Gaussian elimination with partial pivoting; false when singular.
    bool solve_linear(std::vector<std::vector<double>>& a, std::vector<double>& b)
    {
        const std::size_t m = b.size();
        for (std::size_t col = 0; col < m; ++col) {
            std::size_t piv = col;
            for (std::size_t r = col + 1; r < m; ++r)
                if (std::abs(a[r][col]) > std::abs(a[piv][col]))
                    piv = r;
            if (std::abs(a[piv][col]) < 1e-14)
                return false;
            std::swap(a[piv], a[col]);
            std::swap(b[piv], b[col]);
            for (std::size_t r = 0; r < m; ++r) {
                if (r == col)
                    continue;
                const double f = a[r][col] / a[col][col];
                if (f == 0)
                    continue;
                for (std::size_t c = col; c < m; ++c)
                    a[r][c] -= f * a[col][c];
                b[r] -= f * b[col];
            }
        }
        for (std::size_t i = 0; i < m; ++i)
            b[i] /= a[i][i];
        return true;
    }

    struct RestartResult {
        std::vector<double> w;
        double edge = 0;
        double sat = 0;
        bool converged = false;
    };

    // KKT polish with frozen support and active floor constraint. Returns
    // false (leaving w untouched) when Newton cannot improve the point.
    bool newton_polish(const Graph& pattern, const Classification& cls, double beta,
        std::vector<double>& w_in)
    {
        const int p = pattern.vertex_count();
        std::vector<int> support;
        for (int i = 0; i < p; ++i)
            if (w_in[i] > kSupportEps)
                support.push_back(i);
        const std::size_t m = support.size();
        if (m == 0)
            return false;

        auto mq_row = [&](int k, std::span<const double> w) {
            double s = 0;
            for (int j : support)
                if (pattern.adjacent(k, j))
                    s += w[j];
            return s;
        };
        auto ms_row = [&](int k, std::span<const double> w) {
            double s = cls.within[k] ? w[k] : 0.0;
            for (auto [i, j] : cls.cross) {
                if (i == k)
                    s += w[j];
                if (j == k)
                    s += w[i];
            }
            return s;
        };

        std::vector<double> w(w_in);
        // least-squares initial multipliers
        double num = 0, den = 0, nu = 0;
        for (int k : support) {
            const double gq = mq_row(k, w);
            const double gs = ms_row(k, w);
            num += gs * gq;
            den += gq * gq;
        }
        double lambda = den > 0 ? num / den : 0.0;
        for (int k : support)
            nu += ms_row(k, w) - lambda * mq_row(k, w);
        nu /= static_cast<double>(m);

        for (int iter = 0; iter < 80; ++iter) {
            std::vector<double> resid(m + 2, 0.0);
            double q = 0;
            for (auto [i, j] : pattern.edges())
                q += w[i] * w[j];
            for (std::size_t a = 0; a < m; ++a) {
                const int k = support[a];
                resid[a] = ms_row(k, w) - lambda * mq_row(k, w) - nu;
            }
            resid[m] = q - beta;
            double sum = -1.0;
            for (int k : support)
                sum += w[k];
            resid[m + 1] = sum;

            double rmax = 0;
            for (double r : resid)
                rmax = std::max(rmax, std::abs(r));
            if (rmax < 1e-14)
                break;

            std::vector<std::vector<double>> jac(m + 2, std::vector<double>(m + 2, 0.0));
            for (std::size_t a = 0; a < m; ++a) {
                const int k = support[a];
                for (std::size_t bcol = 0; bcol < m; ++bcol) {
                    const int j = support[bcol];
                    double v = 0;
                    if (cls.within[k] && j == k)
                        v += 1.0;
                    for (auto [ci, cj] : cls.cross)
                        if ((ci == k && cj == j) || (cj == k && ci == j))
                            v += 1.0;
                    if (pattern.adjacent(k, j))
                        v -= lambda;
                    jac[a][bcol] = v;
                }
                jac[a][m] = -mq_row(k, w);
                jac[a][m + 1] = -1.0;
            }
            for (std::size_t bcol = 0; bcol < m; ++bcol)
                jac[m][bcol] = mq_row(support[bcol], w);
            for (std::size_t bcol = 0; bcol < m; ++bcol)
                jac[m + 1][bcol] = 1.0;

            std::vector<double> rhs(m + 2);
            for (std::size_t i = 0; i < m + 2; ++i)
                rhs[i] = -resid[i];
            if (!solve_linear(jac, rhs))
                return false;
            for (std::size_t a = 0; a < m; ++a)
                w[support[a]] += rhs[a];
            lambda += rhs[m];
            nu += rhs[m + 1];
            for (int k : support)
                if (!(w[k] > -1e-6) || !std::isfinite(w[k]))
                    return false;
        }
        for (int k : support)
            if (w[k] < 0)
                return false;
        w_in = w;
        return true;
    }

    RestartResult run_restart(const DensityProgram& prog, std::uint64_t restart_seed,
        const std::function<void(std::span<const double>)>& on_iterate)
    {
        const int p = prog.pattern.vertex_count();
        const double beta = to_double(prog.edge_density_floor);
        std::mt19937_64 rng(restart_seed);

        std::vector<double> lo(p, 0.0);
        prog.required_support.for_each([&](int i) { lo[i] = kRequiredFloor; });

        std::vector<double> w = project(dirichlet(rng, static_cast<std::size_t>(p)), lo);

        auto edge_grad = [&](std::span<const double> x, std::vector<double>& g) {
            for (int k = 0; k < p; ++k) {
                g[k] = 0;
                for (int j = 0; j < p; ++j)
                    if (prog.pattern.adjacent(k, j))
                        g[k] += x[j];
            }
        };

        // Phase 1: restoration. The saturating objective always pulls toward
        // infeasible near-bipartite corners, so first climb the edge density
        // until the floor holds with a margin (or the ascent stalls).
        {
            std::vector<double> g(p);
            for (int it = 0; it < 400; ++it) {
                const double q = edge_value(prog.pattern, w);
                if (q >= beta + 1e-3)
                    break;
                edge_grad(w, g);
                double step = 0.5;
                bool moved = false;
                while (step > 1e-16) {
                    std::vector<double> cand(p);
                    for (int k = 0; k < p; ++k)
                        cand[k] = w[k] + step * g[k];
                    cand = project(cand, lo);
                    if (edge_value(prog.pattern, cand) > q + 1e-15) {
                        w = std::move(cand);
                        moved = true;
                        break;
                    }
                    step *= 0.5;
                }
                if (!moved)
                    break;
                if (on_iterate)
                    on_iterate(w);
            }
        }

        // Phase 2: stiff-penalty descent from the feasible side.
        const double mus[] = {1e4, 1e6, 1e8};
        const int iters_per_round = std::max(prog.max_iters / 3, 100);

        auto penalty_value = [&](std::span<const double> x, const Classification& cls, double mu) {
            const double q = edge_value(prog.pattern, x);
            const double hinge = std::max(0.0, beta - q);
            return sat_value(cls, x) + mu * hinge * hinge;
        };

        for (double mu : mus) {
            for (int it = 0; it < iters_per_round; ++it) {
                auto cls = classify_support(prog.pattern, prog.r, w);
                const double q = edge_value(prog.pattern, w);
                const double hinge = std::max(0.0, beta - q);
                std::vector<double> gq(p);
                edge_grad(w, gq);
                std::vector<double> grad(p, 0.0);
                for (int k = 0; k < p; ++k) {
                    double gs = cls.within[k] ? w[k] : 0.0;
                    for (auto [i, j] : cls.cross) {
                        if (i == k)
                            gs += w[j];
                        if (j == k)
                            gs += w[i];
                    }
                    grad[k] = gs - 2.0 * mu * hinge * gq[k];
                }
                const double f0 = penalty_value(w, cls, mu);
                double gnorm2 = 0;
                for (double gk : grad)
                    gnorm2 += gk * gk;
                double step = 0.25;
                std::vector<double> next;
                bool moved = false;
                while (step > 1e-18) {
                    std::vector<double> cand(p);
                    for (int k = 0; k < p; ++k)
                        cand[k] = w[k] - step * grad[k];
                    cand = project(cand, lo);
                    auto cls2 = classify_support(prog.pattern, prog.r, cand);
                    if (penalty_value(cand, cls2, mu) <= f0 - 1e-4 * step * gnorm2) {
                        next = std::move(cand);
                        moved = true;
                        break;
                    }
                    step *= 0.5;
                }
                if (!moved)
                    break;
                double delta = 0;
                for (int k = 0; k < p; ++k)
                    delta = std::max(delta, std::abs(next[k] - w[k]));
                w = std::move(next);
                if (on_iterate)
                    on_iterate(w);
                if (delta < prog.tolerance)
                    break;
            }
        }

        // restrict to the detected support and polish
        for (int k = 0; k < p; ++k)
            if (w[k] <= kSupportEps && lo[k] == 0.0)
                w[k] = 0.0;
        {
            double sum = std::accumulate(w.begin(), w.end(), 0.0);
            for (auto& x : w)
                x /= sum;
        }

        RestartResult res;
        auto cls = classify_support(prog.pattern, prog.r, w);
        std::vector<double> polished = w;
        bool newton_ok = false;
        const double q_now = edge_value(prog.pattern, w);
        if (std::abs(q_now - beta) < 1e-4 || q_now < beta)
            newton_ok = newton_polish(prog.pattern, cls, beta, polished);
        if (newton_ok) {
            const double qp = edge_value(prog.pattern, polished);
            auto clsp = classify_support(prog.pattern, prog.r, polished);
            const double sp = sat_value(clsp, polished);
            const double qs = edge_value(prog.pattern, w);
            const double ss = sat_value(cls, w);
            const bool pol_feasible = qp >= beta - 1e-9;
            const bool pgd_feasible = qs >= beta - 1e-9;
            if (pol_feasible && (!pgd_feasible || sp <= ss)) {
                w = std::move(polished);
                if (on_iterate)
                    on_iterate(w);
            } else {
                newton_ok = false;
            }
        }

        res.w = w;
        auto cls_final = classify_support(prog.pattern, prog.r, w);
        res.edge = edge_value(prog.pattern, w);
        res.sat = sat_value(cls_final, w);
        res.converged = newton_ok || res.edge >= beta - 1e-8;
        return res;
    }

} // namespace

std::pair<double, double> evaluate_point(const DensityProgram& prog, std::span<const double> weights)
{
    validate_weights(prog.pattern, weights);
    auto cls = classify_support(prog.pattern, prog.r, weights);
    return {edge_value(prog.pattern, weights), sat_value(cls, weights)};
}

EvalGradients evaluate_with_gradients(const DensityProgram& prog, std::span<const double> weights)
{
    validate_weights(prog.pattern, weights);
    const int p = prog.pattern.vertex_count();
    auto cls = classify_support(prog.pattern, prog.r, weights);
    EvalGradients out;
    out.edge = edge_value(prog.pattern, weights);
    out.sat = sat_value(cls, weights);
    out.grad_edge.assign(p, 0.0);
    out.grad_sat.assign(p, 0.0);
    for (int k = 0; k < p; ++k) {
        for (int j = 0; j < p; ++j)
            if (prog.pattern.adjacent(k, j))
                out.grad_edge[k] += weights[j];
        if (cls.within[k])
            out.grad_sat[k] += weights[k];
        for (auto [i, j] : cls.cross) {
            if (i == k)
                out.grad_sat[k] += weights[j];
            if (j == k)
                out.grad_sat[k] += weights[i];
        }
    }
    return out;
}

OptimizationResult optimize(const DensityProgram& prog,
    const std::function<void(std::span<const double>)>& on_iterate)
{
    const int p = prog.pattern.vertex_count();
    if (p == 0)
        throw std::invalid_argument("pattern must be non-empty");
    if (prog.r < 3)
        throw std::invalid_argument("clique order must be at least 3");
    if (prog.required_support.capacity() != 0 && prog.required_support.capacity() != p)
        throw std::invalid_argument("required_support capacity does not match pattern");
    if (!prog.required_support.empty()
        && !clique_in_mask(prog.pattern, set_words(prog.required_support), prog.r - 1))
        throw std::invalid_argument(
            "required_support must contain the parts of a K_" + std::to_string(prog.r - 1) + " clique");

    const Rational max_q = max_edge_density(prog.pattern);
    if (prog.edge_density_floor > max_q)
        throw std::invalid_argument("infeasible program: maximum attainable edge density is "
            + to_string(max_q) + " < floor " + to_string(prog.edge_density_floor));

    const int restarts = std::max(prog.restarts, 1);
    std::vector<RestartResult> results;
    results.reserve(static_cast<std::size_t>(restarts));
    for (int s = 0; s < restarts; ++s) {
        const std::uint64_t rs = prog.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(s) + 1;
        results.push_back(run_restart(prog, rs, on_iterate));
    }

    const double beta = to_double(prog.edge_density_floor);
    auto better = [&](int a, int b) {
        const bool fa = results[a].edge >= beta - 1e-8;
        const bool fb = results[b].edge >= beta - 1e-8;
        if (fa != fb)
            return fa;
        if (results[a].sat != results[b].sat)
            return results[a].sat < results[b].sat;
        return a < b;
    };
    int best = 0;
    for (int s = 1; s < restarts; ++s)
        if (better(s, best))
            best = s;

    double best_sat = results[best].sat;
    double worst_sat = results[best].sat;
    for (const auto& r : results) {
        if (r.edge >= beta - 1e-8) {
            best_sat = std::min(best_sat, r.sat);
            worst_sat = std::max(worst_sat, r.sat);
        }
    }

    OptimizationResult out;
    out.weights = results[best].w;
    out.edge_density = results[best].edge;
    out.sat_density = results[best].sat;
    out.converged = results[best].converged;
    out.best_over_restarts = best_sat;
    out.restart_spread = worst_sat - best_sat;

    // exact certification at a nearby rational point
    std::vector<Rational> wr;
    Rational total(0);
    for (double x : out.weights) {
        Rational r = rational_from_double(std::max(x, 0.0), 1'000'000'000LL);
        wr.push_back(r);
        total += r;
    }
    if (total > Rational(0)) {
        Rational q(0);
        for (auto [i, j] : prog.pattern.edges())
            q += (wr[i] / total) * (wr[j] / total);
        out.certified_feasible = q >= prog.edge_density_floor - Rational(BigInt(1), BigInt(1'000'000'000LL));
    }
    return out;
}

Rational conjecture_value(int r)
{
    if (r < 4)
        throw std::invalid_argument("conjecture value needs r >= 4, got " + std::to_string(r));
    const BigInt rr(r);
    return Rational(2 * (rr - 3) * (rr - 3), (rr - 1) * (4 * rr * rr - 19 * rr + 23));
}

Rational max_edge_density(const Graph& pattern)
{
    const int n = pattern.vertex_count();
    if (n == 0)
        return Rational(0);
    int omega = 1;
    for (int k = 2; k <= n; ++k) {
        if (find_clique(pattern, k))
            omega = k;
        else
            break;
    }
    return Rational(BigInt(omega - 1), BigInt(2) * BigInt(omega));
}

} // namespace satlab
