#pragma once

#include "satlab/graph.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace satlab::detail {

// Per-source context answering "does N(u) ∩ N(v) span an edge?" for many v.
// prepare(u) caches, for every w in N(u) with N(w) ∩ N(u) nonempty, the
// induced row rho_w = N(w) ∩ N(u) plus a signature of its nonzero word
// indices; a per-word OR of those signatures lets a query dismiss whole
// 64-vertex blocks whose candidates cannot intersect the query row at all.
// Rows are at most 64 words wide (n <= 4096), so signatures fit one word.
class EdgeInCommonScanner {
public:
    explicit EdgeInCommonScanner(const Graph& g)
        : g_(g)
        , words_(g.words_per_row())
        , rho_(std::size_t(g.vertex_count()) * words_)
        , lmask_(words_)
        , agg_(words_)
        , sig_(g.vertex_count())
    {
    }

    // signature of the nonzero word indices of a row
    static std::uint64_t word_signature(const std::uint64_t* row, int words)
    {
        std::uint64_t s = 0;
        for (int i = 0; i < words; ++i)
            if (row[i])
                s |= std::uint64_t{1} << i;
        return s;
    }

    void prepare(int u)
    {
        const int n = g_.vertex_count();
        auto ru = g_.row(u);
        for (int i = 0; i < words_; ++i) {
            lmask_[i] = 0;
            agg_[i] = 0;
        }
        for (int i = 0; i < words_; ++i) {
            std::uint64_t m = ru[i];
            while (m) {
                const int v = i * 64 + std::countr_zero(m);
                m &= m - 1;
                auto rw = g_.row(v);
                std::uint64_t* out = rho_.data() + std::size_t(v) * words_;
                std::uint64_t sig = 0;
                for (int j = 0; j < words_; ++j) {
                    out[j] = rw[j] & ru[j];
                    if (out[j])
                        sig |= std::uint64_t{1} << j;
                }
                sig_[v] = sig;
                if (sig) {
                    lmask_[i] |= std::uint64_t{1} << (v % 64);
                    agg_[i] |= sig;
                }
            }
        }
        ru_ = ru.data();
        (void)n;
    }

    // True iff some edge lies inside N(u) ∩ row_v; `vsig` is row_v's word
    // signature (word_signature(row_v, words)).
    bool query(const std::uint64_t* row_v, std::uint64_t vsig) const
    {
        for (int i = 0; i < words_; ++i) {
            if (!(agg_[i] & vsig))
                continue;
            std::uint64_t m = ru_[i] & row_v[i] & lmask_[i];
            while (m) {
                const int w = i * 64 + std::countr_zero(m);
                m &= m - 1;
                std::uint64_t hits = sig_[w] & vsig;
                if (!hits)
                    continue;
                const std::uint64_t* rho = rho_.data() + std::size_t(w) * words_;
                while (hits) {
                    const int j = std::countr_zero(hits);
                    hits &= hits - 1;
                    if (rho[j] & row_v[j])
                        return true;
                }
            }
        }
        return false;
    }

    bool query(const std::uint64_t* row_v) const
    {
        return query(row_v, word_signature(row_v, words_));
    }

    // Lexicographically least edge (w,x) inside N(u) ∩ row_v, or {-1,-1}.
    std::pair<int, int> witness_edge(const std::uint64_t* row_v) const
    {
        const std::uint64_t vsig = word_signature(row_v, words_);
        for (int i = 0; i < words_; ++i) {
            if (!(agg_[i] & vsig))
                continue;
            std::uint64_t m = ru_[i] & row_v[i] & lmask_[i];
            while (m) {
                const int w = i * 64 + std::countr_zero(m);
                m &= m - 1;
                std::uint64_t hits = sig_[w] & vsig;
                const std::uint64_t* rho = rho_.data() + std::size_t(w) * words_;
                while (hits) {
                    const int j = std::countr_zero(hits);
                    hits &= hits - 1;
                    const std::uint64_t hit = rho[j] & row_v[j];
                    if (hit)
                        return {w, j * 64 + std::countr_zero(hit)};
                }
            }
        }
        return {-1, -1};
    }

private:
    const Graph& g_;
    int words_;
    const std::uint64_t* ru_ = nullptr;
    std::vector<std::uint64_t> rho_;
    std::vector<std::uint64_t> lmask_;
    std::vector<std::uint64_t> agg_;
    std::vector<std::uint64_t> sig_;
};

} // namespace satlab::detail
