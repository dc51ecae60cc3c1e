#pragma once

#include "satlab/graph.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace satlab {

struct PairVerdict {
    int u;
    int v;
    bool saturating;

    friend bool operator==(const PairVerdict&, const PairVerdict&) = default;
};

struct SaturationReport {
    int r = 4;
    long long count = 0;          // f(G) when r = 4
    long long total_nonedges = 0; // n(n-1)/2 - e(G)
    std::optional<std::vector<PairVerdict>> classified;
};

/// Is uv a K_r-saturating pair of the K_r-free graph g? uv must be a
/// non-edge; K_r-freeness is verified (error with a witness otherwise).
bool is_saturating_pair(const Graph& g, int u, int v, int r);

/// Count K_r-saturating non-edges. Verifies K_r-freeness eagerly.
/// Deterministic for any worker count; workers <= 0 selects automatically.
SaturationReport count_saturating(const Graph& g, int r, int workers = 0);

/// As count_saturating, plus a per-pair verdict for every non-edge in
/// lexicographic (u,v) order.
SaturationReport classify_nonedges(const Graph& g, int r, int workers = 0);

/// CSV dump: header "u,v,saturating", 0-based indices. Requires classified.
void write_classification_csv(std::ostream& out, const SaturationReport& report);

} // namespace satlab
