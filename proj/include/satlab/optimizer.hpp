#pragma once

#include "satlab/graph.hpp"
#include "satlab/rational.hpp"
#include "satlab/vertex_set.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace satlab {

/// Continuous part-density program over a pattern: minimize the saturating
/// density subject to an edge-density floor, over the weight simplex.
struct DensityProgram {
    Graph pattern;
    int r = 4;
    VertexSet required_support;               // parts forced positive (may be empty)
    Rational edge_density_floor = Rational(1, 4);
    int restarts = 64;
    int max_iters = 2000;
    double tolerance = 1e-10;
    std::uint64_t seed = 1;
};

struct OptimizationResult {
    std::vector<double> weights;
    double edge_density = 0;
    double sat_density = 0;
    bool converged = false;
    double best_over_restarts = 0;
    double restart_spread = 0;      // worst minus best local optimum
    bool certified_feasible = false; // exact check at a nearby rational point
};

/// (edge_density, sat_density) at `weights` (must be >= 0 and sum to 1).
/// Classification is support-dependent: parts below 1e-9 count as absent.
std::pair<double, double> evaluate_point(const DensityProgram& prog, std::span<const double> weights);

struct EvalGradients {
    double edge = 0;
    double sat = 0;
    std::vector<double> grad_edge;
    std::vector<double> grad_sat;
};

/// Values plus analytic gradients of both densities, with the part
/// classification frozen at the support of `weights`.
EvalGradients evaluate_with_gradients(const DensityProgram& prog, std::span<const double> weights);

/// Multi-start projected descent with penalty on the floor constraint and a
/// KKT polish; deterministic for a fixed seed. `on_iterate`, when set, sees
/// every accepted iterate of every restart.
OptimizationResult optimize(const DensityProgram& prog,
    const std::function<void(std::span<const double>)>& on_iterate = {});

/// 2(r-3)^2 / ((r-1)(4r^2-19r+23)) as an exact rational (r >= 4).
Rational conjecture_value(int r);

/// Largest edge density any weighting of the pattern attains:
/// (1 - 1/omega)/2 for clique number omega.
Rational max_edge_density(const Graph& pattern);

} // namespace satlab
