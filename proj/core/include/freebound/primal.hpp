#pragma once

#include <cstdint>
#include <vector>

#include "freebound/dual_value.hpp"
#include "freebound/gca.hpp"

namespace freebound {

struct PrimalSolution {
    double t;
    double x;
    double y_star;    ///< I(t, x)
    double value;     ///< V(t, x)
    double strategy;  ///< amount held in the stock
    bool stopped;     ///< x >= x(t): stop now, hold nothing

    double strategy_fraction() const noexcept { return strategy / x; }
};

struct PathRecord {
    std::vector<double> times;
    std::vector<double> wealth;
    std::vector<double> strategy;
    double stop_time;  ///< first grid time with X >= x(t), or T
    std::uint64_t seed;
    bool floor_clamped = false;  ///< an Euler step crossed K and was pulled back
};

struct SimulationOptions {
    int n_steps = 500;
    bool disable_noise = false;
};

/// Primal value, feedback strategy, and wealth paths recovered from the GCA dual value.
class PrimalSolver {
public:
    explicit PrimalSolver(const GcaBoundary& boundary,
                          numerics::QuadratureOptions opts = DualValueEvaluator::default_quadrature());

    const GcaBoundary& boundary() const noexcept { return boundary_; }
    const DualValueEvaluator& dual() const noexcept { return dual_; }

    /// Root of y -> V~_y(t, y) + x. Decade scan from y = 1, then Brent to relative 1e-10.
    /// DomainError for x <= K; ScanFailure if no sign change inside [1e-12, 1e12].
    double solve_I(double t, double x) const;

    /// Value and strategy at (t, x). In the stopping region x >= x(t) the
    /// payoff U(x - K) is returned with zero strategy.
    PrimalSolution solve(double t, double x) const;

    double primal_value(double t, double x) const { return solve(t, x).value; }
    double optimal_strategy(double t, double x) const { return solve(t, x).strategy; }

    /// Euler-Maruyama paths of dX = rX dt + sigma pi (theta dt + dW) under the feedback
    /// strategy; after the first grid hit of x(t) the strategy is zero and X grows at r.
    /// Path i draws from a generator seeded by (seed, i). Requires K < x0 < x(0).
    std::vector<PathRecord> simulate_paths(double x0, int n_paths, std::uint64_t seed,
                                           const SimulationOptions& opts = {}) const;

private:
    GcaBoundary boundary_;
    DualValueEvaluator dual_;
};

/// Shared decade scan + Brent search for y with f(y) = 0, f increasing in y.
double solve_dual_root(const std::function<double(double)>& f, double rel_tol);

}  // namespace freebound
