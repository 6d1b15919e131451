#include "freebound/primal.hpp"

#include <cmath>
#include <random>
#include <algorithm>

#include "freebound/errors.hpp"
#include "freebound/numerics/roots.hpp"
#include "freebound/parallel.hpp"

namespace freebound {

double solve_dual_root(const std::function<double(double)>& f, double rel_tol) {
    const auto decade = numerics::decade_scan(f);
    if (decade.lo == decade.hi) return decade.lo;
    // Brent in log y: the decade bracket spans a factor of ten.
    numerics::Bracket br{std::log(decade.lo), std::log(decade.hi)};
    br.tol_abs = rel_tol;
    br.tol_rel = 0.0;
    const double z = numerics::find_root([&](double s) { return f(std::exp(s)); }, br);
    return std::exp(z);
}

PrimalSolver::PrimalSolver(const GcaBoundary& boundary, numerics::QuadratureOptions opts)
    : boundary_(boundary), dual_(boundary, opts) {}

double PrimalSolver::solve_I(double t, double x) const {
    const double K = boundary_.problem().market().K;
    if (!(x > K)) {
        throw DomainError("solve_I: wealth must exceed the floor K");
    }
    return solve_dual_root([&](double y) { return dual_.derivative(t, y) + x; }, 1e-10);
}

PrimalSolution PrimalSolver::solve(double t, double x) const {
    const auto& pr = boundary_.problem();
    const double K = pr.market().K;
    if (!(x > K)) {
        throw DomainError("PrimalSolver::solve: wealth must exceed the floor K");
    }
    PrimalSolution sol{t, x, 0.0, 0.0, 0.0, false};
    if (x >= boundary_.primal_boundary(t)) {
        const auto& u = pr.utility();
        sol.stopped = true;
        sol.y_star = u.primal_marginal(x - K);
        sol.value = u.primal_utility(x - K);
        return sol;
    }
    sol.y_star = solve_I(t, x);
    sol.value = dual_.value(t, sol.y_star) + x * sol.y_star;
    const double theta = pr.derived().theta;
    sol.strategy = theta / pr.market().sigma * sol.y_star * dual_.second_derivative(t, sol.y_star);
    return sol;
}

std::vector<PathRecord> PrimalSolver::simulate_paths(double x0, int n_paths, std::uint64_t seed,
                                                     const SimulationOptions& opts) const {
    const auto& m = boundary_.problem().market();
    const double theta = boundary_.problem().derived().theta;
    if (opts.n_steps < 10) {
        throw DomainError("simulate_paths: n_steps must be at least 10");
    }
    if (n_paths < 0) {
        throw DomainError("simulate_paths: n_paths must be non-negative");
    }
    if (!(x0 > m.K) || !(x0 < boundary_.primal_boundary(0.0))) {
        throw DomainError("simulate_paths: x0 must lie strictly between K and x(0)");
    }
    const int n = opts.n_steps;
    const double dt = m.T / n;
    const double growth = std::exp(m.r * dt);
    const double sqdt = std::sqrt(dt);
    // Keeps solve_I away from the divergent dual root at x = K.
    const double floor_guard = m.K + 1e-9 * std::max(1.0, m.K);

    std::vector<PathRecord> paths(static_cast<std::size_t>(n_paths));
    parallel_for(paths.size(), [&](std::size_t p) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(p)};
        std::mt19937_64 rng(seq);
        std::normal_distribution<double> normal;

        PathRecord rec;
        rec.seed = seed;
        rec.stop_time = m.T;
        rec.times.resize(n + 1);
        rec.wealth.resize(n + 1);
        rec.strategy.resize(n + 1);
        bool stopped = false;
        double X = x0;
        for (int i = 0; i <= n; ++i) {
            const double t = (i == n) ? m.T : i * dt;
            rec.times[i] = t;
            rec.wealth[i] = X;
            double pi = 0.0;
            if (!stopped && X >= boundary_.primal_boundary(t)) {
                stopped = true;
                rec.stop_time = t;
            }
            if (!stopped && i < n) {
                pi = solve(t, X).strategy;
            }
            rec.strategy[i] = pi;
            if (i == n) break;
            // The noise draw happens on every step so paths stay aligned across options.
            const double dW = normal(rng) * sqdt;
            if (stopped) {
                X *= growth;
                continue;
            }
            X += m.r * X * dt + m.sigma * pi * (theta * dt + (opts.disable_noise ? 0.0 : dW));
            if (X <= floor_guard) {
                X = floor_guard;
                rec.floor_clamped = true;
            }
        }
        paths[p] = std::move(rec);
    });
    return paths;
}

}  // namespace freebound
