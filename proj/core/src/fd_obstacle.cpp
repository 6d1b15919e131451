#include "freebound/fd_obstacle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "freebound/errors.hpp"
#include "freebound/gca.hpp"

namespace freebound {

FdConfig FdConfig::defaults(const Problem& problem) {
    const double z0 = solve_z0(problem);
    FdConfig cfg{};
    cfg.z_min = z0 - 6.0;
    cfg.z_max = z0 + 6.0;
    cfg.tau_end = problem.derived().tau_max;
    return cfg;
}

namespace {

void validate(const Problem& pr, const FdConfig& cfg) {
    const double z0 = solve_z0(pr);
    if (!(cfg.z_min < z0 - 2.0) || !(cfg.z_max > z0 + 3.0)) {
        throw DomainError("solve_obstacle: grid must cover [z0 - 2, z0 + 3] strictly");
    }
    if (!(cfg.omega > 1.0 && cfg.omega < 2.0)) {
        throw DomainError("solve_obstacle: omega must lie in (1, 2)");
    }
    if (cfg.n_z < 200 || cfg.n_tau < 1) {
        throw DomainError("solve_obstacle: need n_z >= 200 and n_tau >= 1");
    }
    if (!(cfg.psor_tol > 0.0) || cfg.max_iter < 1 || !(cfg.tau_end > 0.0)) {
        throw DomainError("solve_obstacle: psor_tol, max_iter and tau_end must be positive");
    }
}

}  // namespace

FdSolution solve_obstacle(const Problem& pr, const FdConfig& cfg) {
    validate(pr, cfg);
    const auto& d = pr.derived();
    const auto& u = pr.utility();
    const int n = cfg.n_z;
    const std::size_t N = static_cast<std::size_t>(n) + 1;
    const double dz = (cfg.z_max - cfg.z_min) / n;
    const double dt = cfg.tau_end / cfg.n_tau;
    const double nan = std::numeric_limits<double>::quiet_NaN();

    FdSolution sol;
    sol.z.resize(N);
    std::vector<double> g(N);
    for (std::size_t i = 0; i < N; ++i) {
        sol.z[i] = cfg.z_min + static_cast<double>(i) * dz;
        g[i] = u.obstacle_g(sol.z[i]);
    }
    sol.tau.resize(static_cast<std::size_t>(cfg.n_tau) + 1);
    for (int k = 0; k <= cfg.n_tau; ++k) sol.tau[k] = k * dt;
    sol.boundary.assign(sol.tau.size(), nan);
    sol.min_tau_increment = std::numeric_limits<double>::infinity();

    // (Mv)_i = lo v_{i-1} + di v_i + up v_{i+1}, M = -d_zz + kappa d_z + rho.
    const double lo = -1.0 / (dz * dz) - d.kappa / (2.0 * dz);
    const double di = 2.0 / (dz * dz) + d.rho;
    const double up = -1.0 / (dz * dz) + d.kappa / (2.0 * dz);

    std::vector<double> v = g;
    std::vector<double> b(N);
    if (cfg.keep_surface) sol.surface.push_back(v);

    for (int k = 0; k < cfg.n_tau; ++k) {
        const bool implicit = cfg.scheme == FdScheme::Implicit || k < cfg.rannacher_steps;
        const double th = implicit ? 1.0 : 0.5;
        const double a_lo = th * dt * lo;
        const double a_di = 1.0 + th * dt * di;
        const double a_up = th * dt * up;
        const double e = (1.0 - th) * dt;
        for (std::size_t i = 1; i + 1 < N; ++i) {
            b[i] = v[i] - e * (lo * v[i - 1] + di * v[i] + up * v[i + 1]);
        }
        const std::vector<double> prev = v;
        v[0] = g[0];

        int it = 0;
        for (;; ++it) {
            if (it >= cfg.max_iter) {
                std::ostringstream os;
                os << "solve_obstacle: PSOR did not converge at step " << k + 1;
                throw PsorNotConverged(os.str());
            }
            bool done = true;
            for (std::size_t i = 1; i + 1 < N; ++i) {
                const double gs = (b[i] - a_lo * v[i - 1] - a_up * v[i + 1]) / a_di;
                const double next = std::max(g[i], v[i] + cfg.omega * (gs - v[i]));
                if (std::abs(next - v[i]) > 0.01 * cfg.psor_tol * (1.0 + std::abs(v[i]))) done = false;
                v[i] = next;
            }
            v[N - 1] = 2.0 * v[N - 2] - v[N - 3];
            if (done) break;
        }
        sol.psor_sweeps += it + 1;

        for (std::size_t i = 1; i + 1 < N; ++i) {
            const double res = a_lo * v[i - 1] + a_di * v[i] + a_up * v[i + 1] - b[i];
            const double s = 1.0 + std::abs(v[i]);
            sol.complementarity = std::max(sol.complementarity, std::abs((v[i] - g[i]) * res) / (s * s));
        }
        for (std::size_t i = 0; i < N; ++i) {
            sol.min_tau_increment = std::min(sol.min_tau_increment, (v[i] - prev[i]) / (1.0 + std::abs(prev[i])));
        }
        std::size_t last = 0;
        while (last + 1 < N - 1 && v[last + 1] - g[last + 1] <= cfg.psor_tol * (1.0 + std::abs(g[last + 1]))) {
            ++last;
        }
        sol.boundary[k + 1] = sol.z[last];
        if (cfg.keep_surface) sol.surface.push_back(v);
    }
    if (!cfg.keep_surface) sol.surface.push_back(v);
    return sol;
}

}  // namespace freebound
