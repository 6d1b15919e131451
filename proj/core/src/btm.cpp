#include "freebound/btm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "freebound/errors.hpp"
#include "freebound/numerics/roots.hpp"

namespace freebound {

namespace {

constexpr double kDyBump = 1e-4;

}  // namespace

TreeResult tree_value(const Problem& pr, const TreeConfig& cfg, bool american) {
    if (cfg.n_steps < 2) {
        throw DomainError("tree_value: n_steps must be at least 2");
    }
    if (!(cfg.y0 > 0.0)) {
        throw DomainError("tree_value: y0 must be positive");
    }
    const auto& m = pr.market();
    const auto& u = pr.utility();
    const int n = cfg.n_steps;
    const double dt = m.T / n;
    const double h = std::abs(pr.derived().theta) * std::sqrt(dt);
    const double up = std::exp(h);
    const double down = 1.0 / up;
    const double p = (std::exp((m.beta - m.r) * dt) - down) / (up - down);
    if (!(p > 0.0 && p < 1.0)) {
        std::ostringstream os;
        os << "tree_value: up probability " << p << " outside (0, 1) at " << n << " steps";
        throw ProbabilityOutOfRange(os.str());
    }
    const double disc = std::exp(-m.beta * dt);
    const double pu = disc * p;
    const double pd = disc * (1.0 - p);

    // Node (i, j) sits at y0 e^{(i - 2j) h}; payoffs are shared across layers by level k = i - 2j.
    std::vector<double> payoff(2 * static_cast<std::size_t>(n) + 1);
    for (int k = -n; k <= n; ++k) {
        payoff[k + n] = u.dual_value(cfg.y0 * std::exp(k * h));
    }

    TreeResult out{};
    const double nan = std::numeric_limits<double>::quiet_NaN();
    if (cfg.record_boundary) {
        out.exercise_boundary.assign(n + 1, nan);
    }
    std::vector<double> v(n + 1);
    for (int j = 0; j <= n; ++j) {
        v[j] = payoff[n - 2 * j + n];
    }
    std::vector<char> exercise(cfg.record_boundary ? n + 1 : 0);
    for (int i = n - 1; i >= 0; --i) {
        for (int j = 0; j <= i; ++j) {
            const double cont = pu * v[j] + pd * v[j + 1];
            if (american) {
                const double g = payoff[i - 2 * j + n];
                v[j] = std::max(cont, g);
                if (cfg.record_boundary) exercise[j] = g >= cont;
            } else {
                v[j] = cont;
            }
        }
        if (cfg.record_boundary && american && exercise[i]) {
            int j = i;
            while (j > 0 && exercise[j - 1]) --j;
            // A fully exercising layer only bounds the boundary from below.
            if (j > 0) out.exercise_boundary[i] = cfg.y0 * std::exp((i - 2 * j) * h);
        }
    }
    out.value_at_root = v[0];
    return out;
}

double european_closed_form(const Problem& pr, double y) {
    const auto& d = pr.derived();
    const auto& m = pr.market();
    double sum = 0.0;
    for (double q : pr.utility().exponents()) {
        sum += -std::pow(y, q) / q * std::exp((q * q - d.kappa * q - d.rho) * d.tau_max);
    }
    return sum - m.K * y * std::exp(-m.r * m.T);
}

BtmOracle::BtmOracle(const Problem& problem, int n_steps) : problem_(problem), n_steps_(n_steps) {
    if (n_steps < 2) {
        throw DomainError("BtmOracle: n_steps must be at least 2");
    }
}

double BtmOracle::lattice_spacing() const noexcept {
    return 2.0 * std::abs(problem_.derived().theta) * std::sqrt(problem_.market().T / n_steps_);
}

double BtmOracle::value(double y) const {
    return tree_value(problem_, TreeConfig{n_steps_, y, false}, true).value_at_root;
}

double BtmOracle::dual_dy(double y) const {
    return (value(y * (1.0 + kDyBump)) - value(y * (1.0 - kDyBump))) / (2.0 * kDyBump * y);
}

double BtmOracle::dual_dyy(double y) const {
    const double h = lattice_spacing();
    const double vp = value(y * std::exp(h));
    const double v0 = value(y);
    const double vm = value(y * std::exp(-h));
    const double vz = (vp - vm) / (2.0 * h);
    const double vzz = (vp - 2.0 * v0 + vm) / (h * h);
    return (vzz - vz) / (y * y);
}

double BtmOracle::find_initial_y(double x) const {
    if (!(x > problem_.market().K)) {
        throw DomainError("find_initial_y: wealth must exceed the floor K");
    }
    auto f = [&](double y) { return dual_dy(y) + x; };
    const auto decade = numerics::decade_scan(f);
    double lo = decade.lo;
    double hi = decade.hi;
    while (hi - lo > 1e-8 * lo) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

BtmPrimal BtmOracle::primal(double x) const {
    const double y = find_initial_y(x);
    const double v = value(y);
    if (v <= problem_.utility().dual_value(y)) {
        return BtmPrimal{y, v + x * y, 0.0, true};
    }
    const auto& d = problem_.derived();
    return BtmPrimal{y, v + x * y, d.theta / problem_.market().sigma * y * dual_dyy(y), false};
}

std::vector<BtmBoundaryPoint> BtmOracle::boundary(double y0) const {
    const auto res = tree_value(problem_, TreeConfig{n_steps_, y0, true}, true);
    const double dt = problem_.market().T / n_steps_;
    std::vector<BtmBoundaryPoint> out;
    for (int i = 0; i < n_steps_; ++i) {
        const double yb = res.exercise_boundary[i];
        if (std::isnan(yb)) continue;
        out.push_back({i * dt, yb, -problem_.utility().dual_deriv(yb)});
    }
    return out;
}

}  // namespace freebound
