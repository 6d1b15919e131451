#include "freebound/numerics/quadrature.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

#include "freebound/errors.hpp"

namespace freebound::numerics {

QuadratureRule::QuadratureRule(int order) {
    if (order < 1) {
        throw DomainError("QuadratureRule: order must be >= 1");
    }
    const auto n = static_cast<std::size_t>(order);
    nodes_.resize(n);
    weights_.resize(n);
    // Newton on P_n from the Tricomi initial guesses; roots come in +/- pairs.
    const std::size_t m = (n + 1) / 2;
    for (std::size_t i = 0; i < m; ++i) {
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = x;
            for (std::size_t k = 2; k <= n; ++k) {
                const double kk = static_cast<double>(k);
                const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) {
                p1 = x;
                p0 = 1.0;
            }
            dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // Recompute the derivative at the converged node for the weight.
        double p0 = 1.0;
        double p1 = x;
        for (std::size_t k = 2; k <= n; ++k) {
            const double kk = static_cast<double>(k);
            const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
            p0 = p1;
            p1 = p2;
        }
        dp = (n == 1) ? 1.0 : static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes_[i] = -x;
        nodes_[n - 1 - i] = x;
        weights_[i] = w;
        weights_[n - 1 - i] = w;
    }
    if (n % 2 == 1) {
        nodes_[m - 1] = 0.0;
    }
}

const QuadratureRule& gauss_legendre(int order) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<QuadratureRule>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[order];
    if (!slot) {
        slot = std::make_unique<QuadratureRule>(order);
    }
    return *slot;
}

namespace {

double adaptive_panel(const std::function<double(double)>& f, const QuadratureRule& rule,
                      double a, double b, double whole, double tol, int depth, int max_depth) {
    const double mid = 0.5 * (a + b);
    const double coarse = rule.integrate(f, a, b);
    const double left = rule.integrate(f, a, mid);
    const double right = rule.integrate(f, mid, b);
    const double fine = left + right;
    const double share = tol * (b - a) / whole;
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() * std::abs(fine);
    if (std::abs(fine - coarse) <= std::max(share, floor)) {
        return fine;
    }
    if (depth >= max_depth) {
        std::ostringstream os;
        os << "integrate: tolerance " << tol << " not reached on [" << a << ", " << b
           << "] after " << max_depth << " bisections";
        throw QuadratureFailure(os.str());
    }
    return adaptive_panel(f, rule, a, mid, whole, tol, depth + 1, max_depth) +
           adaptive_panel(f, rule, mid, b, whole, tol, depth + 1, max_depth);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opts) {
    if (b < a) {
        throw DomainError("integrate: requires a <= b");
    }
    if (a == b) return 0.0;
    const QuadratureRule& rule = gauss_legendre(opts.order);
    if (!opts.adaptive) {
        return rule.integrate(f, a, b);
    }
    return adaptive_panel(f, rule, a, b, b - a, opts.tol, 0, opts.max_depth);
}

double integrate_to_infinity(const std::function<double(double)>& f, double a,
                             const QuadratureOptions& opts) {
    auto mapped = [&](double t) {
        const double one_minus = 1.0 - t;
        if (one_minus <= 0.0) return 0.0;
        const double x = a + t / one_minus;
        return f(x) / (one_minus * one_minus);
    };
    return integrate(mapped, 0.0, 1.0, opts);
}

}  // namespace freebound::numerics
