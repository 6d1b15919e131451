#pragma once

#include <functional>
#include <span>
#include <vector>

namespace freebound::numerics {

/// Gauss-Legendre nodes and weights on [-1, 1].
class QuadratureRule {
public:
    explicit QuadratureRule(int order);

    int order() const noexcept { return static_cast<int>(nodes_.size()); }
    std::span<const double> nodes() const noexcept { return nodes_; }
    std::span<const double> weights() const noexcept { return weights_; }

    /// Fixed-rule approximation of the integral of f over [a, b].
    template <typename F>
    double integrate(F&& f, double a, double b) const {
        const double half = 0.5 * (b - a);
        const double mid = 0.5 * (a + b);
        double sum = 0.0;
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            sum += weights_[i] * f(mid + half * nodes_[i]);
        }
        return half * sum;
    }

private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

/// Shared rule of the given order; built once per order and cached.
const QuadratureRule& gauss_legendre(int order);

struct QuadratureOptions {
    int order = 64;
    bool adaptive = false;
    double tol = 1e-10;
    int max_depth = 30;
};

/// Integral of f over [a, b].
///
/// Fixed mode returns the Gauss-Legendre sum. Adaptive mode compares the rule on
/// a panel with the sum over its two halves and bisects until the disagreement is
/// below the panel's share of `tol`; QuadratureFailure when a panel needs more
/// than `max_depth` bisections.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opts = {});

/// Integral over [a, inf) through x = a + t / (1 - t), t in [0, 1).
double integrate_to_infinity(const std::function<double(double)>& f, double a,
                             const QuadratureOptions& opts = {});

}  // namespace freebound::numerics
