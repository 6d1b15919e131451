#pragma once

#include <functional>

#include "freebound/gca.hpp"
#include "freebound/numerics/quadrature.hpp"
#include "freebound/problem.hpp"

namespace freebound {

/// Approximate dual value V~(t, y) = U~_K(y) - D(tau, log y), where
///
///   D(tau, z) = int_0^tau J(tau - s, z; z_b(s)) ds,
///   J(u, z; a) = int_a^inf G(u, z - w) phi(w) dw   (closed form, see tail_integral),
///
/// for a stopping boundary z_b in log dual price. Derivatives in y are taken
/// analytically under the integral.
class DualValueEvaluator {
public:
    static numerics::QuadratureOptions default_quadrature() { return {32, true, 1e-9, 40}; }

    DualValueEvaluator(const Problem& problem, std::function<double(double)> boundary,
                       numerics::QuadratureOptions opts = default_quadrature());
    explicit DualValueEvaluator(const GcaBoundary& boundary,
                                numerics::QuadratureOptions opts = default_quadrature());

    const Problem& problem() const noexcept { return problem_; }

    double value(double t, double y) const;
    double derivative(double t, double y) const;
    double second_derivative(double t, double y) const;

    /// d^k/dz^k D(tau, z), k in {0, 1, 2}.
    double correction(double tau, double z, int k) const;

private:
    double tau_checked(double t, double y) const;

    Problem problem_;
    std::function<double(double)> boundary_;
    numerics::QuadratureOptions opts_;
};

}  // namespace freebound
