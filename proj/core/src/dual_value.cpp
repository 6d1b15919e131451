#include "freebound/dual_value.hpp"

#include <cmath>
#include <utility>

#include "freebound/errors.hpp"

namespace freebound {

DualValueEvaluator::DualValueEvaluator(const Problem& problem, std::function<double(double)> boundary,
                                       numerics::QuadratureOptions opts)
    : problem_(problem), boundary_(std::move(boundary)), opts_(opts) {}

DualValueEvaluator::DualValueEvaluator(const GcaBoundary& boundary, numerics::QuadratureOptions opts)
    : DualValueEvaluator(boundary.problem(), [b = boundary](double tau) { return b.z_at(tau); }, opts) {}

double DualValueEvaluator::correction(double tau, double z, int k) const {
    if (tau <= 0.0) {
        return 0.0;
    }
    // s = tau - xi^2: the kernel's 1/sqrt(u) behaviour at s = tau is absorbed by ds = 2 xi dxi.
    auto f = [&](double xi) {
        if (xi == 0.0) return 0.0;
        const double u = xi * xi;
        return stopping_kernel(problem_, u, z, boundary_(tau - u), k) * 2.0 * xi;
    };
    return numerics::integrate(f, 0.0, std::sqrt(tau), opts_);
}

double DualValueEvaluator::tau_checked(double t, double y) const {
    const double T = problem_.market().T;
    if (t < 0.0 || t > T) {
        throw DomainError("DualValueEvaluator: t outside [0, T]");
    }
    if (!(y > 0.0)) {
        throw DomainError("DualValueEvaluator: y must be positive");
    }
    return problem_.tau_at(t);
}

double DualValueEvaluator::value(double t, double y) const {
    const double tau = tau_checked(t, y);
    return problem_.utility().dual_value(y) - correction(tau, std::log(y), 0);
}

double DualValueEvaluator::derivative(double t, double y) const {
    const double tau = tau_checked(t, y);
    return problem_.utility().dual_deriv(y) - correction(tau, std::log(y), 1) / y;
}

double DualValueEvaluator::second_derivative(double t, double y) const {
    const double tau = tau_checked(t, y);
    const double z = std::log(y);
    const double d1 = correction(tau, z, 1);
    const double d2 = correction(tau, z, 2);
    return problem_.utility().dual_second_deriv(y) + (d1 - d2) / (y * y);
}

}  // namespace freebound
