#pragma once

#include <functional>

#include "freebound/numerics/quadrature.hpp"
#include "freebound/problem.hpp"

namespace freebound {

/// phi(z) = L[g](z) = sum_j A_j e^{q_j z} - nu K e^z.
double phi(const Problem& problem, double z);

/// J(u, z; a) = int_a^inf G(u, z - w) phi(w) dw and its z-derivatives (k = 0, 1, 2) in closed form.
double stopping_kernel(const Problem& problem, double u, double z, double a, int k);

/// p(z) = sum_j -(1/q_j)(q_j - lambda) e^{(q_j - 1) z} - K (1 - lambda); its root is the
/// long-time limit of the boundary. Throws AssumptionViolated.
double p_func(const Problem& problem, double z);

/// Root of phi. For the power and non-HARA families the closed form is checked
/// against the root to 1e-9 (NumericalError on disagreement). BracketFailure when
/// no sign change is found within |z| <= 50.
double solve_z0(const Problem& problem);

/// Root of p_func, with the same closed-form check.
double solve_z_star(const Problem& problem);

/// F(A) = e^{-A^2}/2 - (sqrt(pi)/2) A + A^2 int_0^1 e^{-A^2 s^2} (3s^2 + s^4) / (1 + s^2)^2 ds,
/// inner integral at Gauss-Legendre order 64.
double universal_residual(double a);

/// Positive root of universal_residual, bracketed on [0.1, 2]. Computed once;
/// throws NumericalError if the root fails its self-check.
double universal_constant_A();

/// High-precision value of the root of universal_residual.
inline constexpr double kUniversalAReference = 0.562907657024788;

/// A boundary curve z(tau) and its derivative, for residual diagnostics.
struct BoundaryCurve {
    std::function<double(double)> z;
    std::function<double(double)> dz;
};

/// Closed-form boundary z(tau) = z0 - (z0 - z*) sqrt(1 - exp(-b tau)), b = 4A^2 / (z0 - z*)^2.
class GcaBoundary {
public:
    /// Throws AssumptionViolated unless K > 0 and A_1 > 0.
    explicit GcaBoundary(const Problem& problem);

    const Problem& problem() const noexcept { return problem_; }
    double z0() const noexcept { return z0_; }
    double z_star() const noexcept { return z_star_; }
    double A() const noexcept { return A_; }
    double b_star() const noexcept { return b_; }

    /// Boundary in log dual price. Defined for every tau >= 0; DomainError for tau < 0.
    double z_at(double tau) const;
    /// dz/dtau; diverges like -A / sqrt(tau) at tau = 0.
    double dz_at(double tau) const;
    /// True when tau lies past the model horizon tau_max.
    bool beyond_horizon(double tau) const noexcept;

    /// Wealth boundary x(t) = -U~_K'(exp z(tau(t))), t in [0, T].
    double primal_boundary(double t) const;

    BoundaryCurve curve() const;

private:
    Problem problem_;
    double z0_;
    double z_star_;
    double A_;
    double b_;
};

/// Residual of the boundary integral equation at tau for a trial curve:
///
///   -int_{z0}^inf G(tau, z(tau) - w) phi(w) dw + int_0^tau G(tau - s, z(tau) - z(s)) phi(z(s)) z'(s) ds.
///
/// Vanishes for the exact boundary. The first term is in closed form; the second
/// is split at tau/2 with s = eta^2 on the left and s = tau - xi^2 on the right.
double integral_equation_residual(const Problem& problem, const BoundaryCurve& curve, double tau,
                                  const numerics::QuadratureOptions& opts = {32, true, 1e-11, 40});

}  // namespace freebound
