#include "freebound/gca.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <optional>
#include <sstream>

#include "freebound/errors.hpp"
#include "freebound/green.hpp"
#include "freebound/numerics/roots.hpp"

namespace freebound {

namespace {

constexpr double kClosedFormTol = 1e-9;
constexpr double kBracketLimit = 50.0;

// Root in z of c_1 w^2 + c_2 w - c_0 = 0 with w = e^{-2z}, c_1, c_0 > 0.
double quadratic_log_root(double c1, double c2, double c0) {
    const double disc = std::sqrt(c2 * c2 + 4.0 * c1 * c0);
    // Positive root written to avoid cancellation when c2 > 0.
    const double w = c2 > 0.0 ? 2.0 * c0 / (c2 + disc) : (disc - c2) / (2.0 * c1);
    return -0.5 * std::log(w);
}

std::optional<double> z0_closed_form(const Problem& pr) {
    const auto& u = pr.utility();
    const auto& a = pr.a_coefficients();
    const double nuK = pr.derived().nu * pr.market().K;
    if (u.tag() == FamilyTag::Power) {
        const double q = u.exponents().front();
        return std::log(nuK / a[0]) / (q - 1.0);
    }
    if (u.tag() == FamilyTag::NonHara) {
        // A_1 e^{-3z} + A_2 e^{-z} - nu K e^z = 0, times e^{z}.
        return quadratic_log_root(a[0], a[1], nuK);
    }
    return std::nullopt;
}

std::optional<double> z_star_closed_form(const Problem& pr) {
    const auto& u = pr.utility();
    const double lam = pr.derived().lambda;
    const double c0 = pr.market().K * (1.0 - lam);
    if (u.tag() == FamilyTag::Power) {
        const double q = u.exponents().front();
        return std::log(-q * c0 / (q - lam)) / (q - 1.0);
    }
    if (u.tag() == FamilyTag::NonHara) {
        const double c1 = (3.0 + lam) / -3.0;
        const double c2 = -1.0 - lam;
        return quadratic_log_root(c1, c2, c0);
    }
    return std::nullopt;
}

double checked_root(const numerics::ScalarFunction& f, std::optional<double> closed, const char* what) {
    const double center = closed ? *closed : 0.0;
    const double half = closed ? 1.0 : 10.0;
    auto br = numerics::expand_bracket(f, center, half, kBracketLimit);
    br.tol_abs = 0.0;
    br.tol_rel = 1e-14;
    const double root = numerics::find_root(f, br);
    if (closed && std::abs(root - *closed) > kClosedFormTol) {
        std::ostringstream os;
        os << what << ": root " << root << " disagrees with closed form " << *closed;
        throw NumericalError(os.str());
    }
    return root;
}

}  // namespace

double stopping_kernel(const Problem& pr, double u, double z, double a, int k) {
    const auto& d = pr.derived();
    const auto qs = pr.utility().exponents();
    const auto& as = pr.a_coefficients();
    double sum = 0.0;
    for (std::size_t j = 0; j < qs.size(); ++j) {
        sum += as[j] * tail_integral(u, z, a, qs[j], d.kappa, d.rho, k);
    }
    const double K = pr.market().K;
    if (K != 0.0) {
        sum -= d.nu * K * tail_integral(u, z, a, 1.0, d.kappa, d.rho, k);
    }
    return sum;
}

double phi(const Problem& pr, double z) {
    const auto qs = pr.utility().exponents();
    const auto& as = pr.a_coefficients();
    double sum = 0.0;
    for (std::size_t j = 0; j < qs.size(); ++j) {
        sum += as[j] * std::exp(qs[j] * z);
    }
    return sum - pr.derived().nu * pr.market().K * std::exp(z);
}

double p_func(const Problem& pr, double z) {
    validate_assumption(pr);
    const double lam = pr.derived().lambda;
    double sum = 0.0;
    for (double q : pr.utility().exponents()) {
        sum += -(q - lam) / q * std::exp((q - 1.0) * z);
    }
    return sum - pr.market().K * (1.0 - lam);
}

double solve_z0(const Problem& pr) {
    validate_assumption(pr);
    return checked_root([&](double z) { return phi(pr, z); }, z0_closed_form(pr), "solve_z0");
}

double solve_z_star(const Problem& pr) {
    validate_assumption(pr);
    return checked_root([&](double z) { return p_func(pr, z); }, z_star_closed_form(pr), "solve_z_star");
}

double universal_residual(double a) {
    const auto& rule = numerics::gauss_legendre(64);
    const double a2 = a * a;
    const double inner = rule.integrate(
        [a2](double s) {
            const double s2 = s * s;
            const double den = 1.0 + s2;
            return std::exp(-a2 * s2) * (3.0 * s2 + s2 * s2) / (den * den);
        },
        0.0, 1.0);
    return 0.5 * std::exp(-a2) - 0.5 * std::sqrt(std::numbers::pi) * a + a2 * inner;
}

double universal_constant_A() {
    static const double value = [] {
        numerics::Bracket br{0.1, 2.0};
        br.tol_abs = 0.0;
        br.tol_rel = 0.0;
        const double a = numerics::find_root(universal_residual, br);
        if (std::abs(universal_residual(a)) >= 1e-12 || std::abs(a - kUniversalAReference) > 1e-12) {
            std::ostringstream os;
            os.precision(17);
            os << "universal_constant_A: root " << a << " failed its self-check";
            throw NumericalError(os.str());
        }
        return a;
    }();
    return value;
}

GcaBoundary::GcaBoundary(const Problem& problem)
    : problem_(problem),
      z0_(solve_z0(problem)),
      z_star_(solve_z_star(problem)),
      A_(universal_constant_A()) {
    const double gap = z0_ - z_star_;
    if (!(gap > 0.0)) {
        throw NumericalError("GcaBoundary: long-time limit is not below the terminal boundary");
    }
    b_ = 4.0 * A_ * A_ / (gap * gap);
}

double GcaBoundary::z_at(double tau) const {
    if (tau < 0.0) {
        throw DomainError("GcaBoundary::z_at: tau must be non-negative");
    }
    return z0_ - (z0_ - z_star_) * std::sqrt(-std::expm1(-b_ * tau));
}

double GcaBoundary::dz_at(double tau) const {
    if (!(tau > 0.0)) {
        throw DomainError("GcaBoundary::dz_at: tau must be positive");
    }
    const double one_minus = -std::expm1(-b_ * tau);
    return -(z0_ - z_star_) * b_ * std::exp(-b_ * tau) / (2.0 * std::sqrt(one_minus));
}

bool GcaBoundary::beyond_horizon(double tau) const noexcept {
    return tau > problem_.derived().tau_max;
}

double GcaBoundary::primal_boundary(double t) const {
    const double T = problem_.market().T;
    if (t < 0.0 || t > T) {
        throw DomainError("GcaBoundary::primal_boundary: t outside [0, T]");
    }
    const double z = z_at(problem_.tau_at(t));
    double x = problem_.market().K;
    for (double q : problem_.utility().exponents()) {
        x += std::exp((q - 1.0) * z);
    }
    return x;
}

BoundaryCurve GcaBoundary::curve() const {
    return BoundaryCurve{[self = *this](double tau) { return self.z_at(tau); },
                         [self = *this](double tau) { return self.dz_at(tau); }};
}

double integral_equation_residual(const Problem& pr, const BoundaryCurve& curve, double tau,
                                  const numerics::QuadratureOptions& opts) {
    if (!(tau > 0.0)) {
        throw DomainError("integral_equation_residual: tau must be positive");
    }
    const auto& d = pr.derived();
    const double z0 = curve.z(0.0);
    const double zt = curve.z(tau);
    const double first = -stopping_kernel(pr, tau, zt, z0, 0);

    auto integrand = [&](double s) {
        return green(tau - s, zt - curve.z(s), d.kappa, d.rho) * phi(pr, curve.z(s)) * curve.dz(s);
    };
    const double half = 0.5 * tau;
    const double left = numerics::integrate(
        [&](double eta) {
            if (eta == 0.0) return 0.0;
            return integrand(eta * eta) * 2.0 * eta;
        },
        0.0, std::sqrt(half), opts);
    const double right = numerics::integrate(
        [&](double xi) {
            if (xi == 0.0) return 0.0;
            return integrand(tau - xi * xi) * 2.0 * xi;
        },
        0.0, std::sqrt(half), opts);
    return first + left + right;
}

}  // namespace freebound
