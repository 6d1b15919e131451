#include "freebound/green.hpp"

#include <cmath>
#include <numbers>

#include "freebound/errors.hpp"
#include "freebound/numerics/special.hpp"

namespace freebound {

double green(double u, double x, double kappa, double rho) {
    if (!(u > 0.0)) {
        throw DomainError("green: elapsed time must be positive");
    }
    const double m = x - kappa * u;
    return std::exp(-m * m / (4.0 * u) - rho * u) / std::sqrt(4.0 * std::numbers::pi * u);
}

double tail_integral(double u, double z, double a, double q, double kappa, double rho, int z_derivative) {
    if (!(u > 0.0)) {
        throw DomainError("tail_integral: elapsed time must be positive");
    }
    const double s = std::sqrt(2.0 * u);
    const double d = (z - a - (kappa - 2.0 * q) * u) / s;
    const double e = std::exp(q * z + (q * q - kappa * q - rho) * u);
    const double N = numerics::norm_cdf(d);
    switch (z_derivative) {
        case 0:
            return e * N;
        case 1:
            return e * (q * N + numerics::norm_pdf(d) / s);
        case 2: {
            const double n = numerics::norm_pdf(d);
            return e * (q * q * N + 2.0 * q * n / s - d * n / (2.0 * u));
        }
        default:
            throw DomainError("tail_integral: z_derivative must be 0, 1 or 2");
    }
}

}  // namespace freebound
