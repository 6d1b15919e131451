#pragma once

namespace freebound {

/// Fundamental solution of v_tau - v_zz + kappa v_z + rho v = 0:
/// G(u, x) = exp(-(x - kappa u)^2 / (4u) - rho u) / sqrt(4 pi u). DomainError for u <= 0.
double green(double u, double x, double kappa, double rho);

/// Closed form of  d^k/dz^k  integral_a^inf G(u, z - w) e^{q w} dw  for k = 0, 1, 2:
///
///   e^{qz + (q^2 - kappa q - rho) u} N(d),   d = (z - a - (kappa - 2q) u) / sqrt(2u).
///
/// DomainError for u <= 0 or k outside {0, 1, 2}.
double tail_integral(double u, double z, double a, double q, double kappa, double rho, int z_derivative = 0);

}  // namespace freebound
