#pragma once

namespace freebound {

/// Market and preference inputs. Rates per year, T in years, K in currency.
struct ModelParams {
    double mu;     ///< stock drift
    double r;      ///< risk-free rate
    double sigma;  ///< stock volatility
    double beta;   ///< utility discount rate
    double T;      ///< horizon
    double K;      ///< wealth floor

    /// Throws DomainError unless sigma, r, beta, T, mu > 0 and K >= 0.
    void validate() const;
};

/// Constants of the log/time-changed problem z = log y, tau = theta^2 (T - t) / 2.
struct DerivedParams {
    double theta;    ///< market price of risk (mu - r) / sigma
    double nu;       ///< 2 r / theta^2
    double rho;      ///< 2 beta / theta^2
    double kappa;    ///< nu - rho + 1
    double lambda;   ///< negative root of l^2 - kappa l - rho = 0
    double tau_max;  ///< theta^2 T / 2

    /// Dimensionless time to maturity at calendar time t.
    double tau_at(double t, double T) const noexcept { return 0.5 * theta * theta * (T - t); }
    /// Inverse of tau_at.
    double time_at(double tau, double T) const noexcept { return T - 2.0 * tau / (theta * theta); }

    /// Coefficient A_q = q - kappa - rho / q of e^{qz} in L[g].
    double a_coefficient(double q) const noexcept { return q - kappa - rho / q; }
};

inline constexpr double kDegenerateThetaCutoff = 1e-12;

/// Throws DomainError on invalid params and DegenerateMarket when |mu - r| < 1e-12.
DerivedParams derive_params(const ModelParams& p);

}  // namespace freebound
