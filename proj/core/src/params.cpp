#include "freebound/params.hpp"

#include <cmath>
#include <sstream>

#include "freebound/errors.hpp"

namespace freebound {

void ModelParams::validate() const {
    auto require = [](bool ok, const char* what, double value) {
        if (!ok) {
            std::ostringstream os;
            os << "invalid model parameter: " << what << " (got " << value << ")";
            throw DomainError(os.str());
        }
    };
    require(std::isfinite(mu) && mu > 0.0, "mu > 0", mu);
    require(std::isfinite(r) && r > 0.0, "r > 0", r);
    require(std::isfinite(sigma) && sigma > 0.0, "sigma > 0", sigma);
    require(std::isfinite(beta) && beta > 0.0, "beta > 0", beta);
    require(std::isfinite(T) && T > 0.0, "T > 0", T);
    require(std::isfinite(K) && K >= 0.0, "K >= 0", K);
}

DerivedParams derive_params(const ModelParams& p) {
    p.validate();
    if (std::abs(p.mu - p.r) < kDegenerateThetaCutoff) {
        throw DegenerateMarket("degenerate market: |mu - r| < 1e-12 makes theta = 0");
    }
    DerivedParams d{};
    d.theta = (p.mu - p.r) / p.sigma;
    const double theta_sq = d.theta * d.theta;
    d.nu = 2.0 * p.r / theta_sq;
    d.rho = 2.0 * p.beta / theta_sq;
    d.kappa = d.nu - d.rho + 1.0;
    const double disc = std::sqrt(d.kappa * d.kappa + 4.0 * d.rho);
    // kappa - disc loses digits when kappa >> rho; use the product of roots (-rho) instead.
    d.lambda = (d.kappa > 0.0) ? -2.0 * d.rho / (d.kappa + disc) : 0.5 * (d.kappa - disc);
    d.tau_max = 0.5 * theta_sq * p.T;
    return d;
}

}  // namespace freebound
