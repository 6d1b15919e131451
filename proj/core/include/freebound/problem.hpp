#pragma once

#include <vector>

#include "freebound/dual_utility.hpp"
#include "freebound/params.hpp"

namespace freebound {

/// Market, derived constants, and dual utility bundled together; immutable.
class Problem {
public:
    /// Validates params, derives constants, and attaches the floor K to `utility`.
    Problem(const ModelParams& market, const DualUtilityFamily& utility);

    const ModelParams& market() const noexcept { return market_; }
    const DerivedParams& derived() const noexcept { return derived_; }
    const DualUtilityFamily& utility() const noexcept { return utility_; }

    /// A_j = q_j - kappa - rho / q_j for each exponent, ascending.
    const std::vector<double>& a_coefficients() const noexcept { return a_; }

    double tau_at(double t) const noexcept { return derived_.tau_at(t, market_.T); }
    double time_at(double tau) const noexcept { return derived_.time_at(tau, market_.T); }

private:
    ModelParams market_;
    DerivedParams derived_;
    DualUtilityFamily utility_;
    std::vector<double> a_;
};

/// Checks K > 0 and A_1 > 0. On success returns the A_j (all positive);
/// otherwise throws AssumptionViolated naming K or A1.
std::vector<double> validate_assumption(const Problem& problem);

/// Non-throwing form of validate_assumption.
bool assumption_holds(const Problem& problem) noexcept;

}  // namespace freebound
