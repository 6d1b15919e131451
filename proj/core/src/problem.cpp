#include "freebound/problem.hpp"

#include "freebound/errors.hpp"

namespace freebound {

Problem::Problem(const ModelParams& market, const DualUtilityFamily& utility)
    : market_(market), derived_(derive_params(market)), utility_(utility.with_floor(market.K)) {
    for (double q : utility_.exponents()) {
        a_.push_back(derived_.a_coefficient(q));
    }
}

std::vector<double> validate_assumption(const Problem& problem) {
    const double K = problem.market().K;
    if (!(K > 0.0)) {
        throw AssumptionViolated("K", K);
    }
    const double a1 = problem.a_coefficients().front();
    if (!(a1 > 0.0)) {
        throw AssumptionViolated("A1", a1);
    }
    return problem.a_coefficients();
}

bool assumption_holds(const Problem& problem) noexcept {
    return problem.market().K > 0.0 && problem.a_coefficients().front() > 0.0;
}

}  // namespace freebound
