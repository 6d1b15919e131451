#include "freebound/numerics/special.hpp"

#include <cmath>
#include <numbers>

namespace freebound::numerics {

double erfc(double x) { return std::erfc(x); }

double norm_pdf(double x) {
    constexpr double inv_sqrt_2pi = 0.5 * std::numbers::inv_sqrtpi * std::numbers::sqrt2;
    return inv_sqrt_2pi * std::exp(-0.5 * x * x);
}

double norm_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

}  // namespace freebound::numerics
