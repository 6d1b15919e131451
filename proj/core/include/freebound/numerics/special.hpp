#pragma once

namespace freebound::numerics {

/// Complementary error function (libm-backed, about 1 ulp).
double erfc(double x);

/// Standard normal density.
double norm_pdf(double x);

/// Standard normal CDF as erfc(-x / sqrt 2) / 2; no cancellation in either tail.
double norm_cdf(double x);

}  // namespace freebound::numerics
