#pragma once

#include <functional>

namespace freebound::numerics {

using ScalarFunction = std::function<double(double)>;

struct Bracket {
    double lo;
    double hi;
    double tol_abs = 1e-12;
    double tol_rel = 1e-12;
    int max_iter = 200;
};

/// Brent's method (bisection safeguarding inverse quadratic / secant steps).
///
/// Stops when |f(x)| <= tol_abs or the bracketing interval is narrower than
/// tol_rel * |x| + tol_abs. The returned root always lies inside [lo, hi].
/// Throws NoSignChange when f(lo) and f(hi) have the same strict sign, and
/// MaxIterExceeded after max_iter iterations.
double find_root(const ScalarFunction& f, const Bracket& bracket);

/// Grows [center - half_width, center + half_width] by doubling the half
/// width until f changes sign or the interval would leave [-limit, limit].
/// Throws BracketFailure when no sign change is found.
Bracket expand_bracket(const ScalarFunction& f, double center, double half_width, double limit);

/// For f increasing on (0, inf): starting at y = start, divides y by 10 while
/// f(y) > 0 or multiplies by 10 while f(y) < 0, returning the decade [lo, hi]
/// that contains the sign change. Throws ScanFailure outside [y_min, y_max].
Bracket decade_scan(const ScalarFunction& f, double start = 1.0, double y_min = 1e-12, double y_max = 1e12);

}  // namespace freebound::numerics
