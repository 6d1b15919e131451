#include "freebound/numerics/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "freebound/errors.hpp"

namespace freebound::numerics {

double find_root(const ScalarFunction& f, const Bracket& bracket) {
    if (!(bracket.lo < bracket.hi)) {
        throw DomainError("find_root: bracket requires lo < hi");
    }
    double a = bracket.lo;
    double b = bracket.hi;
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0)) {
        std::ostringstream os;
        os << "find_root: no sign change on [" << a << ", " << b << "] (f = " << fa << ", " << fb << ")";
        throw NoSignChange(os.str());
    }

    // Brent (1973), zero(): b is the best estimate, c the previous contrapoint.
    double c = a;
    double fc = fa;
    double d = b - a;
    double e = d;
    for (int iter = 0; iter < bracket.max_iter; ++iter) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) +
                          0.5 * (bracket.tol_rel * std::abs(b) + bracket.tol_abs);
        const double m = 0.5 * (c - b);
        if (std::abs(m) <= tol || std::abs(fb) <= bracket.tol_abs) {
            return b;
        }
        if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
            double p;
            double q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                const double qa = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) {
                q = -q;
            } else {
                p = -p;
            }
            if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        } else {
            d = m;
            e = m;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol) ? d : (m > 0.0 ? tol : -tol);
        fb = f(b);
    }
    std::ostringstream os;
    os << "find_root: no convergence after " << bracket.max_iter << " iterations";
    throw MaxIterExceeded(os.str());
}

Bracket expand_bracket(const ScalarFunction& f, double center, double half_width, double limit) {
    double w = half_width;
    while (true) {
        const double lo = std::max(center - w, -limit);
        const double hi = std::min(center + w, limit);
        const double flo = f(lo);
        const double fhi = f(hi);
        if (std::isfinite(flo) && std::isfinite(fhi) && (flo <= 0.0) != (fhi <= 0.0)) {
            return Bracket{lo, hi};
        }
        if (lo <= -limit && hi >= limit) break;
        w *= 2.0;
    }
    std::ostringstream os;
    os << "expand_bracket: no sign change within |z| <= " << limit;
    throw BracketFailure(os.str());
}

Bracket decade_scan(const ScalarFunction& f, double start, double y_min, double y_max) {
    const double f0 = f(start);
    if (f0 == 0.0) {
        return Bracket{start, start};
    }
    double lo = start;
    double hi = start;
    if (f0 > 0.0) {
        do {
            hi = lo;
            lo = hi / 10.0;
            if (lo < y_min) throw ScanFailure("decade_scan: no sign change above the lower scan limit");
        } while (f(lo) > 0.0);
    } else {
        do {
            lo = hi;
            hi = lo * 10.0;
            if (hi > y_max) throw ScanFailure("decade_scan: no sign change below the upper scan limit");
        } while (f(hi) < 0.0);
    }
    return Bracket{lo, hi};
}

}  // namespace freebound::numerics
