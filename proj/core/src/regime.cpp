#include "freebound/regime.hpp"

#include <cmath>
#include <limits>

#include "freebound/errors.hpp"

namespace freebound {

std::string_view to_string(RegimeCase c) noexcept {
    switch (c) {
        case RegimeCase::OneBoundary:
            return "OneBoundary";
        case RegimeCase::TwoBoundaries:
            return "TwoBoundaries";
        case RegimeCase::NoStopping:
            return "NoStopping";
        case RegimeCase::StopImmediately:
            return "StopImmediately";
    }
    return "Unknown";
}

BetaThresholds non_hara_thresholds(const ModelParams& m) {
    const double theta = (m.mu - m.r) / m.sigma;
    const double th2 = theta * theta;
    BetaThresholds th{};
    th.beta1 = 1.5 * th2 + 0.75 * m.r;
    th.beta2 = 0.5 * th2 + 0.5 * m.r;
    const double root = std::sqrt(m.r * m.K * (4.0 / 3.0 * th2 + m.r / 3.0) + 4.0 / 9.0 * m.r * m.r * m.K * m.K);
    th.beta3 = th.beta2 + root - 2.0 / 3.0 * m.r * m.K;
    th.beta4 = th.beta2 - root - 2.0 / 3.0 * m.r * m.K;
    return th;
}

RegimeCase regime_from_thresholds(double beta, const BetaThresholds& th, bool floor_positive) {
    if (floor_positive) {
        if (beta >= th.beta1) return RegimeCase::OneBoundary;
        if (beta > th.beta3) return RegimeCase::TwoBoundaries;
        return RegimeCase::NoStopping;
    }
    if (beta >= th.beta1) return RegimeCase::StopImmediately;
    if (beta > th.beta2) return RegimeCase::OneBoundary;
    return RegimeCase::NoStopping;
}

Regime classify_regime(const Problem& problem) {
    const auto& m = problem.market();
    const auto& d = problem.derived();
    const auto& u = problem.utility();
    const auto& a = problem.a_coefficients();
    const double K = m.K;
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();

    Regime out{};
    out.a = a;
    out.discriminant = nan;

    if (u.tag() == FamilyTag::Power) {
        const double q = u.exponents().front();
        if (K > 0.0) {
            out.case_id = a[0] > 0.0 ? RegimeCase::OneBoundary : RegimeCase::NoStopping;
            if (a[0] > 0.0) {
                out.initial_limit = std::log(K * d.nu / a[0]) / (q - 1.0);
            }
        } else {
            out.case_id = a[0] >= 0.0 ? RegimeCase::StopImmediately : RegimeCase::NoStopping;
        }
        return out;
    }
    if (u.tag() != FamilyTag::NonHara) {
        throw UnsupportedFamily("classify_regime: only power and non_hara families can be classified");
    }

    const double a1 = a[0];
    const double a2 = a[1];
    out.thresholds = non_hara_thresholds(m);
    out.discriminant = a2 * a2 + 4.0 * a1 * d.nu * K;

    if (K > 0.0) {
        if (a1 >= 0.0) {
            out.case_id = RegimeCase::OneBoundary;
            if (a1 > 0.0) {
                out.initial_limit = -0.5 * std::log((-a2 + std::sqrt(out.discriminant)) / (2.0 * a1));
            }
        } else if (a2 > 0.0 && out.discriminant > 0.0) {
            out.case_id = RegimeCase::TwoBoundaries;
            const double s = std::sqrt(out.discriminant);
            const double z_lo = -0.5 * std::log((-a2 - s) / (2.0 * a1));
            const double z_hi = -0.5 * std::log((-a2 + s) / (2.0 * a1));
            out.two_boundary_limits = std::make_pair(z_lo, z_hi);
        } else {
            out.case_id = RegimeCase::NoStopping;
        }
        return out;
    }

    if (a1 >= 0.0) {
        out.case_id = RegimeCase::StopImmediately;
    } else if (a2 > 0.0) {
        out.case_id = RegimeCase::OneBoundary;
        out.initial_limit = 0.5 * std::log(-a1 / a2);
    } else {
        out.case_id = RegimeCase::NoStopping;
    }
    return out;
}

}  // namespace freebound
