#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "freebound/problem.hpp"

namespace freebound {

enum class RegimeCase { OneBoundary, TwoBoundaries, NoStopping, StopImmediately };

std::string_view to_string(RegimeCase c) noexcept;

/// Critical discount rates for the non-HARA family: A_1 >= 0 iff beta >= beta1,
/// A_2 <= 0 iff beta <= beta2, discriminant <= 0 iff beta4 <= beta <= beta3.
struct BetaThresholds {
    double beta1;
    double beta2;
    double beta3;
    double beta4;
};

struct Regime {
    RegimeCase case_id;
    std::vector<double> a;   ///< A_j
    double discriminant;     ///< A_2^2 + 4 A_1 nu K (non-HARA); NaN for power
    std::optional<BetaThresholds> thresholds;
    /// tau -> 0 limits (z_I, z_II) of the two boundaries.
    std::optional<std::pair<double, double>> two_boundary_limits;
    /// tau -> 0 limit of the single boundary: z_0 for K > 0, 0.5 log(-A_1/A_2) for K = 0.
    std::optional<double> initial_limit;
};

BetaThresholds non_hara_thresholds(const ModelParams& market);

/// Case implied by beta alone, for the non-HARA family.
RegimeCase regime_from_thresholds(double beta, const BetaThresholds& th, bool floor_positive);

/// Classifies the stopping structure for power and non-HARA families.
/// Throws UnsupportedFamily for custom exponent lists.
Regime classify_regime(const Problem& problem);

}  // namespace freebound
