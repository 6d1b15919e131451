#pragma once

#include <span>
#include <string>
#include <vector>

namespace freebound {

enum class FamilyTag { Power, NonHara, Custom };

/// Dual utility U~_K(y) = sum_j -(1/q_j) y^{q_j} - K y with q_1 < ... < q_J < 0.
///
/// U~_K is the convex conjugate of U(x - K); the primal U is recovered in closed
/// form for the power and non-HARA families and numerically otherwise.
class DualUtilityFamily {
public:
    /// Power utility x^gamma / gamma, gamma in (0, 1): single exponent gamma / (gamma - 1).
    static DualUtilityFamily power(double gamma, double K);
    /// Non-HARA utility with exponents (-3, -1).
    static DualUtilityFamily non_hara(double K);
    /// Arbitrary strictly increasing negative exponents.
    static DualUtilityFamily dual_sum(std::vector<double> exponents, double K);

    FamilyTag tag() const noexcept { return tag_; }
    std::span<const double> exponents() const noexcept { return exponents_; }
    double floor() const noexcept { return K_; }
    /// Power parameter; NaN for other families.
    double gamma() const noexcept { return gamma_; }
    std::string name() const;

    /// Same exponents with a different floor.
    DualUtilityFamily with_floor(double K) const;

    double dual_value(double y) const;
    double dual_deriv(double y) const;
    double dual_second_deriv(double y) const;

    /// Obstacle in log coordinates: g(z) = U~_K(e^z).
    double obstacle_g(double z) const;
    /// g'(z) = e^z U~_K'(e^z) = -sum e^{q_j z} - K e^z.
    double obstacle_g_prime(double z) const;

    /// U(x) (no floor shift), x >= 0, with U(0) = 0.
    double primal_utility(double x) const;
    /// U'(x) for x > 0; the dual root of U~_0'(y) + x = 0.
    double primal_marginal(double x) const;

private:
    DualUtilityFamily(FamilyTag tag, std::vector<double> exponents, double K, double gamma);

    FamilyTag tag_;
    std::vector<double> exponents_;
    double K_;
    double gamma_;
};

/// H(x) = sqrt(2 / (sqrt(1 + 4x) - 1)), evaluated in the cancellation-free form.
double non_hara_h(double x);

}  // namespace freebound
