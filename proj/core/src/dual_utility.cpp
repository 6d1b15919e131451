#include "freebound/dual_utility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "freebound/errors.hpp"
#include "freebound/numerics/roots.hpp"

namespace freebound {

namespace {

void require_positive(double y, const char* where) {
    if (!(y > 0.0) || !std::isfinite(y)) {
        std::ostringstream os;
        os << where << ": argument must be positive and finite (got " << y << ")";
        throw DomainError(os.str());
    }
}

}  // namespace

DualUtilityFamily::DualUtilityFamily(FamilyTag tag, std::vector<double> exponents, double K, double gamma)
    : tag_(tag), exponents_(std::move(exponents)), K_(K), gamma_(gamma) {
    if (exponents_.empty()) {
        throw DomainError("dual utility: at least one exponent required");
    }
    for (std::size_t j = 0; j < exponents_.size(); ++j) {
        if (!(exponents_[j] < 0.0) || !std::isfinite(exponents_[j])) {
            throw DomainError("dual utility: exponents must be negative");
        }
        if (j > 0 && !(exponents_[j - 1] < exponents_[j])) {
            throw DomainError("dual utility: exponents must be strictly increasing");
        }
    }
    if (!(K_ >= 0.0) || !std::isfinite(K_)) {
        throw DomainError("dual utility: floor K must be >= 0");
    }
}

DualUtilityFamily DualUtilityFamily::power(double gamma, double K) {
    if (!(gamma > 0.0 && gamma < 1.0)) {
        throw DomainError("power utility: gamma must lie in (0, 1)");
    }
    return DualUtilityFamily(FamilyTag::Power, {gamma / (gamma - 1.0)}, K, gamma);
}

DualUtilityFamily DualUtilityFamily::non_hara(double K) {
    return DualUtilityFamily(FamilyTag::NonHara, {-3.0, -1.0}, K,
                             std::numeric_limits<double>::quiet_NaN());
}

DualUtilityFamily DualUtilityFamily::dual_sum(std::vector<double> exponents, double K) {
    return DualUtilityFamily(FamilyTag::Custom, std::move(exponents), K,
                             std::numeric_limits<double>::quiet_NaN());
}

std::string DualUtilityFamily::name() const {
    switch (tag_) {
        case FamilyTag::Power: {
            std::ostringstream os;
            os << "power(gamma=" << gamma_ << ")";
            return os.str();
        }
        case FamilyTag::NonHara:
            return "non_hara";
        case FamilyTag::Custom:
            break;
    }
    std::ostringstream os;
    os << "dual_sum(q=";
    for (std::size_t j = 0; j < exponents_.size(); ++j) {
        os << (j ? "," : "") << exponents_[j];
    }
    os << ")";
    return os.str();
}

DualUtilityFamily DualUtilityFamily::with_floor(double K) const {
    return DualUtilityFamily(tag_, exponents_, K, gamma_);
}

double DualUtilityFamily::dual_value(double y) const {
    require_positive(y, "dual_value");
    double sum = -K_ * y;
    for (double q : exponents_) {
        sum -= std::pow(y, q) / q;
    }
    return sum;
}

double DualUtilityFamily::dual_deriv(double y) const {
    require_positive(y, "dual_deriv");
    double sum = -K_;
    for (double q : exponents_) {
        sum -= std::pow(y, q - 1.0);
    }
    return sum;
}

double DualUtilityFamily::dual_second_deriv(double y) const {
    require_positive(y, "dual_second_deriv");
    double sum = 0.0;
    for (double q : exponents_) {
        sum += (1.0 - q) * std::pow(y, q - 2.0);
    }
    return sum;
}

double DualUtilityFamily::obstacle_g(double z) const {
    double sum = -K_ * std::exp(z);
    for (double q : exponents_) {
        sum -= std::exp(q * z) / q;
    }
    return sum;
}

double DualUtilityFamily::obstacle_g_prime(double z) const {
    double sum = -K_ * std::exp(z);
    for (double q : exponents_) {
        sum -= std::exp(q * z);
    }
    return sum;
}

double non_hara_h(double x) {
    // 2 / (sqrt(1 + 4x) - 1) == (sqrt(1 + 4x) + 1) / (2x)
    return std::sqrt((std::sqrt(1.0 + 4.0 * x) + 1.0) / (2.0 * x));
}

double DualUtilityFamily::primal_marginal(double x) const {
    require_positive(x, "primal_marginal");
    switch (tag_) {
        case FamilyTag::Power:
            return std::pow(x, gamma_ - 1.0);
        case FamilyTag::NonHara:
            return non_hara_h(x);
        case FamilyTag::Custom:
            break;
    }
    // sum_j e^{(q_j - 1) s} = x, strictly decreasing in s = log y.
    auto f = [this, x](double s) {
        double sum = -x;
        for (double q : exponents_) {
            sum += std::exp((q - 1.0) * s);
        }
        return sum;
    };
    const double guess = -std::log(x) / (1.0 - exponents_.back());
    numerics::Bracket b = numerics::expand_bracket(f, guess, 1.0, 700.0);
    b.tol_abs = 0.0;
    b.tol_rel = 1e-15;
    return std::exp(numerics::find_root(f, b));
}

double DualUtilityFamily::primal_utility(double x) const {
    if (!(x >= 0.0) || !std::isfinite(x)) {
        std::ostringstream os;
        os << "primal_utility: x must be >= 0 (got " << x << ")";
        throw DomainError(os.str());
    }
    if (x == 0.0) return 0.0;
    if (tag_ == FamilyTag::Power) {
        return std::pow(x, gamma_) / gamma_;
    }
    if (tag_ == FamilyTag::NonHara) {
        const double h = non_hara_h(x);
        return 1.0 / (3.0 * h * h * h) + 1.0 / h + x * h;
    }
    // U(x) = inf_y [U~_0(y) + x y], attained where U~_0'(y) = -x.
    const double y = primal_marginal(x);
    double sum = x * y;
    for (double q : exponents_) {
        sum -= std::pow(y, q) / q;
    }
    return sum;
}

}  // namespace freebound
