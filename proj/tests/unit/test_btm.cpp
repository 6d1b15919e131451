#include <algorithm>
#include <cmath>
#include <functional>

#include <gtest/gtest.h>

#include "freebound/btm.hpp"
#include "freebound/errors.hpp"
#include "freebound/gca.hpp"
#include "oracles.hpp"

using namespace freebound;

namespace {

// Plain recursive lattice, exponential in n; only for tiny trees.
double naive_tree(const Problem& pr, double y0, int n, bool american) {
    const auto& m = pr.market();
    const double dt = m.T / n;
    const double up = std::exp(std::abs(pr.derived().theta) * std::sqrt(dt));
    const double p = (std::exp((m.beta - m.r) * dt) - 1.0 / up) / (up - 1.0 / up);
    const auto& u = pr.utility();
    std::function<double(int, double)> node = [&](int i, double y) {
        if (i == n) return u.dual_value(y);
        const double cont = std::exp(-m.beta * dt) * (p * node(i + 1, y * up) + (1 - p) * node(i + 1, y / up));
        return american ? std::max(cont, u.dual_value(y)) : cont;
    };
    return node(0, y0);
}

}  // namespace

TEST(Tree, EuropeanAgainstClosedForm) {
    for (const auto& pr : {oracle::power_problem(), oracle::non_hara_problem()}) {
        for (double y : {0.7, 1.4, 2.5}) {
            const double tree = tree_value(pr, {700, y, false}, false).value_at_root;
            EXPECT_NEAR(tree, european_closed_form(pr, y), 1e-4) << y;
        }
    }
}

TEST(Tree, EuropeanClosedFormByQuadrature) {
    const auto pr = oracle::non_hara_problem();
    const auto& m = pr.market();
    const double theta = pr.derived().theta, y = 1.3;
    // log Y_T ~ N(log y + (beta - r - theta^2 / 2) T, theta^2 T)
    const double mean = std::log(y) + (m.beta - m.r - 0.5 * theta * theta) * m.T;
    const double sd = std::abs(theta) * std::sqrt(m.T);
    const double expect = oracle::integrate(
        [&](double s) {
            return std::exp(-0.5 * s * s) / std::sqrt(2 * M_PI) *
                   oracle::dual_sum({-3.0, -1.0}, 1.0, std::exp(mean + sd * s));
        },
        -12.0, 12.0);
    EXPECT_NEAR(european_closed_form(pr, y), std::exp(-m.beta * m.T) * expect, 1e-11);
}

TEST(Tree, MatchesNaiveRecursion) {
    for (const auto& pr : {oracle::power_problem(), oracle::non_hara_problem()}) {
        for (bool american : {false, true}) {
            EXPECT_NEAR(tree_value(pr, {9, 1.3, false}, american).value_at_root, naive_tree(pr, 1.3, 9, american),
                        1e-13);
        }
    }
}

TEST(Tree, AmericanDominatesEuropeanAndPayoff) {
    const auto pr = oracle::power_problem();
    for (double y : {0.5, 1.0, 1.4, 2.0}) {
        const double am = tree_value(pr, {400, y, false}, true).value_at_root;
        EXPECT_GE(am, tree_value(pr, {400, y, false}, false).value_at_root);
        EXPECT_GE(am, pr.utility().dual_value(y));
    }
}

TEST(Tree, ProbabilityOutOfRange) {
    auto m = oracle::reference_market();
    m.mu = m.r + 1e-6;
    const Problem pr(m, DualUtilityFamily::power(0.5, 1.0));
    EXPECT_THROW(tree_value(pr, {700, 1.0, false}, true), ProbabilityOutOfRange);
    EXPECT_THROW(tree_value(oracle::power_problem(), {1, 1.0, false}, true), DomainError);
    EXPECT_THROW(tree_value(oracle::power_problem(), {10, 0.0, false}, true), DomainError);
}

TEST(Oracle, InitialDualPriceNearTheGcaRoot) {
    const BtmOracle pw(oracle::power_problem());
    EXPECT_NEAR(pw.find_initial_y(1.5), 1.39948, 1e-2);
    const BtmOracle nh(oracle::non_hara_problem());
    EXPECT_NEAR(nh.find_initial_y(1.5), 1.58019, 1e-2);
    EXPECT_THROW(nh.find_initial_y(1.0), DomainError);
}

TEST(Oracle, ShortHorizonCollapsesToThePayoff) {
    auto m = oracle::reference_market();
    m.T = 1e-4;
    const Problem pr(m, DualUtilityFamily::non_hara(1.0));
    const BtmOracle tree(pr, 200);
    for (double y : {0.5, 1.0, 2.0}) {
        EXPECT_NEAR(tree.value(y), pr.utility().dual_value(y), 1e-3 * (1.0 + std::abs(pr.utility().dual_value(y))));
    }
}

TEST(Oracle, DecreasingAndConvexInRootPrice) {
    const BtmOracle tree(oracle::non_hara_problem(), 300);
    std::vector<double> v;
    for (double y = 0.5; y <= 3.0; y += 0.25) v.push_back(tree.value(y));
    for (std::size_t i = 1; i < v.size(); ++i) EXPECT_LT(v[i], v[i - 1]);
    for (std::size_t i = 1; i + 1 < v.size(); ++i) EXPECT_GE(v[i - 1] - 2 * v[i] + v[i + 1], -1e-6);
}

TEST(Oracle, RefinementConverges) {
    const auto pr = oracle::non_hara_problem();
    const double fine = BtmOracle(pr, 1600).value(1.5);
    const double e200 = std::abs(BtmOracle(pr, 200).value(1.5) - fine);
    const double e800 = std::abs(BtmOracle(pr, 800).value(1.5) - fine);
    EXPECT_LT(e800, e200);
    EXPECT_LT(e800, 1e-4);
}

TEST(Oracle, PrimalReadOut) {
    const BtmOracle tree(oracle::non_hara_problem());
    const auto p = tree.primal(1.5);
    EXPECT_FALSE(p.stopped);
    EXPECT_NEAR(p.value, tree.value(p.y) + 1.5 * p.y, 1e-12);
    EXPECT_NEAR(p.strategy / 1.5, 0.6845, 3e-3);
    const auto s = tree.primal(1.9);
    EXPECT_TRUE(s.stopped);
    EXPECT_EQ(s.strategy, 0.0);
}

TEST(Oracle, BoundaryTracksTheGcaCurve) {
    const auto pr = oracle::non_hara_problem();
    const BtmOracle tree(pr);
    const GcaBoundary gca(pr);
    const auto pts = tree.boundary(1.5);
    ASSERT_GT(pts.size(), 50u);
    for (const auto& p : pts) {
        EXPECT_GT(p.x, 1.0);
        EXPECT_NEAR(std::log(p.y), gca.z_at(pr.tau_at(p.t)), 0.05) << p.t;
    }
    EXPECT_NEAR(pts.back().x, gca.primal_boundary(1.0), 0.05);
}
