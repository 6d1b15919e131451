#include <cmath>

#include <gtest/gtest.h>

#include "freebound/btm.hpp"
#include "freebound/errors.hpp"
#include "freebound/primal.hpp"
#include "oracles.hpp"

using namespace freebound;

namespace {

const PrimalSolver& power_solver() {
    static const PrimalSolver s{GcaBoundary(oracle::power_problem())};
    return s;
}

const PrimalSolver& non_hara_solver() {
    static const PrimalSolver s{GcaBoundary(oracle::non_hara_problem())};
    return s;
}

}  // namespace

TEST(Primal, TerminalClosedForms) {
    const auto pw = power_solver().solve(1.0, 1.5);
    EXPECT_TRUE(pw.stopped);
    EXPECT_NEAR(pw.y_star, std::sqrt(2.0), 1e-9);
    EXPECT_NEAR(pw.value, 2.0 * std::sqrt(0.5), 1e-9);
    EXPECT_EQ(pw.strategy, 0.0);

    const auto nh = non_hara_solver().solve(1.0, 1.5);
    EXPECT_FALSE(nh.stopped);
    const double y = 1.0 / std::sqrt((std::sqrt(3.0) - 1.0) / 2.0);
    EXPECT_NEAR(nh.y_star, y, 1e-9);
    EXPECT_NEAR(nh.y_star, 1.652892, 1e-6);
    EXPECT_NEAR(nh.value, oracle::dual_sum({-3.0, -1.0}, 1.0, y) + 1.5 * y, 1e-9);
}

TEST(Primal, AgreesWithBinomialTreeAtTheWorkedPoint) {
    for (const auto* s : {&power_solver(), &non_hara_solver()}) {
        const auto gca = s->solve(0.0, 1.5);
        const BtmOracle tree(s->boundary().problem());
        const auto btm = tree.primal(1.5);
        EXPECT_FALSE(gca.stopped);
        EXPECT_NEAR(gca.value, btm.value, 5e-3);
        EXPECT_NEAR(gca.y_star, btm.y, 1e-2);
    }
}

TEST(Primal, EnvelopeCondition) {
    for (const auto* s : {&power_solver(), &non_hara_solver()}) {
        for (double x : {1.2, 1.4}) {
            const double h = 1e-5;
            const double vx = (s->primal_value(0.2, x + h) - s->primal_value(0.2, x - h)) / (2 * h);
            EXPECT_NEAR(vx, s->solve_I(0.2, x), 1e-4) << x;
        }
    }
}

TEST(Primal, ValueIsTheLegendreMinimum) {
    const auto& s = non_hara_solver();
    for (double x : {1.1, 1.3, 1.5}) {
        const double y = s.solve_I(0.0, x);
        const double min = -oracle::maximize([&](double yy) { return -(s.dual().value(0.0, yy) + x * yy); },
                                             0.5 * y, 2.0 * y);
        EXPECT_NEAR(s.primal_value(0.0, x), min, 1e-9) << x;
    }
}

TEST(Primal, StrategyFromPrimalDerivatives) {
    for (const auto* s : {&power_solver(), &non_hara_solver()}) {
        const auto& d = s->boundary().problem().derived();
        const auto& m = s->boundary().problem().market();
        for (double x : {1.2, 1.4}) {
            const double h = 1e-5;
            const double vx = s->solve_I(0.3, x);
            const double vxx = (s->solve_I(0.3, x + h) - s->solve_I(0.3, x - h)) / (2 * h);
            EXPECT_NEAR(s->optimal_strategy(0.3, x), -(d.theta / m.sigma) * vx / vxx, 5e-3) << x;
        }
    }
}

TEST(Primal, IncreasingAndConcaveInWealth) {
    const auto& s = non_hara_solver();
    double prev = s.primal_value(0.0, 1.02);
    double prev_slope = INFINITY;
    for (double x = 1.04; x < 1.7; x += 0.02) {
        const double v = s.primal_value(0.0, x);
        const double slope = (v - prev) / 0.02;
        EXPECT_GT(slope, 0.0) << x;
        EXPECT_LE(slope, prev_slope + 1e-9) << x;
        prev = v;
        prev_slope = slope;
    }
}

TEST(Primal, FloorAndStoppingRegion) {
    const auto& s = power_solver();
    EXPECT_NEAR(s.solve_I(1.0, 1.0 + 1e-12), 1e6, 1e-2);
    EXPECT_THROW(s.solve_I(0.0, 1.0), DomainError);
    EXPECT_THROW(s.solve(0.0, 0.5), DomainError);
    const auto st = s.solve(0.0, 1.7);
    EXPECT_TRUE(st.stopped);
    EXPECT_EQ(st.strategy, 0.0);
    EXPECT_NEAR(st.value, 2.0 * std::sqrt(0.7), 1e-12);
}

TEST(Simulation, NoiseFreePathsGrowAndFreezeAfterTheHit) {
    const auto& s = non_hara_solver();
    const double r = 0.05;
    const auto paths = s.simulate_paths(1.5, 2, 7, {200, true});
    ASSERT_EQ(paths.size(), 2u);
    EXPECT_EQ(paths[0].wealth, paths[1].wealth);
    const auto& p = paths[0];
    ASSERT_EQ(p.wealth.size(), 201u);
    EXPECT_DOUBLE_EQ(p.times.front(), 0.0);
    EXPECT_DOUBLE_EQ(p.times.back(), 1.0);
    EXPECT_EQ(p.wealth.front(), 1.5);
    for (std::size_t i = 1; i < p.wealth.size(); ++i) {
        EXPECT_GT(p.wealth[i], p.wealth[i - 1]);
        if (p.times[i - 1] >= p.stop_time) {
            EXPECT_DOUBLE_EQ(p.wealth[i], p.wealth[i - 1] * std::exp(r * 0.005));
            EXPECT_EQ(p.strategy[i - 1], 0.0);
        }
    }
    EXPECT_LT(p.stop_time, 1.0);
    EXPECT_FALSE(p.floor_clamped);
}

TEST(Simulation, SeedReproducibility) {
    const auto& s = power_solver();
    const auto a = s.simulate_paths(1.4, 3, 99, {100, false});
    const auto b = s.simulate_paths(1.4, 3, 99, {100, false});
    const auto c = s.simulate_paths(1.4, 3, 100, {100, false});
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].wealth, b[i].wealth);
        EXPECT_EQ(a[i].stop_time, b[i].stop_time);
        EXPECT_NE(a[i].wealth, c[i].wealth);
    }
    EXPECT_NE(a[0].wealth, a[1].wealth);
}

TEST(Simulation, Preconditions) {
    const auto& s = power_solver();
    EXPECT_THROW(s.simulate_paths(1.0, 1, 1), DomainError);
    EXPECT_THROW(s.simulate_paths(1.6, 1, 1), DomainError);
    EXPECT_THROW(s.simulate_paths(1.4, 1, 1, {5, false}), DomainError);
    EXPECT_TRUE(s.simulate_paths(1.4, 0, 1).empty());
}
