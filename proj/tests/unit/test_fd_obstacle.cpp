#include <cmath>

#include <gtest/gtest.h>

#include "freebound/btm.hpp"
#include "freebound/errors.hpp"
#include "freebound/fd_obstacle.hpp"
#include "freebound/gca.hpp"
#include "oracles.hpp"

using namespace freebound;

namespace {

const FdSolution& non_hara_solution() {
    static const FdSolution s = solve_obstacle(oracle::non_hara_problem(),
                                               FdConfig::defaults(oracle::non_hara_problem()));
    return s;
}

double interpolate(const FdSolution& s, double z) {
    const auto& v = s.final_layer();
    const double dz = s.z[1] - s.z[0];
    const auto i = static_cast<std::size_t>((z - s.z[0]) / dz);
    const double w = (z - s.z[i]) / dz;
    return (1 - w) * v[i] + w * v[i + 1];
}

}  // namespace

TEST(Obstacle, StaysAboveThePayoff) {
    const auto& s = non_hara_solution();
    const auto& u = oracle::non_hara_problem().utility();
    ASSERT_EQ(s.surface.size(), s.tau.size());
    for (const auto& layer : s.surface) {
        for (std::size_t i = 0; i < layer.size(); ++i) {
            EXPECT_GE(layer[i], u.obstacle_g(s.z[i]) - 1e-14);
        }
    }
}

TEST(Obstacle, ComplementarityAndTimeMonotonicity) {
    const auto& s = non_hara_solution();
    EXPECT_LE(s.complementarity, 1e-10);
    EXPECT_GE(s.min_tau_increment, -1e-9);
    EXPECT_GT(s.psor_sweeps, 0);
}

TEST(Obstacle, DecreasingInLogPrice) {
    const auto& s = non_hara_solution();
    const auto& v = s.final_layer();
    for (std::size_t i = 1; i < v.size(); ++i) EXPECT_LE(v[i] - v[i - 1], 1e-10);
}

TEST(Obstacle, BoundaryStartsBelowTerminalRootAndFalls) {
    const auto pr = oracle::non_hara_problem();
    const auto& s = non_hara_solution();
    const double z0 = solve_z0(pr), zs = solve_z_star(pr);
    const double dz = s.z[1] - s.z[0];
    EXPECT_TRUE(std::isnan(s.boundary.front()));
    EXPECT_LE(s.boundary[1], z0 + dz);
    EXPECT_GT(s.boundary[1], z0 - 0.1);
    for (std::size_t k = 2; k < s.boundary.size(); ++k) {
        EXPECT_LE(s.boundary[k], s.boundary[k - 1] + 1e-12);
        EXPECT_GT(s.boundary[k], zs);
    }
}

TEST(Obstacle, LongerHorizonsStayAboveTheLimit) {
    const auto pr = oracle::power_problem();
    const double zs = solve_z_star(pr);
    double prev = INFINITY;
    for (double k : {1.0, 5.0, 20.0}) {
        auto cfg = FdConfig::defaults(pr);
        cfg.tau_end = k * pr.derived().tau_max;
        cfg.n_tau = static_cast<int>(200 * k);
        cfg.n_z = 600;
        cfg.scheme = FdScheme::Implicit;
        cfg.keep_surface = false;
        const auto s = solve_obstacle(pr, cfg);
        const double dz = s.z[1] - s.z[0];
        EXPECT_GT(s.boundary.back(), zs - 2 * dz) << k;
        EXPECT_LT(s.boundary.back(), prev) << k;
        prev = s.boundary.back();
    }
}

TEST(Obstacle, GridRefinement) {
    const auto pr = oracle::power_problem();
    auto cfg = FdConfig::defaults(pr);
    cfg.keep_surface = false;
    double v[3];
    int i = 0;
    for (int n : {300, 600, 1200}) {
        cfg.n_z = n;
        cfg.n_tau = n / 3;
        v[i++] = interpolate(solve_obstacle(pr, cfg), std::log(1.4));
    }
    EXPECT_LT(std::abs(v[2] - v[1]), std::abs(v[1] - v[0]));
    EXPECT_LT(std::abs(v[2] - v[1]), 1e-4);
}

TEST(Obstacle, AgreesWithTheTree) {
    const auto pr = oracle::non_hara_problem();
    const BtmOracle tree(pr, 1600);
    for (double y : {1.2, 1.58, 2.0}) {
        EXPECT_NEAR(interpolate(non_hara_solution(), std::log(y)), tree.value(y), 2e-4) << y;
    }
}

TEST(Obstacle, ConfigValidation) {
    const auto pr = oracle::power_problem();
    const auto base = FdConfig::defaults(pr);
    auto c = base;
    c.z_min = solve_z0(pr) - 1.0;
    EXPECT_THROW(solve_obstacle(pr, c), DomainError);
    c = base;
    c.omega = 2.0;
    EXPECT_THROW(solve_obstacle(pr, c), DomainError);
    c = base;
    c.n_z = 100;
    EXPECT_THROW(solve_obstacle(pr, c), DomainError);
    c = base;
    c.max_iter = 1;
    c.n_tau = 2;
    EXPECT_THROW(solve_obstacle(pr, c), PsorNotConverged);
}
