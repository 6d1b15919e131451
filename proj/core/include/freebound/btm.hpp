#pragma once

#include <vector>

#include "freebound/problem.hpp"

namespace freebound {

struct TreeConfig {
    int n_steps = 700;
    double y0 = 1.0;
    bool record_boundary = false;
};

struct TreeResult {
    double value_at_root;
    /// Per step i (t = i T / n): largest node of the exercise set grown from the
    /// bottom of the layer, in dual-price units. NaN when the bottom node continues,
    /// when the whole layer exercises, and at the terminal step.
    std::vector<double> exercise_boundary;
};

/// Recombining CRR lattice for dY = (beta - r) Y dt - theta Y dW with u = e^{|theta| sqrt(dt)},
/// up probability (e^{(beta - r) dt} - d) / (u - d) and discount e^{-beta dt}.
/// American mode takes max(U~_K(y), continuation) at each node.
/// Throws ProbabilityOutOfRange if the up probability leaves (0, 1).
TreeResult tree_value(const Problem& problem, const TreeConfig& cfg, bool american);

/// e^{-beta T} E[U~_K(Y_T)] from Y_0 = y.
double european_closed_form(const Problem& problem, double y);

struct BtmPrimal {
    double y;
    double value;
    double strategy;
    bool stopped;  ///< the root node exercises; strategy is then zero
};

struct BtmBoundaryPoint {
    double t;
    double y;
    double x;
};

/// Binomial-tree oracle for the dual value at t = 0 and its primal read-outs.
class BtmOracle {
public:
    explicit BtmOracle(const Problem& problem, int n_steps = 700);

    const Problem& problem() const noexcept { return problem_; }
    int n_steps() const noexcept { return n_steps_; }
    /// Node spacing of a lattice layer in log y: 2 |theta| sqrt(dt).
    double lattice_spacing() const noexcept;

    double value(double y) const;
    /// Symmetric relative bump y (1 +- 1e-4).
    double dual_dy(double y) const;
    /// Log bump of one lattice spacing; finer bumps read the lattice kinks.
    double dual_dyy(double y) const;

    /// Root of dual_dy(y) + x: decade scan from y = 1, then bisection to width 1e-8 y.
    /// DomainError for x <= K.
    double find_initial_y(double x) const;

    BtmPrimal primal(double x) const;

    /// Exercise boundary of one American tree rooted at y0, mapped to wealth
    /// x = -U~_K'(y). Steps where the layer does not straddle the boundary are skipped.
    std::vector<BtmBoundaryPoint> boundary(double y0) const;

private:
    Problem problem_;
    int n_steps_;
};

}  // namespace freebound
