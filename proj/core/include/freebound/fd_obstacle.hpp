#pragma once

#include <vector>

#include "freebound/problem.hpp"

namespace freebound {

enum class FdScheme { Implicit, CrankNicolson };

struct FdConfig {
    double z_min;
    double z_max;
    int n_z = 1200;     ///< intervals; n_z + 1 nodes
    int n_tau = 400;
    double omega = 1.5;
    double psor_tol = 1e-10;
    FdScheme scheme = FdScheme::CrankNicolson;
    int rannacher_steps = 2;  ///< leading fully implicit steps under CrankNicolson
    int max_iter = 100000;    ///< PSOR sweeps per step
    double tau_end;
    bool keep_surface = true;

    /// z in [z0 - 6, z0 + 6], tau in [0, tau_max].
    static FdConfig defaults(const Problem& problem);
};

struct FdSolution {
    std::vector<double> z;
    std::vector<double> tau;
    /// surface[k][i] = v(tau_k, z_i); only the final layer when keep_surface is false.
    std::vector<std::vector<double>> surface;
    /// Last node of the contact set v = g grown from z_min, per tau layer; NaN at tau = 0.
    std::vector<double> boundary;
    /// max over nodes and steps of |(v - g)(Mv - b)| / (1 + |v|)^2.
    double complementarity = 0.0;
    /// min over nodes and steps of (v^{k+1} - v^k) / (1 + |v^k|).
    double min_tau_increment = 0.0;
    long psor_sweeps = 0;

    const std::vector<double>& final_layer() const { return surface.back(); }
};

/// Solves min(v_tau - v_zz + kappa v_z + rho v, v - g) = 0, v(0, z) = g(z), with
/// v = g at z_min and v_zz = 0 at z_max, by a theta-scheme in tau and projected SOR.
/// The PSOR stopping test is per node: |update| <= psor_tol (1 + |v|) / 100.
/// Throws DomainError for invalid configs and PsorNotConverged after max_iter sweeps.
FdSolution solve_obstacle(const Problem& problem, const FdConfig& cfg);

}  // namespace freebound
