#pragma once

#include <ostream>
#include <vector>

#include <json.hpp>

#include "cli/config.hpp"
#include "freebound/numerics/quadrature.hpp"

namespace freebound::cli {

numerics::QuadratureOptions quadrature_for(const RunConfig& cfg);

/// Regime, A_j, beta thresholds, discriminant and tau -> 0 limits.
nlohmann::json cmd_classify(const RunConfig& cfg);

/// CSV t, tau, z_star, y_star, x_boundary on `points` uniform times in [0, T];
/// optional btm_y, btm_x (tree rooted at e^{z0}) and z_fd columns.
void cmd_boundary(const RunConfig& cfg, std::ostream& out);

/// {V, pi, pi_fraction, y_star, stopped, t, x} at options.t, options.x.
nlohmann::json cmd_value(const RunConfig& cfg);

struct CompareReport {
    double x;
    double gca_value;
    double btm_value;
    double gca_strategy;  ///< fraction of wealth
    double btm_strategy;
    double gca_seconds;
    double btm_seconds;

    double difference() const;
    double relative_difference() const;
};

/// GCA against the binomial tree at t = 0 and options.x (default 1.5).
CompareReport run_compare(const RunConfig& cfg);
void cmd_compare(const RunConfig& cfg, std::ostream& out);

struct Table2Sample {
    double mu;
    double r;
    double beta;
    double sigma;
    double gamma;
};

struct DiffStats {
    double mean_abs;
    double std_abs;
    double mean_rel;
    double std_rel;
};

struct UtilityDiffs {
    std::vector<double> gca_value, btm_value, gca_strategy, btm_strategy;
    int stopped = 0;  ///< samples where x is at or past the GCA boundary
    double gca_seconds = 0.0;
    double btm_seconds = 0.0;

    DiffStats value_stats() const;
    DiffStats strategy_stats() const;
};

struct Table2Report {
    std::vector<Table2Sample> samples;
    long rejected = 0;
    UtilityDiffs power;
    UtilityDiffs non_hara;
};

/// Uniform draws mu in [0.05, 0.15], r in [0.02, 0.08], beta in [0.05, 0.15],
/// sigma in [0.10, 0.40], gamma in [0.2, 0.6], redrawn until both utilities
/// satisfy K > 0, A_1 > 0 and the tree probability lies in (0, 1).
std::vector<Table2Sample> draw_table2_samples(const RunConfig& cfg, long* rejected = nullptr);

Table2Report run_table2(const RunConfig& cfg);
/// Timings go to `err`; `out` is a function of the seed alone.
void cmd_table2(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// One CSV (path, t, X, pi) on `out`; with options.out_dir also one file per path.
void cmd_simulate(const RunConfig& cfg, std::ostream& out);

}  // namespace freebound::cli
