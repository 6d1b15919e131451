#include "cli/commands.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <random>
#include <string>

#include <fmt/format.h>

#include "cli/csv.hpp"
#include "freebound/btm.hpp"
#include "freebound/errors.hpp"
#include "freebound/fd_obstacle.hpp"
#include "freebound/primal.hpp"
#include "freebound/regime.hpp"

namespace freebound::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

nlohmann::json json_number(double v) {
    return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

double require_x(const RunConfig& cfg) {
    if (!cfg.options.x) {
        throw ConfigError("wealth --x is required");
    }
    return *cfg.options.x;
}

double mean(const std::vector<double>& v) {
    double s = 0.0;
    for (double e : v) s += e;
    return v.empty() ? kNaN : s / static_cast<double>(v.size());
}

// Sample standard deviation (n - 1).
double stdev(const std::vector<double>& v) {
    if (v.size() < 2) return 0.0;
    const double m = mean(v);
    double s = 0.0;
    for (double e : v) s += (e - m) * (e - m);
    return std::sqrt(s / static_cast<double>(v.size() - 1));
}

DiffStats diff_stats(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> abs_d;
    std::vector<double> rel_d;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = std::abs(a[i] - b[i]);
        abs_d.push_back(d);
        // Both methods report a zero strategy in the stopping region; skip 0 / 0.
        if (b[i] != 0.0) rel_d.push_back(d / std::abs(b[i]));
    }
    return DiffStats{mean(abs_d), stdev(abs_d), mean(rel_d), stdev(rel_d)};
}

double tree_probability(const ModelParams& m, int n_steps) {
    const double dt = m.T / n_steps;
    const double h = std::abs((m.mu - m.r) / m.sigma) * std::sqrt(dt);
    const double up = std::exp(h);
    return (std::exp((m.beta - m.r) * dt) - 1.0 / up) / (up - 1.0 / up);
}

}  // namespace

numerics::QuadratureOptions quadrature_for(const RunConfig& cfg) {
    auto opts = DualValueEvaluator::default_quadrature();
    if (cfg.options.quad_tol) {
        if (!(*cfg.options.quad_tol > 0.0)) throw ConfigError("quad_tol must be positive");
        opts.tol = *cfg.options.quad_tol;
    }
    return opts;
}

nlohmann::json cmd_classify(const RunConfig& cfg) {
    const Problem pr(cfg.market, cfg.utility);
    const Regime reg = classify_regime(pr);
    nlohmann::json j;
    j["utility"] = pr.utility().name();
    j["regime"] = std::string(to_string(reg.case_id));
    j["A"] = reg.a;
    j["assumption_holds"] = assumption_holds(pr);
    j["discriminant"] = json_number(reg.discriminant);
    if (reg.thresholds) {
        j["thresholds"] = {{"beta1", reg.thresholds->beta1},
                           {"beta2", reg.thresholds->beta2},
                           {"beta3", reg.thresholds->beta3},
                           {"beta4", reg.thresholds->beta4}};
    } else {
        j["thresholds"] = nullptr;
    }
    nlohmann::json limits = nlohmann::json::object();
    if (reg.two_boundary_limits) {
        limits["z_I"] = reg.two_boundary_limits->first;
        limits["z_II"] = reg.two_boundary_limits->second;
    }
    if (reg.initial_limit) {
        limits["z_initial"] = *reg.initial_limit;
    }
    j["limits"] = limits;
    const auto& d = pr.derived();
    j["derived"] = {{"theta", d.theta}, {"nu", d.nu},         {"rho", d.rho},
                    {"kappa", d.kappa}, {"lambda", d.lambda}, {"tau_max", d.tau_max}};
    return j;
}

void cmd_boundary(const RunConfig& cfg, std::ostream& out) {
    const Problem pr(cfg.market, cfg.utility);
    const GcaBoundary gca(pr);
    const int n = cfg.options.points;
    if (n < 2) throw ConfigError("--points must be at least 2");
    const double T = pr.market().T;

    std::vector<double> btm_y;
    double btm_dt = 0.0;
    if (cfg.options.with_btm) {
        const auto res = tree_value(pr, TreeConfig{cfg.options.btm_steps, std::exp(gca.z0()), true}, true);
        btm_y = res.exercise_boundary;
        btm_dt = T / cfg.options.btm_steps;
    }
    FdSolution fd;
    if (cfg.options.with_fd) {
        auto fc = FdConfig::defaults(pr);
        fc.keep_surface = false;
        fd = solve_obstacle(pr, fc);
    }
    auto fd_at = [&](double tau) {
        // Linear in tau between layers; the tau = 0 layer has no contact boundary.
        const double pos = tau / (fd.tau[1] - fd.tau[0]);
        const auto k = std::min(static_cast<std::size_t>(pos), fd.tau.size() - 2);
        const double w = pos - static_cast<double>(k);
        return (1.0 - w) * fd.boundary[k] + w * fd.boundary[k + 1];
    };

    std::vector<std::string> cols{"t", "tau", "z_star", "y_star", "x_boundary"};
    if (cfg.options.with_btm) {
        cols.emplace_back("btm_y");
        cols.emplace_back("btm_x");
    }
    if (cfg.options.with_fd) cols.emplace_back("z_fd");
    CsvWriter csv(out, cols, {"utility=" + pr.utility().name()});

    double max_fd_gap = 0.0;
    for (int i = 0; i < n; ++i) {
        const double t = (i == n - 1) ? T : T * i / (n - 1);
        const double tau = pr.tau_at(t);
        const double z = gca.z_at(tau);
        std::vector<double> row{t, tau, z, std::exp(z), gca.primal_boundary(t)};
        if (cfg.options.with_btm) {
            const auto step = static_cast<std::size_t>(std::lround(t / btm_dt));
            const double yb = step < btm_y.size() ? btm_y[step] : kNaN;
            row.push_back(yb);
            row.push_back(std::isnan(yb) ? kNaN : -pr.utility().dual_deriv(yb));
        }
        if (cfg.options.with_fd) {
            const double zf = fd_at(tau);
            row.push_back(zf);
            if (std::isfinite(zf)) max_fd_gap = std::max(max_fd_gap, std::abs(z - zf));
        }
        csv.row(row);
    }
    if (cfg.options.with_fd) {
        csv.comment("max_abs_z_star_minus_z_fd=" + format_number(max_fd_gap));
    }
}

nlohmann::json cmd_value(const RunConfig& cfg) {
    const Problem pr(cfg.market, cfg.utility);
    const PrimalSolver solver(GcaBoundary(pr), quadrature_for(cfg));
    const auto s = solver.solve(cfg.options.t, require_x(cfg));
    return nlohmann::json{{"t", s.t},
                          {"x", s.x},
                          {"V", s.value},
                          {"pi", s.strategy},
                          {"pi_fraction", s.strategy_fraction()},
                          {"y_star", s.y_star},
                          {"stopped", s.stopped}};
}

double CompareReport::difference() const {
    return std::abs(gca_value - btm_value);
}

double CompareReport::relative_difference() const {
    return difference() / std::abs(btm_value);
}

CompareReport run_compare(const RunConfig& cfg) {
    const Problem pr(cfg.market, cfg.utility);
    const double x = cfg.options.x.value_or(1.5);
    CompareReport rep{};
    rep.x = x;

    auto start = std::chrono::steady_clock::now();
    const PrimalSolver solver(GcaBoundary(pr), quadrature_for(cfg));
    const auto g = solver.solve(0.0, x);
    rep.gca_seconds = seconds_since(start);
    rep.gca_value = g.value;
    rep.gca_strategy = g.strategy_fraction();

    start = std::chrono::steady_clock::now();
    const BtmOracle tree(pr, cfg.options.btm_steps);
    const auto b = tree.primal(x);
    rep.btm_seconds = seconds_since(start);
    rep.btm_value = b.value;
    rep.btm_strategy = b.strategy / x;
    return rep;
}

void cmd_compare(const RunConfig& cfg, std::ostream& out) {
    const auto rep = run_compare(cfg);
    CsvWriter csv(out, {"quantity", "optimal_value", "optimal_strategy"},
                  {"utility=" + cfg.utility.name() + " x=" + format_number(rep.x) +
                   " btm_steps=" + std::to_string(cfg.options.btm_steps)});
    csv.row({"gca"}, {rep.gca_value, rep.gca_strategy});
    csv.row({"btm"}, {rep.btm_value, rep.btm_strategy});
    const double sd = std::abs(rep.gca_strategy - rep.btm_strategy);
    csv.row({"difference"}, {rep.difference(), sd});
    csv.row({"relative_difference"}, {rep.relative_difference(), sd / std::abs(rep.btm_strategy)});
    csv.row({"gca_seconds"}, {rep.gca_seconds, rep.gca_seconds});
    csv.row({"btm_seconds"}, {rep.btm_seconds, rep.btm_seconds});
}

DiffStats UtilityDiffs::value_stats() const {
    return diff_stats(gca_value, btm_value);
}

DiffStats UtilityDiffs::strategy_stats() const {
    return diff_stats(gca_strategy, btm_strategy);
}

std::vector<Table2Sample> draw_table2_samples(const RunConfig& cfg, long* rejected) {
    if (cfg.options.samples < 1) throw ConfigError("--samples must be at least 1");
    std::mt19937_64 rng(cfg.options.seed);
    std::uniform_real_distribution<double> mu_d(0.05, 0.15);
    std::uniform_real_distribution<double> r_d(0.02, 0.08);
    std::uniform_real_distribution<double> beta_d(0.05, 0.15);
    std::uniform_real_distribution<double> sigma_d(0.10, 0.40);
    std::uniform_real_distribution<double> gamma_d(0.2, 0.6);

    std::vector<Table2Sample> out;
    long rejects = 0;
    constexpr long kMaxDraws = 1000000;
    while (static_cast<int>(out.size()) < cfg.options.samples) {
        if (rejects > kMaxDraws) throw NumericalError("table2: sampler rejected too many draws");
        Table2Sample s{};
        s.mu = mu_d(rng);
        s.r = r_d(rng);
        s.beta = beta_d(rng);
        s.sigma = sigma_d(rng);
        s.gamma = gamma_d(rng);
        const ModelParams m{s.mu, s.r, s.sigma, s.beta, cfg.market.T, cfg.market.K};
        bool ok = std::abs(s.mu - s.r) >= kDegenerateThetaCutoff;
        if (ok) {
            const double p = tree_probability(m, cfg.options.btm_steps);
            ok = p > 0.0 && p < 1.0 && assumption_holds(Problem(m, DualUtilityFamily::power(s.gamma, m.K))) &&
                 assumption_holds(Problem(m, DualUtilityFamily::non_hara(m.K)));
        }
        if (ok) {
            out.push_back(s);
        } else {
            ++rejects;
        }
    }
    if (rejected) *rejected = rejects;
    return out;
}

Table2Report run_table2(const RunConfig& cfg) {
    Table2Report rep;
    rep.samples = draw_table2_samples(cfg, &rep.rejected);
    const double x = cfg.options.x.value_or(1.5);
    const auto quad = quadrature_for(cfg);
    auto run_one = [&](const Problem& pr, UtilityDiffs& acc) {
        auto start = std::chrono::steady_clock::now();
        const PrimalSolver solver(GcaBoundary(pr), quad);
        const auto g = solver.solve(0.0, x);
        acc.gca_seconds += seconds_since(start);
        start = std::chrono::steady_clock::now();
        const auto b = BtmOracle(pr, cfg.options.btm_steps).primal(x);
        acc.btm_seconds += seconds_since(start);
        acc.gca_value.push_back(g.value);
        acc.btm_value.push_back(b.value);
        acc.gca_strategy.push_back(g.strategy_fraction());
        acc.btm_strategy.push_back(b.strategy / x);
        if (g.stopped) ++acc.stopped;
    };
    for (const auto& s : rep.samples) {
        const ModelParams m{s.mu, s.r, s.sigma, s.beta, cfg.market.T, cfg.market.K};
        run_one(Problem(m, DualUtilityFamily::power(s.gamma, m.K)), rep.power);
        run_one(Problem(m, DualUtilityFamily::non_hara(m.K)), rep.non_hara);
    }
    return rep;
}

void cmd_table2(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto rep = run_table2(cfg);
    CsvWriter csv(out, {"utility", "quantity", "mean_abs_diff", "std_abs_diff", "mean_rel_diff", "std_rel_diff"},
                  {fmt::format("seed={} samples={} rejected={} btm_steps={} x={}", cfg.options.seed, rep.samples.size(),
                               rep.rejected, cfg.options.btm_steps, format_number(cfg.options.x.value_or(1.5))),
                   fmt::format("stopped power={} non_hara={}", rep.power.stopped, rep.non_hara.stopped)});
    auto emit = [&](const char* name, const UtilityDiffs& d) {
        const auto v = d.value_stats();
        const auto s = d.strategy_stats();
        csv.row({name, "value"}, {v.mean_abs, v.std_abs, v.mean_rel, v.std_rel});
        csv.row({name, "strategy"}, {s.mean_abs, s.std_abs, s.mean_rel, s.std_rel});
    };
    emit("power", rep.power);
    emit("non_hara", rep.non_hara);
    err << fmt::format("table2 timings: power gca {:.3f}s btm {:.3f}s; non_hara gca {:.3f}s btm {:.3f}s\n",
                       rep.power.gca_seconds, rep.power.btm_seconds, rep.non_hara.gca_seconds,
                       rep.non_hara.btm_seconds);
}

void cmd_simulate(const RunConfig& cfg, std::ostream& out) {
    const Problem pr(cfg.market, cfg.utility);
    const PrimalSolver solver(GcaBoundary(pr), quadrature_for(cfg));
    if (cfg.options.paths < 1) throw ConfigError("--paths must be at least 1");
    const auto paths = solver.simulate_paths(require_x(cfg), cfg.options.paths, cfg.options.seed);

    const std::string seed_note = "seed=" + std::to_string(cfg.options.seed);
    CsvWriter csv(out, {"path", "t", "X", "pi"}, {seed_note});
    for (std::size_t p = 0; p < paths.size(); ++p) {
        const auto& rec = paths[p];
        for (std::size_t i = 0; i < rec.times.size(); ++i) {
            csv.row({std::to_string(p)}, {rec.times[i], rec.wealth[i], rec.strategy[i]});
        }
    }
    if (!cfg.options.out_dir) return;
    std::filesystem::create_directories(*cfg.options.out_dir);
    for (std::size_t p = 0; p < paths.size(); ++p) {
        const auto& rec = paths[p];
        std::ofstream file(*cfg.options.out_dir / fmt::format("path_{}.csv", p));
        if (!file) throw ConfigError("cannot write to " + cfg.options.out_dir->string());
        CsvWriter pc(file, {"t", "X", "pi"},
                     {seed_note + " path=" + std::to_string(p) + " stop_time=" + format_number(rec.stop_time)});
        for (std::size_t i = 0; i < rec.times.size(); ++i) {
            pc.row({rec.times[i], rec.wealth[i], rec.strategy[i]});
        }
    }
}

}  // namespace freebound::cli
