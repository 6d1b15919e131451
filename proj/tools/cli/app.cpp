#include "cli/app.hpp"

#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "freebound/errors.hpp"

namespace freebound::cli {

namespace {

struct Flags {
    std::string config;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::optional<int> points;
    std::optional<int> btm_steps;
    std::optional<double> quad_tol;
    bool with_btm = false;
    bool with_fd = false;
    std::optional<double> x;
    std::optional<double> t;
    std::optional<int> samples;
    std::optional<int> paths;
};

RunConfig resolve(const Flags& f) {
    RunConfig cfg = f.config.empty() ? default_config() : load_config(f.config);
    auto& o = cfg.options;
    if (!f.out.empty()) o.out_dir = f.out;
    if (f.seed) o.seed = *f.seed;
    if (f.points) o.points = *f.points;
    if (f.btm_steps) o.btm_steps = *f.btm_steps;
    if (f.quad_tol) o.quad_tol = f.quad_tol;
    o.with_btm = o.with_btm || f.with_btm;
    o.with_fd = o.with_fd || f.with_fd;
    if (f.x) o.x = f.x;
    if (f.t) o.t = *f.t;
    if (f.samples) o.samples = *f.samples;
    if (f.paths) o.paths = *f.paths;
    if (o.btm_steps < 2) throw ConfigError("--btm-steps must be at least 2");
    return cfg;
}

// Writes `text` to `out` and, when an output directory is configured, to out_dir/name.
void emit(const RunConfig& cfg, const std::string& name, const std::string& text, std::ostream& out) {
    out << text;
    if (!cfg.options.out_dir) return;
    std::filesystem::create_directories(*cfg.options.out_dir);
    std::ofstream file(*cfg.options.out_dir / name);
    if (!file) throw ConfigError("cannot write to " + cfg.options.out_dir->string());
    file << text;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Optimal investment with optimal stopping: free boundary, value and strategy"};
    app.require_subcommand(1);
    app.fallthrough();

    Flags f;
    app.add_option("--config", f.config, "JSON config file")->check(CLI::ExistingFile);
    app.add_option("--out", f.out, "Output directory");
    app.add_option("--seed", f.seed, "RNG seed");
    app.add_option("--points", f.points, "Boundary rows");
    app.add_option("--btm-steps", f.btm_steps, "Binomial tree steps (default 700)");
    app.add_option("--quad-tol", f.quad_tol, "Dual-value quadrature tolerance");
    app.add_flag("--with-btm", f.with_btm, "Add binomial-tree boundary columns");
    app.add_flag("--with-fd", f.with_fd, "Add finite-difference boundary column");
    app.add_option("--x", f.x, "Wealth (initial wealth for simulate)");
    app.add_option("--t", f.t, "Time in [0, T]");
    app.add_option("--samples", f.samples, "Random sample count");
    app.add_option("--paths", f.paths, "Simulated path count");

    std::function<void(const RunConfig&)> action;
    app.add_subcommand("classify", "Regime classification (JSON)")->callback([&] {
        action = [&](const RunConfig& c) { emit(c, "classify.json", cmd_classify(c).dump(2) + "\n", out); };
    });
    app.add_subcommand("boundary", "Free boundary curve (CSV)")->callback([&] {
        action = [&](const RunConfig& c) {
            std::ostringstream s;
            cmd_boundary(c, s);
            emit(c, "boundary.csv", s.str(), out);
        };
    });
    app.add_subcommand("value", "Value and strategy at (t, x) (JSON)")->callback([&] {
        action = [&](const RunConfig& c) { emit(c, "value.json", cmd_value(c).dump(2) + "\n", out); };
    });
    app.add_subcommand("compare", "Closed-form approximation against the binomial tree (CSV)")->callback([&] {
        action = [&](const RunConfig& c) {
            std::ostringstream s;
            cmd_compare(c, s);
            emit(c, "compare.csv", s.str(), out);
        };
    });
    app.add_subcommand("table2", "Random-parameter comparison statistics (CSV)")->callback([&] {
        action = [&](const RunConfig& c) {
            std::ostringstream s;
            cmd_table2(c, s, err);
            emit(c, "table2.csv", s.str(), out);
        };
    });
    app.add_subcommand("simulate", "Optimal wealth paths (CSV)")->callback([&] {
        action = [&](const RunConfig& c) { cmd_simulate(c, out); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        action(resolve(f));
        return kOk;
    } catch (const AssumptionViolated& e) {
        err << "assumption violated: " << e.what() << '\n';
        return kAssumption;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        err << "invalid input: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNumerical;
    }
}

}  // namespace freebound::cli
