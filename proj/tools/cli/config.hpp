#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "freebound/dual_utility.hpp"
#include "freebound/params.hpp"

namespace freebound::cli {

/// Thrown for unreadable or malformed configuration (exit code 1).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunOptions {
    std::optional<std::filesystem::path> out_dir;
    std::uint64_t seed = 42;
    int points = 50;
    int btm_steps = 700;
    std::optional<double> quad_tol;
    bool with_btm = false;
    bool with_fd = false;
    std::optional<double> x;
    double t = 0.0;
    int samples = 10;
    int paths = 2;
};

struct RunConfig {
    ModelParams market;
    DualUtilityFamily utility;
    RunOptions options;
};

/// Reads the model from a JSON document:
///   {"mu", "r", "sigma", "beta", "T", "K",
///    "utility": {"type": "power", "gamma": g} | {"type": "non_hara"} | {"type": "dual_sum", "q": [...]}}
/// plus any RunOptions keys (out, seed, points, btm_steps, quad_tol, with_btm, with_fd, x, t, samples, paths).
/// Market keys may be omitted; the defaults are the reference market of default_config().
RunConfig parse_config(const nlohmann::json& doc);

RunConfig load_config(const std::filesystem::path& path);

/// Default market: mu 0.1, r 0.05, sigma 0.3, beta 0.1, T 1, K 1, power gamma 0.5.
RunConfig default_config();

}  // namespace freebound::cli
