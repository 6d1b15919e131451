#include "cli/config.hpp"

#include <fstream>

namespace freebound::cli {

namespace {

template <typename T>
void read_optional(const nlohmann::json& doc, const char* key, T& field) {
    if (doc.contains(key)) {
        field = doc.at(key).get<T>();
    }
}

DualUtilityFamily parse_utility(const nlohmann::json& u, double K) {
    const auto type = u.at("type").get<std::string>();
    if (type == "power") {
        return DualUtilityFamily::power(u.at("gamma").get<double>(), K);
    }
    if (type == "non_hara") {
        return DualUtilityFamily::non_hara(K);
    }
    if (type == "dual_sum") {
        return DualUtilityFamily::dual_sum(u.at("q").get<std::vector<double>>(), K);
    }
    throw ConfigError("unknown utility type '" + type + "'");
}

}  // namespace

RunConfig default_config() {
    return RunConfig{ModelParams{0.1, 0.05, 0.3, 0.1, 1.0, 1.0}, DualUtilityFamily::power(0.5, 1.0), RunOptions{}};
}

RunConfig parse_config(const nlohmann::json& doc) {
    if (!doc.is_object()) {
        throw ConfigError("config must be a JSON object");
    }
    try {
        RunConfig cfg = default_config();
        auto& m = cfg.market;
        read_optional(doc, "mu", m.mu);
        read_optional(doc, "r", m.r);
        read_optional(doc, "sigma", m.sigma);
        read_optional(doc, "beta", m.beta);
        read_optional(doc, "T", m.T);
        read_optional(doc, "K", m.K);
        cfg.utility = doc.contains("utility") ? parse_utility(doc.at("utility"), m.K) : cfg.utility.with_floor(m.K);

        auto& o = cfg.options;
        if (doc.contains("out")) o.out_dir = doc.at("out").get<std::string>();
        read_optional(doc, "seed", o.seed);
        read_optional(doc, "points", o.points);
        read_optional(doc, "btm_steps", o.btm_steps);
        if (doc.contains("quad_tol")) o.quad_tol = doc.at("quad_tol").get<double>();
        read_optional(doc, "with_btm", o.with_btm);
        read_optional(doc, "with_fd", o.with_fd);
        if (doc.contains("x")) o.x = doc.at("x").get<double>();
        read_optional(doc, "t", o.t);
        read_optional(doc, "samples", o.samples);
        read_optional(doc, "paths", o.paths);
        return cfg;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config " + path.string());
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
    return parse_config(doc);
}

}  // namespace freebound::cli
