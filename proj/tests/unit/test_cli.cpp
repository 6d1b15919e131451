#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli/app.hpp"
#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "cli/csv.hpp"

namespace fs = std::filesystem;
using namespace freebound::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "freebound");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path write_config(const std::string& name, const nlohmann::json& j) {
    const auto p = fs::temp_directory_path() / ("freebound_cli_" + name + ".json");
    std::ofstream(p) << j.dump();
    return p;
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

nlohmann::json non_hara_json() {
    return {{"mu", 0.1}, {"r", 0.05}, {"sigma", 0.3}, {"beta", 0.1}, {"T", 1.0}, {"K", 1.0},
            {"utility", {{"type", "non_hara"}}}};
}

}  // namespace

TEST(Config, ParsesFamiliesAndOptions) {
    auto j = non_hara_json();
    j["seed"] = 7;
    j["with_btm"] = true;
    const auto c = parse_config(j);
    EXPECT_EQ(c.market.sigma, 0.3);
    EXPECT_EQ(c.utility.exponents().size(), 2u);
    EXPECT_EQ(c.options.seed, 7u);
    EXPECT_TRUE(c.options.with_btm);

    j["utility"] = {{"type", "power"}, {"gamma", 0.4}};
    EXPECT_DOUBLE_EQ(parse_config(j).utility.gamma(), 0.4);
    j["utility"] = {{"type", "dual_sum"}, {"q", {-2.0, -0.5}}};
    EXPECT_EQ(parse_config(j).utility.exponents().size(), 2u);
}

TEST(Config, RejectsMalformedInput) {
    auto j = non_hara_json();
    j["utility"] = {{"type", "log"}};
    EXPECT_THROW(parse_config(j), ConfigError);
    j = non_hara_json();
    j["sigma"] = "wide";
    EXPECT_THROW(parse_config(j), ConfigError);
    EXPECT_THROW(load_config("/nonexistent/freebound.json"), ConfigError);
    const auto bad = fs::temp_directory_path() / "freebound_cli_bad.json";
    std::ofstream(bad) << "{ not json";
    EXPECT_THROW(load_config(bad), ConfigError);
}

TEST(Csv, VersionHeaderAndNumberFormat) {
    EXPECT_EQ(format_number(1.0), "1");
    EXPECT_EQ(format_number(0.1234567890123), "0.123456789");
    EXPECT_EQ(format_number(1e-20), "1e-20");
    std::ostringstream os;
    CsvWriter w(os, {"a", "b"}, {"note"});
    w.row({1.5, 2.0});
    w.row({"x"}, {3.0});
    EXPECT_EQ(os.str(), std::string(kCsvVersion) + "\n# note\na,b\n1.5,2\nx,3\n");
}

TEST(Cli, ClassifyReportsRegime) {
    const auto r = invoke({"classify", "--config", write_config("nh", non_hara_json()).string()});
    ASSERT_EQ(r.code, kOk) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["regime"], "OneBoundary");
    EXPECT_TRUE(j["assumption_holds"].get<bool>());
    EXPECT_NEAR(j["A"][0].get<double>(), 2.0, 1e-12);
}

TEST(Cli, BoundaryRows) {
    const auto r = invoke({"boundary", "--points", "11"});
    ASSERT_EQ(r.code, kOk) << r.err;
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 14u);
    EXPECT_EQ(ls[0], kCsvVersion);
    EXPECT_EQ(ls[2], "t,tau,z_star,y_star,x_boundary");
    EXPECT_EQ(ls[3].substr(0, 2), "0,");
    EXPECT_EQ(ls[13].substr(0, 2), "1,");
}

TEST(Cli, ValueJson) {
    const auto r = invoke({"value", "--x", "1.5"});
    ASSERT_EQ(r.code, kOk) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["V"].get<double>(), 1.41339, 1e-4);
    EXPECT_FALSE(j["stopped"].get<bool>());
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
    EXPECT_EQ(invoke({}).code, kUsage);
    EXPECT_EQ(invoke({"value", "--x", "0.5"}).code, kUsage);
    auto j = non_hara_json();
    j["beta"] = 0.07;
    const auto r = invoke({"boundary", "--config", write_config("bad_beta", j).string()});
    EXPECT_EQ(r.code, kAssumption);
    EXPECT_FALSE(r.err.empty());
}

TEST(Cli, WritesOutputDirectory) {
    const auto dir = fs::temp_directory_path() / "freebound_cli_out";
    fs::remove_all(dir);
    const auto r = invoke({"classify", "--out", dir.string()});
    ASSERT_EQ(r.code, kOk) << r.err;
    EXPECT_TRUE(fs::exists(dir / "classify.json"));
}

TEST(Cli, RandomComparisonIsAFunctionOfTheSeed) {
    const std::vector<std::string> args{"table2", "--samples", "3", "--btm-steps", "100", "--seed", "5"};
    const auto a = invoke(args);
    const auto b = invoke(args);
    ASSERT_EQ(a.code, kOk) << a.err;
    EXPECT_EQ(a.out, b.out);
    const auto c = invoke({"table2", "--samples", "3", "--btm-steps", "100", "--seed", "6"});
    EXPECT_NE(a.out, c.out);
}

TEST(Cli, RandomSampler) {
    auto cfg = default_config();
    cfg.options.samples = 50;
    const auto s = draw_table2_samples(cfg);
    ASSERT_EQ(s.size(), 50u);
    for (const auto& d : s) {
        EXPECT_GE(d.mu, 0.05);
        EXPECT_LE(d.mu, 0.15);
        EXPECT_GE(d.gamma, 0.2);
        EXPECT_LE(d.gamma, 0.6);
    }
}

TEST(Cli, SimulateStructure) {
    const auto r = invoke({"simulate", "--x", "1.4", "--paths", "2", "--seed", "3"});
    ASSERT_EQ(r.code, kOk) << r.err;
    const auto ls = lines(r.out);
    std::size_t rows = 0;
    for (const auto& l : ls) {
        if (!l.empty() && l[0] != '#' && l != "path,t,X,pi") ++rows;
    }
    EXPECT_EQ(rows, 2u * 501u);
    EXPECT_EQ(invoke({"simulate", "--x", "1.8"}).code, kUsage);
}
