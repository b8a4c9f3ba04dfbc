#include <cmath>
#include <string>

#include <gtest/gtest.h>

#include "intlen/intlen.hpp"

using namespace intlen;
using namespace intlen::cli;

namespace {

RunConfig config_for(Command c) {
    RunConfig cfg;
    cfg.command = c;
    return cfg;
}

double num(const Json& j) { return j.is_string() ? std::stod(j.get<std::string>()) : j.get<double>(); }

}  // namespace

TEST(Parse, ExactNumbers) {
    EXPECT_EQ(parse_exact("3/4"), Rational(3, 4));
    EXPECT_EQ(parse_exact(" -6/8 "), Rational(-3, 4));
    EXPECT_EQ(parse_exact("0.8660254"), Rational(8660254, 10000000));
    EXPECT_EQ(parse_exact("-1.25e-3"), Rational(-1, 800));
    EXPECT_EQ(parse_exact("007"), Rational(7));
    EXPECT_EQ(parse_exact("1e3"), Rational(1000));
    EXPECT_EQ(parse_exact(".5"), Rational(1, 2));
    EXPECT_EQ(parse_exact("0"), Rational(0));
    EXPECT_THROW(parse_exact("1/0"), InputError);
    EXPECT_THROW(parse_exact("abc"), InputError);
    EXPECT_THROW(parse_exact(""), InputError);
    EXPECT_THROW(parse_exact("1e99999"), InputError);
}

TEST(Parse, Lattice) {
    const auto b = parse_lattice("1,0,1/2,0.8660254");
    EXPECT_EQ(b.e2x, Rational(1, 2));
    EXPECT_THROW(parse_lattice("1,0,2,0"), InputError);
    EXPECT_THROW(parse_lattice("1,0,1"), InputError);
    EXPECT_THROW(parse_lattice("1,0,x,1"), InputError);
}

TEST(Parse, Grid) {
    const auto g = parse_grid<double>("1e-4:0.25:50", false);
    ASSERT_EQ(g.size(), 50u);
    EXPECT_EQ(g.front(), 1e-4);
    EXPECT_EQ(g.back(), 0.25);
    const auto h = parse_grid<double>("1e-2:1e-12:11", true);
    ASSERT_EQ(h.size(), 11u);
    EXPECT_NEAR(h[5], 1e-7, 1e-20);
    EXPECT_EQ(h.back(), 1e-12);
    EXPECT_EQ(parse_grid<double>("0.3:0.3:1", false).size(), 1u);
    EXPECT_THROW(parse_grid<double>("0.1:0.2", false), InputError);
    EXPECT_THROW(parse_grid<double>("0.1:0.2:0", false), InputError);
    EXPECT_THROW(parse_grid<double>("0.1:0.2:1", false), InputError);
    EXPECT_THROW(parse_grid<double>("0:0.2:5", true), InputError);
}

TEST(Torus, SquareReport) {
    const auto r = run_torus<double>(config_for(Command::Torus), "1,0,0,1", "10");
    EXPECT_TRUE(r.ok());
    EXPECT_DOUBLE_EQ(num(r.results["k_real"]), 1.0);
    EXPECT_DOUBLE_EQ(num(r.results["best_ratio"]), 1.0);
    EXPECT_DOUBLE_EQ(num(r.results["systole"]), 1.0);
    const auto j = r.to_json();
    EXPECT_EQ(j["command"], "torus");
    EXPECT_EQ(j["version"], "1.0.0");
    EXPECT_TRUE(j["timing_ms"].is_null());
    EXPECT_TRUE(j["violations"].empty());
}

TEST(Torus, HexagonalReport) {
    const auto r = run_torus<double>(config_for(Command::Torus), "1,0,0.5,0.8660254", "6");
    EXPECT_TRUE(r.ok());
    EXPECT_NEAR(num(r.results["k_real"]), 1.154701, 1e-6);
    EXPECT_NEAR(num(r.results["best_ratio"]), 1.154701, 1e-6);
}

TEST(Torus, ExtendedValuesAreStrings) {
    RunConfig cfg = config_for(Command::Torus);
    cfg.precision = Precision::Extended;
    const auto r = run_torus<Extended>(cfg, "1,0,1/2,0.8660254", "4");
    ASSERT_TRUE(r.results["k_real"].is_string());
    // 0.8660254 is not sqrt(3)/2, so K = 1/0.8660254
    EXPECT_EQ(r.results["k_real"].get<std::string>().substr(0, 14), "1.154700543425");
}

TEST(Torus, DegenerateLatticeIsInputError) {
    EXPECT_THROW(run_torus<double>(config_for(Command::Torus), "1,0,2,0", "10"), InputError);
    EXPECT_THROW(run_torus<double>(config_for(Command::Torus), "1,0,0,1", "0.5"), Error);
}

TEST(Torus, CsvIsRejected) {
    const auto r = run_torus<double>(config_for(Command::Torus), "1,0,0,1", "3");
    EXPECT_THROW(r.render(OutputFormat::Csv), InputError);
}

TEST(Cylinder, SweepHasNoViolations) {
    RunConfig cfg = config_for(Command::Cylinder);
    cfg.seed = 42;
    CylinderOptions opt;
    opt.core_length = "0.2";
    opt.samples = 10000;
    const auto r = run_cylinder<double>(cfg, opt);
    EXPECT_TRUE(r.ok()) << r.violations.front();
    EXPECT_EQ(r.results["pairs"], 10000);
    EXPECT_GT(r.results["count_at_lower_bound"].get<std::int64_t>(), 0);
    EXPECT_GT(r.results["count_at_upper_bound"].get<std::int64_t>(), 0);
    ASSERT_TRUE(r.table);
    EXPECT_EQ(r.table->rows.size(), 10000u);
    const std::string csv = r.render(OutputFormat::Csv);
    EXPECT_EQ(csv.substr(0, csv.find('\n')),
              "sample,entry1,winding1,crossing_sign1,entry2,winding2,crossing_sign2,same_side,count,lo,hi,sign,"
              "retries,ok");
}

TEST(Cylinder, InputErrors) {
    CylinderOptions opt;
    opt.core_length = "0.3";
    opt.samples = 10;
    EXPECT_THROW(run_cylinder<double>(config_for(Command::Cylinder), opt), ModeError);
    opt.core_length = "0.2";
    opt.samples = 0;
    EXPECT_THROW(run_cylinder<double>(config_for(Command::Cylinder), opt), InputError);
    opt.samples = 10;
    opt.core_length = "";
    EXPECT_THROW(run_cylinder<double>(config_for(Command::Cylinder), opt), InputError);
}

TEST(Cylinder, SameSeedSameReport) {
    CylinderOptions opt;
    opt.samples = 500;
    RunConfig cfg = config_for(Command::Cylinder);
    cfg.seed = 7;
    const auto a = run_cylinder<double>(cfg, opt).render(OutputFormat::Json);
    const auto b = run_cylinder<double>(cfg, opt).render(OutputFormat::Json);
    EXPECT_EQ(a, b);
    cfg.seed = 8;
    EXPECT_NE(a, run_cylinder<double>(cfg, opt).render(OutputFormat::Json));
}

TEST(Cylinder, ConfigDocument) {
    CylinderOptions opt;
    opt.core_length.clear();
    opt.config_path = std::string(INTLEN_SAMPLES_DIR) + "/arc_pairs.json";
    const auto r = run_cylinder<double>(config_for(Command::Cylinder), opt);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.results["pairs"], 3);
    EXPECT_EQ(r.inputs["mode"], "shrunk");
    EXPECT_THROW(load_arc_pairs<double>("/nonexistent/pairs.json"), InputError);
    EXPECT_THROW(parse_arc_pairs<double>(Json::parse(R"({"core_length": 0.2})")), InputError);
}

TEST(Bounds, Table) {
    BoundsOptions opt;
    opt.genus = 2;
    opt.grid = "1e-4:0.25:50";
    const auto r = run_bounds<double>(config_for(Command::Bounds), opt);
    EXPECT_TRUE(r.ok());
    ASSERT_TRUE(r.table);
    EXPECT_EQ(r.table->rows.size(), 50u);
    EXPECT_EQ(r.results["rows"].size(), 50u);
    EXPECT_EQ(r.results["outside_short_regime"], 0);
    const std::string csv = r.render(OutputFormat::Csv);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "l1,lower,upper,case2,lower_profile,upper_profile");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 51);
}

TEST(Bounds, Errors) {
    BoundsOptions opt;
    opt.genus = 1;
    EXPECT_THROW(run_bounds<double>(config_for(Command::Bounds), opt), InputError);
    opt.genus = 2;
    opt.grid = "0.5:2:3";
    EXPECT_THROW(run_bounds<double>(config_for(Command::Bounds), opt), InputError);
}

TEST(Verify, TorusSuitePasses) {
    const auto r = run_verify<double>(config_for(Command::Verify), Suite::Torus);
    EXPECT_TRUE(r.ok()) << r.violations.front();
    EXPECT_TRUE(r.results.contains("torus"));
    EXPECT_FALSE(r.results.contains("cylinder"));
    EXPECT_FALSE(r.results.contains("bounds"));
    for (const auto& [name, check] : r.results["torus"].items()) {
        EXPECT_TRUE(check["passed"].get<bool>()) << name;
    }
}

TEST(Verify, UnknownSuite) {
    EXPECT_THROW(parse_suite("nothing"), InputError);
    EXPECT_EQ(parse_suite("bounds"), Suite::Bounds);
}

TEST(Verify, Deterministic) {
    RunConfig cfg = config_for(Command::Verify);
    cfg.seed = 3;
    const auto a = run_verify<double>(cfg, Suite::Torus).render(OutputFormat::Json);
    const auto b = run_verify<double>(cfg, Suite::Torus).render(OutputFormat::Json);
    EXPECT_EQ(a, b);
}

TEST(Verify, TimingOnlyWhenAsked) {
    RunConfig cfg = config_for(Command::Torus);
    cfg.timing = true;
    const auto r = run_torus<double>(cfg, "1,0,0,1", "3");
    ASSERT_TRUE(r.timing_ms.has_value());
    EXPECT_GE(*r.timing_ms, 0.0);
}
