// intlen: searches, oracle sweeps, bound tables and the verification suite.
//
// Exit status: 0 when the report has no violations, 1 when it has some,
// 2 on bad input.

#include <cstdint>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "intlen/intlen.hpp"

namespace {

using namespace intlen;
using namespace intlen::cli;

template <typename Fn>
Report dispatch(const RunConfig& config, Fn&& fn) {
    if (config.precision == Precision::Extended) {
        return fn(Extended{});
    }
    return fn(double{});
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Intersection form versus stable norm: flat tori, hyperbolic collars and bounds"};
    app.require_subcommand(1);

    RunConfig config;
    std::string precision = "double";
    std::string format = "json";
    std::string output;
    app.add_option("--seed", config.seed, "seed for every random stream")->capture_default_str();
    app.add_option("--precision", precision, "double or extended (50 digits)")
        ->check(CLI::IsMember({"double", "extended"}))
        ->capture_default_str();
    app.add_option("--format", format, "json or csv (csv for cylinder and bounds)")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--output", output, "write the report here instead of stdout");
    app.add_flag("--timing", config.timing, "record wall-clock time in the report (breaks byte-identity)");

    std::string lattice, cutoff;
    auto* torus_cmd = app.add_subcommand("torus", "exhaustive search on a flat torus");
    torus_cmd->add_option("--lattice", lattice, "basis e1x,e1y,e2x,e2y (decimals or p/q)")->required();
    torus_cmd->add_option("--cutoff", cutoff, "length cutoff for the enumeration")->required();

    CylinderOptions cyl;
    std::string mode = "shrunk";
    std::string cyl_config;
    auto* cyl_cmd = app.add_subcommand("cylinder", "arc-pair bounds against the universal-cover oracle");
    auto* core_opt = cyl_cmd->add_option("--core-length", cyl.core_length, "length of the core geodesic");
    cyl_cmd->add_option("--samples", cyl.samples, "number of random arc pairs")->capture_default_str();
    cyl_cmd->add_option("--mode", mode, "full or shrunk collar")
        ->check(CLI::IsMember({"full", "shrunk"}))
        ->capture_default_str();
    cyl_cmd->add_option("--max-winding", cyl.max_winding, "windings are drawn from [-W, W]")->capture_default_str();
    cyl_cmd->add_option("--config", cyl_config, "JSON document of arc pairs to check instead")
        ->check(CLI::ExistingFile)
        ->excludes("--samples");

    BoundsOptions bnd;
    auto* bounds_cmd = app.add_subcommand("bounds", "bound table over a grid of systole lengths");
    bounds_cmd->add_option("--genus", bnd.genus, "genus s >= 2")->required();
    bounds_cmd->add_option("--l1-grid", bnd.grid, "grid lo:hi:steps")->required();
    bounds_cmd->add_flag("--geometric", bnd.geometric, "constant ratio spacing");

    std::string suite_name;
    auto* verify_cmd = app.add_subcommand("verify", "run the invariant suites");
    verify_cmd->add_option("--suite", suite_name, "all, torus, cylinder or bounds")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help and --version come through here with status 0
        return app.exit(e) == 0 ? 0 : 2;
    }

    config.precision = precision == "extended" ? Precision::Extended : Precision::Double;
    config.format = format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
    if (!output.empty()) config.output_path = output;
    if (!cyl_config.empty()) cyl.config_path = cyl_config;
    if (core_opt->count() == 0) cyl.core_length.clear();
    cyl.mode = parse_mode(mode);

    try {
        Report report;
        if (torus_cmd->parsed()) {
            config.command = Command::Torus;
            report = dispatch(config, [&](auto r) { return run_torus<decltype(r)>(config, lattice, cutoff); });
        } else if (cyl_cmd->parsed()) {
            config.command = Command::Cylinder;
            if (core_opt->count() == 0 && !cyl.config_path) {
                throw InputError("--core-length is required");
            }
            report = dispatch(config, [&](auto r) { return run_cylinder<decltype(r)>(config, cyl); });
        } else if (bounds_cmd->parsed()) {
            config.command = Command::Bounds;
            report = dispatch(config, [&](auto r) { return run_bounds<decltype(r)>(config, bnd); });
            if (report.results.value("outside_short_regime", 0) > 0) {
                std::cerr << "warning: some l1 values are >= 2 arsinh(1), outside the short-systole regime\n";
            }
        } else {
            config.command = Command::Verify;
            const Suite suite = parse_suite(suite_name);
            report = dispatch(config, [&](auto r) { return run_verify<decltype(r)>(config, suite); });
        }
        emit(report, config);
        for (const auto& v : report.violations) std::cerr << "violation: " << v << "\n";
        return report.ok() ? 0 : 1;
    } catch (const intlen::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
