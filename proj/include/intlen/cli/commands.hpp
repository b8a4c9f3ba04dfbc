#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "intlen/bounds.hpp"
#include "intlen/cli/parse.hpp"
#include "intlen/cli/report.hpp"
#include "intlen/cylinder.hpp"
#include "intlen/flat_torus.hpp"
#include "intlen/parallel.hpp"
#include "intlen/rng.hpp"

namespace intlen::cli {

inline Json class_json(const torus::IntegerClass& u) { return Json::array({u.a, u.b}); }

/// Runs fn and stores the elapsed time in the report when timing is enabled.
template <typename Fn>
Report timed(const RunConfig& config, Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    Report r = fn();
    if (config.timing) {
        const auto stop = std::chrono::steady_clock::now();
        r.timing_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    }
    return r;
}

inline Json config_json(const RunConfig& config) {
    Json j;
    j["seed"] = config.seed;
    j["precision"] = config.precision == Precision::Double ? "double" : "extended";
    return j;
}

/// Exhaustive search on one flat torus: best intersection ratio, K, systole,
/// the segment bound and the stable/L2 norm comparison.
template <ScalarReal Real>
Report run_torus(const RunConfig& config, const std::string& lattice_text, const std::string& cutoff_text) {
    return timed(config, [&] {
        const torus::ExactBasis basis = parse_lattice(lattice_text);
        const torus::Lattice<Real> lat(basis);
        const Real cutoff = parse_real<Real>(cutoff_text);

        Report r;
        r.command = "torus";
        r.inputs = config_json(config);
        r.inputs["lattice"] = lattice_text;
        r.inputs["cutoff"] = value(cutoff);

        const auto best = torus::best_ratio_search(lat, cutoff);
        const Real k = torus::k_real(lat);
        const auto seg = torus::segment_bound_check(lat, cutoff);
        const Real tol = Real(1e-12);

        r.results["systole"] = value(torus::systole(lat));
        r.results["diameter"] = value(torus::diameter(lat));
        r.results["covolume"] = value(lat.covolume());
        r.results["k_real"] = value(k);
        r.results["best_ratio"] = value(best.ratio);
        r.results["argmax"] = {{"u", class_json(best.u)},
                               {"v", class_json(best.v)},
                               {"intersection", torus::intersection_number(best.u, best.v)}};
        r.results["classes"] = best.classes;
        r.results["pairs"] = best.pairs;
        r.results["segment_bound"] = {{"max_observed", value(seg.max_observed)},
                                      {"bound", value(seg.bound)},
                                      {"sine_bound", value(seg.sine_bound)},
                                      {"argmax", {{"u", class_json(seg.u)}, {"v", class_json(seg.v)}}},
                                      {"pairs", seg.pairs}};
        if (best.ratio > k * (Real(1) + tol)) {
            r.violations.push_back("best ratio " + to_string(best.ratio) + " exceeds K = " + to_string(k));
        }
        if (!seg.within_bound) {
            r.violations.push_back("segment bound exceeded: " + to_string(seg.max_observed) + " > 9");
        }
        if (!seg.within_sine_bound) {
            r.violations.push_back("sine bound exceeded: " + to_string(seg.max_observed) + " > " +
                                   to_string(seg.sine_bound));
        }

        Json norms = Json::array();
        const std::vector<torus::IntegerClass> probes{{1, 0}, {0, 1}, {1, 1}, best.u, best.v};
        for (const auto& u : probes) {
            const auto nc = torus::norm_comparison_report(lat, torus::RealClass<Real>::from(u), tol);
            norms.push_back({{"class", class_json(u)},
                             {"stable", value(nc.stable)},
                             {"l2", value(nc.l2)},
                             {"lower_tight", nc.lower_tight},
                             {"upper_tight", nc.upper_tight}});
            if (!(nc.inequalities_hold && nc.lower_tight && nc.upper_tight)) {
                r.violations.push_back("norm comparison not tight for class (" + std::to_string(u.a) + "," +
                                       std::to_string(u.b) + ")");
            }
        }
        r.results["norm_comparison"] = norms;
        return r;
    });
}

struct CylinderOptions {
    std::string core_length = "0.2";
    std::int64_t samples = 10000;
    cylinder::CollarMode mode = cylinder::CollarMode::ShrunkB;
    double max_winding = 8.0;
    /// arc pairs from a JSON document replace the random samples; its
    /// core_length is used when core_length above is empty
    std::optional<std::string> config_path;
};

inline cylinder::CollarMode parse_mode(const std::string& m) {
    if (m == "full") return cylinder::CollarMode::Full;
    if (m == "shrunk") return cylinder::CollarMode::ShrunkB;
    throw InputError("mode must be 'full' or 'shrunk', got '" + m + "'");
}

template <ScalarReal Real>
void describe_outcome(Report& r, std::size_t index, const cylinder::ArcPairOutcome<Real>& o) {
    r.table->rows.push_back({std::to_string(index), cell(o.first.entry_t), cell(o.first.winding),
                             std::to_string(o.first.crossing_sign), cell(o.second.entry_t), cell(o.second.winding),
                             std::to_string(o.second.crossing_sign), cell(o.same_side),
                             std::to_string(o.count), std::to_string(o.bounds.lo), std::to_string(o.bounds.hi),
                             std::to_string(o.bounds.sign), std::to_string(o.retries), cell(o.ok())});
    if (o.ok()) return;
    std::string what;
    if (!o.count_ok) what += " count " + std::to_string(o.count) + " outside [" + std::to_string(o.bounds.lo) + ", " +
                             std::to_string(o.bounds.hi) + "]";
    if (!o.signs_ok) what += " crossing signs differ from " + std::to_string(o.bounds.sign);
    if (!o.length_ok) what += " arc shorter than its lower bound";
    r.violations.push_back("sample " + std::to_string(index) + ":" + what);
}

/// Bound-versus-oracle sweep in one collar. Sample i draws its arcs from the
/// stream ("cylinder", i) of the seed, so the sweep is reproducible whatever
/// the thread count.
template <ScalarReal Real>
Report run_cylinder(const RunConfig& config, const CylinderOptions& opt) {
    return timed(config, [&] {
        std::optional<ArcPairDocument<Real>> doc;
        std::string core_text = opt.core_length;
        cylinder::CollarMode mode = opt.mode;
        if (opt.config_path) {
            doc = load_arc_pairs<Real>(*opt.config_path);
            if (core_text.empty()) core_text = doc->core_length;
            mode = parse_mode(doc->mode);
        } else if (opt.samples < 1) {
            throw InputError("samples must be >= 1");
        }
        if (core_text.empty()) {
            throw InputError("no core length given");
        }
        const Real core = parse_real<Real>(core_text);
        const auto cyl = cylinder::make_collar(core, mode);

        Report r;
        r.command = "cylinder";
        r.inputs = config_json(config);
        r.inputs["core_length"] = value(core);
        r.inputs["mode"] = mode == cylinder::CollarMode::Full ? "full" : "shrunk";
        if (doc) {
            r.inputs["config"] = *opt.config_path;
        } else {
            r.inputs["samples"] = opt.samples;
            r.inputs["max_winding"] = opt.max_winding;
        }

        const std::size_t n = doc ? doc->pairs.size() : static_cast<std::size_t>(opt.samples);
        std::vector<std::optional<cylinder::ArcPairOutcome<Real>>> outcomes(n);
        std::vector<std::string> failures(n);
        parallel_for(n, [&](std::size_t i) {
            CounterRng rng(config.seed, "cylinder", i);
            cylinder::ArcSpec<Real> a, b;
            if (doc) {
                std::tie(a, b) = doc->pairs[i];
            } else {
                a = cylinder::random_arc(cyl, rng, opt.max_winding);
                b = cylinder::random_arc(cyl, rng, opt.max_winding);
            }
            try {
                outcomes[i] = cylinder::check_arc_pair(cyl, a, b, rng);
            } catch (const Error& e) {
                failures[i] = e.what();
            }
        });

        r.table = Table{{"sample", "entry1", "winding1", "crossing_sign1", "entry2", "winding2", "crossing_sign2",
                         "same_side", "count", "lo", "hi", "sign", "retries", "ok"},
                        {}};
        std::int64_t at_lo = 0, at_hi = 0, retries = 0, crossings = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!outcomes[i]) {
                r.violations.push_back("sample " + std::to_string(i) + ": " + failures[i]);
                continue;
            }
            const auto& o = *outcomes[i];
            describe_outcome(r, i, o);
            const auto c = static_cast<std::int64_t>(o.count);
            at_lo += c == o.bounds.lo;
            at_hi += c == o.bounds.hi;
            retries += o.retries;
            crossings += c;
        }
        r.results["half_width"] = value(cyl.half_width());
        r.results["boundary_length"] = value(cyl.boundary_length());
        r.results["pairs"] = n;
        r.results["count_at_lower_bound"] = at_lo;
        r.results["count_at_upper_bound"] = at_hi;
        r.results["total_crossings"] = crossings;
        r.results["retries"] = retries;
        Json rows = Json::array();
        for (const auto& row : r.table->rows) {
            Json o;
            for (std::size_t k = 0; k < row.size(); ++k) o[r.table->header[k]] = row[k];
            rows.push_back(std::move(o));
        }
        r.results["samples"] = std::move(rows);
        return r;
    });
}

struct BoundsOptions {
    std::int64_t genus = 2;
    std::string grid = "1e-4:0.25:50";
    bool geometric = false;
};

/// Bound table over a grid of systole lengths.
template <ScalarReal Real>
Report run_bounds(const RunConfig& config, const BoundsOptions& opt) {
    return timed(config, [&] {
        if (opt.genus < 2) {
            throw InputError("genus must be >= 2, got " + std::to_string(opt.genus));
        }
        const auto grid = parse_grid<Real>(opt.grid, opt.geometric);
        const auto table = bounds::asymptotic_profile(opt.genus, grid);

        Report r;
        r.command = "bounds";
        r.inputs = config_json(config);
        r.inputs["genus"] = opt.genus;
        r.inputs["l1_grid"] = opt.grid;
        r.inputs["geometric"] = opt.geometric;

        r.table = Table{{"l1", "lower", "upper", "case2", "lower_profile", "upper_profile"}, {}};
        Json rows = Json::array();
        std::int64_t outside = 0;
        for (const auto& row : table.rows) {
            r.table->rows.push_back({cell(row.l1), cell(row.lower), cell(row.upper), cell(row.case2),
                                     cell(row.lower_profile), cell(row.upper_profile)});
            rows.push_back({{"l1", value(row.l1)},
                            {"lower", value(row.lower)},
                            {"upper", value(row.upper)},
                            {"case2", value(row.case2)},
                            {"lower_profile", value(row.lower_profile)},
                            {"upper_profile", value(row.upper_profile)}});
            if (!(row.lower < row.upper)) {
                r.violations.push_back("l1 = " + to_string(row.l1) + ": lower bound >= upper bound");
            }
            outside += !(row.l1 < hyptrig::short_geodesic_limit<Real>());
        }
        r.results["rows"] = std::move(rows);
        r.results["lower_profile_limit"] = value(table.lower_limit);
        r.results["upper_profile_limit"] = value(table.upper_limit);
        r.results["lower_profile_min"] = value(table.a_empirical);
        r.results["upper_profile_max"] = value(table.b_empirical);
        r.results["lower_profile_increasing"] = table.lower_increasing;
        r.results["upper_profile_decreasing"] = table.upper_decreasing;
        r.results["outside_short_regime"] = outside;
        return r;
    });
}

}  // namespace intlen::cli
