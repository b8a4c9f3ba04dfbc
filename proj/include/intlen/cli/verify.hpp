#pragma once

// The invariant suites behind `intlen verify`.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "intlen/bounds.hpp"
#include "intlen/cli/commands.hpp"
#include "intlen/cli/report.hpp"
#include "intlen/cylinder.hpp"
#include "intlen/flat_torus.hpp"
#include "intlen/parallel.hpp"
#include "intlen/rng.hpp"

namespace intlen::cli {

enum class Suite { All, Torus, Cylinder, Bounds };

inline Suite parse_suite(const std::string& s) {
    if (s == "all") return Suite::All;
    if (s == "torus") return Suite::Torus;
    if (s == "cylinder") return Suite::Cylinder;
    if (s == "bounds") return Suite::Bounds;
    throw InputError("unknown suite '" + s + "' (expected all, torus, cylinder or bounds)");
}

/// Outcome of one named check: a summary object plus failure messages.
struct Check {
    explicit Check(std::string n) : name(std::move(n)) {}

    std::string name;
    Json summary = Json::object();
    std::vector<std::string> failures;

    void fail(std::string what) {
        // keep reports readable when a check fails wholesale
        if (failures.size() < 50) failures.push_back(std::move(what));
        ++failure_count;
    }
    std::size_t failure_count = 0;
};

/// Random lattice with basis vectors of length between about 0.4 and 2.5,
/// skewed and sometimes negatively oriented.
template <ScalarReal Real>
torus::Lattice<Real> random_lattice(CounterRng& rng) {
    for (;;) {
        torus::Vec2<Real> e1{Real(rng.uniform(0.5, 2.0)), Real(rng.uniform(-0.4, 0.4))};
        torus::Vec2<Real> e2{Real(rng.uniform(-1.0, 1.0)), Real(rng.uniform(0.4, 2.0))};
        if (rng.sign() < 0) std::swap(e1, e2);
        using std::abs;
        if (abs(torus::cross(e1, e2)) > Real(0.2)) return torus::Lattice<Real>(e1, e2);
    }
}

namespace suites {

template <ScalarReal Real>
std::vector<Check> torus_suite(std::uint64_t seed) {
    using std::abs;
    const Real tol = Real(1e-12);
    std::vector<Check> out;

    {
        Check c{"flat_equality"};
        std::vector<torus::Lattice<Real>> lats;
        for (int i = 0; i < 20; ++i) {
            CounterRng rng(seed, "verify.torus.lattice", i);
            lats.push_back(random_lattice<Real>(rng));
        }
        std::vector<Real> ratio(lats.size()), kval(lats.size());
        parallel_for(lats.size(), [&](std::size_t i) {
            kval[i] = torus::k_real(lats[i]);
            ratio[i] = torus::best_ratio_search(lats[i], Real(30) * torus::systole(lats[i])).ratio;
        });
        Real worst{};
        for (std::size_t i = 0; i < lats.size(); ++i) {
            const Real kv = kval[i] * lats[i].covolume();
            if (abs(kv - Real(1)) > tol) c.fail("lattice " + std::to_string(i) + ": K V = " + to_string(kv));
            if (ratio[i] > kval[i] * (Real(1) + tol)) {
                c.fail("lattice " + std::to_string(i) + ": best ratio above K");
            }
            worst = std::max(worst, ratio[i] / kval[i]);
        }
        for (const auto& [name, lat] : {std::pair{"square", torus::Lattice<Real>::square()},
                                        std::pair{"hexagonal", torus::Lattice<Real>::hexagonal()}}) {
            const Real k = torus::k_real(lat);
            const Real r = torus::best_ratio_search(lat, Real(30) * torus::systole(lat)).ratio;
            if (abs(r - k) > tol * k) c.fail(std::string(name) + ": best ratio " + to_string(r) + " != K");
            c.summary[name] = value(r);
        }
        c.summary["lattices"] = lats.size();
        c.summary["max_ratio_over_k"] = value(worst);
        out.push_back(std::move(c));
    }

    {
        Check c{"crossing_oracle"};
        const std::size_t n = 500;
        std::vector<std::string> fails(n);
        std::vector<int> retries(n);
        parallel_for(n, [&](std::size_t i) {
            CounterRng rng(seed, "verify.torus.oracle", i);
            const auto lat = random_lattice<Real>(rng);
            torus::IntegerClass u, v;
            do {
                u = {rng.uniform_int(-8, 8), rng.uniform_int(-8, 8)};
                v = {rng.uniform_int(-8, 8), rng.uniform_int(-8, 8)};
            } while (!u.is_primitive() || !v.is_primitive() || torus::intersection_number(u, v) == 0);
            const auto k = torus::intersection_number(u, v);
            for (;;) {
                try {
                    const auto rep = torus::crossing_count_oracle(
                        lat, u, v, torus::Vec2<Real>{Real(rng.uniform()), Real(rng.uniform())});
                    bool uniform = true;
                    for (int s : rep.signs) uniform = uniform && s == (k > 0 ? 1 : -1);
                    if (static_cast<std::int64_t>(rep.count) != std::abs(k) || !uniform) {
                        fails[i] = "pair " + std::to_string(i) + ": count " + std::to_string(rep.count) +
                                   " vs |Int| " + std::to_string(std::abs(k));
                    }
                    break;
                } catch (const RetrySignal&) {
                    if (++retries[i] > 8) {
                        fails[i] = "pair " + std::to_string(i) + ": no generic offset found";
                        break;
                    }
                }
            }
        });
        for (auto& f : fails) if (!f.empty()) c.fail(f);
        c.summary["pairs"] = n;
        out.push_back(std::move(c));
    }

    {
        Check c{"segment_bound"};
        Real worst{}, worst_sine_ratio{};
        std::size_t pairs = 0;
        for (int i = 0; i < 20; ++i) {
            CounterRng rng(seed, "verify.torus.segment", i);
            const auto lat = random_lattice<Real>(rng);
            const auto rep = torus::segment_bound_check(lat, Real(30) * torus::systole(lat));
            if (!rep.within_bound) c.fail("lattice " + std::to_string(i) + ": " + to_string(rep.max_observed) + " > 9");
            if (!rep.within_sine_bound) c.fail("lattice " + std::to_string(i) + ": above l1^2 / V");
            worst = std::max(worst, rep.max_observed);
            worst_sine_ratio = std::max(worst_sine_ratio, rep.max_observed / rep.sine_bound);
            pairs += rep.pairs;
        }
        c.summary["pairs"] = pairs;
        c.summary["max_observed"] = value(worst);
        c.summary["max_over_sine_bound"] = value(worst_sine_ratio);
        out.push_back(std::move(c));
    }

    {
        Check c{"norm_comparison"};
        for (int i = 0; i < 100; ++i) {
            CounterRng rng(seed, "verify.torus.norm", i);
            const auto lat = random_lattice<Real>(rng);
            const torus::RealClass<Real> h{Real(rng.uniform(-5, 5)), Real(rng.uniform(-5, 5))};
            const auto nc = torus::norm_comparison_report(lat, h, tol);
            if (!(nc.inequalities_hold && nc.lower_tight && nc.upper_tight)) {
                c.fail("sample " + std::to_string(i) + ": not tight");
            }
        }
        c.summary["samples"] = 100;
        out.push_back(std::move(c));
    }

    {
        // the stable norm of an integer class is the length of its geodesic:
        // no splitting h = u + v into two closed geodesics is shorter
        Check c{"stable_norm_decomposition"};
        std::size_t checked = 0;
        for (int i = 0; i < 5; ++i) {
            CounterRng rng(seed, "verify.torus.decomposition", i);
            const auto lat = random_lattice<Real>(rng);
            const Real cutoff = Real(6) * torus::systole(lat);
            std::vector<torus::IntegerClass> all;
            torus::for_each_class_within(lat, cutoff, [&](const torus::IntegerClass& u, const Real&) {
                all.push_back(u);
            });
            for (const auto& u : all) {
                for (const auto& v : all) {
                    const torus::IntegerClass h = u + v;
                    if (h.is_zero()) continue;
                    ++checked;
                    const Real split = torus::class_length(lat, u) + torus::class_length(lat, v);
                    if (split < torus::class_length(lat, h) * (Real(1) - tol)) c.fail("lattice " + std::to_string(i));
                }
            }
        }
        c.summary["decompositions"] = checked;
        out.push_back(std::move(c));
    }
    return out;
}

/// Windings of one family of arcs of a simple closed geodesic: the smallest
/// |winding| lies in [m, m + 1) and the rest within a window of width 1
/// containing it, with no smaller |winding|.
template <ScalarReal Real>
std::vector<Real> sample_family(CounterRng& rng, std::int64_t m) {
    const int sigma = rng.sign();
    const double c_min = sigma * (double(m) + rng.uniform());
    const double a = c_min - 0.9 * rng.uniform();
    const auto count = rng.uniform_int(1, 4);
    std::vector<Real> out{Real(c_min)};
    while (static_cast<std::int64_t>(out.size()) < count) {
        const double c = a + rng.uniform() * (1.0 - 1e-9) + 1e-12;
        if (std::abs(c) >= std::abs(c_min) && std::abs(c - a) < 1.0) out.push_back(Real(c));
    }
    return out;
}

template <ScalarReal Real>
std::vector<Check> cylinder_suite(std::uint64_t seed) {
    std::vector<Check> out;
    const std::vector<std::string> cores{"0.05", "0.1", "0.2"};

    {
        Check c{"arc_pair_bounds"};
        std::size_t total = 0, retries = 0;
        for (std::size_t li = 0; li < cores.size(); ++li) {
            const auto cyl = cylinder::make_collar(parse_real<Real>(cores[li]), cylinder::CollarMode::ShrunkB);
            const std::size_t n = 10000;
            std::vector<std::string> fails(n);
            std::vector<int> tries(n);
            parallel_for(n, [&](std::size_t i) {
                CounterRng rng(seed, "verify.cylinder.arcs", li * 1000000 + i);
                const auto a = cylinder::random_arc(cyl, rng);
                const auto b = cylinder::random_arc(cyl, rng);
                try {
                    const auto o = cylinder::check_arc_pair(cyl, a, b, rng);
                    tries[i] = o.retries;
                    if (!o.ok()) fails[i] = "core " + cores[li] + " sample " + std::to_string(i);
                } catch (const Error& e) {
                    fails[i] = "core " + cores[li] + " sample " + std::to_string(i) + ": " + e.what();
                }
            });
            for (std::size_t i = 0; i < n; ++i) {
                if (!fails[i].empty()) c.fail(fails[i]);
                retries += tries[i];
            }
            total += n;
        }
        c.summary["pairs"] = total;
        c.summary["retries"] = retries;
        out.push_back(std::move(c));
    }

    {
        Check c{"rewind_grid"};
        std::vector<cylinder::Cylinder<Real>> cyls;
        for (const auto& s : cores) cyls.push_back(cylinder::make_collar(parse_real<Real>(s), cylinder::CollarMode::ShrunkB));
        constexpr std::int64_t kMax = 12;
        constexpr int kPerCell = 50;
        const std::size_t cells = (kMax + 1) * (kMax + 1);
        std::vector<std::vector<std::string>> fails(cells);
        parallel_for(cells, [&](std::size_t cell_index) {
            const std::int64_t mg = static_cast<std::int64_t>(cell_index) / (kMax + 1);
            const std::int64_t md = static_cast<std::int64_t>(cell_index) % (kMax + 1);
            for (int k = 0; k < kPerCell; ++k) {
                CounterRng rng(seed, "verify.cylinder.rewind", cell_index * 1000 + k);
                const auto g = sample_family<Real>(rng, mg);
                const auto d = sample_family<Real>(rng, md);
                for (bool same : {true, false}) {
                    const auto& cyl = cyls[(cell_index + k) % cyls.size()];
                    try {
                        const auto rep = cylinder::rewind_suite_check(cyl, g, d, same);
                        for (const auto& v : rep.violations) {
                            fails[cell_index].push_back("m = (" + std::to_string(mg) + ", " + std::to_string(md) + "): " + v);
                        }
                    } catch (const Error& e) {
                        fails[cell_index].push_back(e.what());
                    }
                }
            }
        });
        for (const auto& f : fails) for (const auto& s : f) c.fail(s);
        c.summary["cells"] = cells;
        c.summary["samples_per_cell"] = kPerCell;
        out.push_back(std::move(c));
    }

    {
        Check c{"twist_inversion"};
        const auto cyl = cylinder::make_collar(parse_real<Real>("0.2"), cylinder::CollarMode::ShrunkB);
        std::size_t n = 0;
        for (int i = 0; i < 2000; ++i) {
            CounterRng rng(seed, "verify.cylinder.twist", i);
            // dyadic operands keep the round trip exact in floating point
            const Real wind = Real(rng.uniform_int(-8 * 1024, 8 * 1024)) / Real(1024);
            const Real z = Real(rng.uniform_int(-40, 40)) / Real(2);
            const int eps = rng.sign();
            const Real back = cylinder::dehn_twist_winding(cylinder::dehn_twist_winding(wind, eps, z), eps, -z);
            if (back != wind) c.fail("twist round trip moved " + to_string(wind));
            const cylinder::ArcSpec<Real> arc{Real(rng.uniform()) * cyl.core_length(), wind, eps};
            const auto twisted = cylinder::dehn_twist_arc(cyl, arc, z);
            using std::abs;
            if (abs(twisted.winding - cylinder::dehn_twist_winding(wind, eps, z)) > Real(1e-12) * (Real(1) + abs(wind) + abs(z))) {
                c.fail("coordinate twist disagrees with winding rule at " + to_string(wind));
            }
            ++n;
        }
        c.summary["samples"] = n;
        out.push_back(std::move(c));
    }

    {
        Check c{"collar_constants"};
        std::vector<Real> grid, mono;
        const Real limit = hyptrig::short_geodesic_limit<Real>();
        for (int i = 1; i <= 1000; ++i) {
            grid.push_back(Real(i) / Real(4000));
            mono.push_back(limit * Real(i) / Real(1000));
        }
        const auto rep = bounds::collar_constants_check(grid, mono);
        for (const auto& v : rep.violations) c.fail(v);
        c.summary["points"] = rep.points;
        c.summary["min_b_margin"] = value(rep.min_b_margin);
        c.summary["min_half_margin"] = value(rep.min_half_margin);
        c.summary["min_collar_width"] = value(rep.min_cl);
        out.push_back(std::move(c));
    }
    return out;
}

template <ScalarReal Real>
std::vector<Check> bounds_suite(std::uint64_t seed) {
    using std::abs;
    std::vector<Check> out;

    {
        Check c{"hyperbolic_grid"};
        const auto grid = parse_grid<Real>("1e-4:0.25:200", true);
        std::size_t n = 0;
        for (std::int64_t s = 2; s <= 20; ++s) {
            for (const auto& l1 : grid) {
                const auto b = bounds::hyperbolic_bounds(s, l1);
                if (!(b.lower < b.upper)) c.fail("s = " + std::to_string(s) + ", l1 = " + to_string(l1) + ": lower >= upper");
                if (!(b.lower < b.case2)) c.fail("s = " + std::to_string(s) + ", l1 = " + to_string(l1) + ": lower >= case2");
                ++n;
            }
        }
        c.summary["points"] = n;
        out.push_back(std::move(c));
    }

    {
        // closed forms evaluated with 50 significant digits
        Check c{"reference_values"};
        const auto b = bounds::hyperbolic_bounds(2, parse_real<Real>("0.1"));
        const Real lower = parse_real<Real>("0.04395049336762613890859771915568661467022532"),
                   upper = parse_real<Real>("192.7925503140998205957338982072567800835518037"),
                   case2 = parse_real<Real>("1.355348619836106127659274950201577224543106");
        for (const auto& [got, want, name] : {std::tuple{b.lower, lower, "lower"}, std::tuple{b.upper, upper, "upper"},
                                              std::tuple{b.case2, case2, "case2"}}) {
            if (abs(got - want) > Real(1e-6) * abs(want)) c.fail(std::string(name) + " = " + to_string(got));
        }
        c.summary["lower"] = value(b.lower);
        c.summary["upper"] = value(b.upper);
        c.summary["case2"] = value(b.case2);
        out.push_back(std::move(c));
    }

    {
        Check c{"general_sandwich"};
        for (int i = 0; i < 1000; ++i) {
            CounterRng rng(seed, "verify.bounds.general", i);
            bounds::SurfaceParams<Real> p;
            p.genus = rng.uniform_int(1, 20);
            p.diameter = Real(rng.uniform(0.1, 10.0));
            p.l1 = Real(rng.uniform(0.01, 1.0)) * Real(2) * p.diameter;
            p.volume = Real(rng.uniform(0.1, 100.0));
            const auto r = bounds::general_bounds(p);
            if (!(r.lower_l1d <= r.upper_l1sq)) c.fail("sample " + std::to_string(i));
        }
        c.summary["samples"] = 1000;
        out.push_back(std::move(c));
    }

    {
        Check c{"collar_count_factor"};
        // at most 3s - 3 short geodesics, weight 6 each
        for (std::int64_t s = 2; s <= 20; ++s) {
            if (18 * (s - 1) != 6 * (3 * s - 3)) c.fail("s = " + std::to_string(s));
        }
        out.push_back(std::move(c));
    }

    {
        Check c{"asymptotic_profile"};
        const auto grid = parse_grid<Real>("1e-2:1e-12:101", true);
        const auto t = bounds::asymptotic_profile(2, grid);
        const auto& last = t.rows.back();
        const Real lower_dev = abs(last.lower_profile - t.lower_limit) / t.lower_limit;
        const Real upper_dev = abs(last.upper_profile - t.upper_limit) / t.upper_limit;
        if (!(lower_dev <= Real(0.10))) {
            c.fail("lower profile at l1 = 1e-12 is " + to_string(last.lower_profile, 8) + ", " +
                   to_string(Real(100) * lower_dev, 4) + "% from " + to_string(t.lower_limit, 4));
        }
        if (!(upper_dev <= Real(0.05))) {
            c.fail("upper profile at l1 = 1e-12 is " + to_string(last.upper_profile, 8) + ", " +
                   to_string(Real(100) * upper_dev, 4) + "% from " + to_string(t.upper_limit, 4));
        }
        if (!t.lower_increasing) c.fail("lower profile not increasing as l1 decreases");
        if (!t.upper_decreasing) {
            std::size_t argmin = 0;
            for (std::size_t i = 1; i < t.rows.size(); ++i) {
                if (t.rows[i].upper_profile < t.rows[argmin].upper_profile) argmin = i;
            }
            c.fail("upper profile not decreasing as l1 decreases: minimum " +
                   to_string(t.rows[argmin].upper_profile, 8) + " at l1 = " + to_string(t.rows[argmin].l1, 4));
        }
        c.summary["lower_profile_at_end"] = value(last.lower_profile);
        c.summary["upper_profile_at_end"] = value(last.upper_profile);
        c.summary["lower_deviation"] = value(lower_dev);
        c.summary["upper_deviation"] = value(upper_dev);
        c.summary["lower_increasing"] = t.lower_increasing;
        c.summary["upper_decreasing"] = t.upper_decreasing;
        out.push_back(std::move(c));
    }
    (void)seed;
    return out;
}

}  // namespace suites

template <ScalarReal Real>
Report run_verify(const RunConfig& config, Suite suite) {
    return timed(config, [&] {
        Report r;
        r.command = "verify";
        r.inputs = config_json(config);
        const char* names[] = {"all", "torus", "cylinder", "bounds"};
        r.inputs["suite"] = names[static_cast<int>(suite)];
        auto add = [&](const char* name, std::vector<Check> checks) {
            Json js = Json::object();
            for (auto& c : checks) {
                Json entry = c.summary;
                entry["passed"] = c.failure_count == 0;
                entry["failures"] = c.failure_count;
                js[c.name] = std::move(entry);
                for (auto& f : c.failures) r.violations.push_back(std::string(name) + "." + c.name + ": " + f);
                if (c.failure_count > c.failures.size()) {
                    r.violations.push_back(std::string(name) + "." + c.name + ": " +
                                           std::to_string(c.failure_count - c.failures.size()) + " more failures");
                }
            }
            r.results[name] = std::move(js);
        };
        if (suite == Suite::All || suite == Suite::Torus) add("torus", suites::torus_suite<Real>(config.seed));
        if (suite == Suite::All || suite == Suite::Cylinder) add("cylinder", suites::cylinder_suite<Real>(config.seed));
        if (suite == Suite::All || suite == Suite::Bounds) add("bounds", suites::bounds_suite<Real>(config.seed));
        return r;
    });
}

}  // namespace intlen::cli
