#pragma once

// Closed-form bounds on K = sup |Int(h1, h2)| / (|h1|_s |h2|_s) and the
// numeric facts about collar constants they rely on.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "intlen/errors.hpp"
#include "intlen/hyptrig.hpp"
#include "intlen/real.hpp"

namespace intlen::bounds {

template <ScalarReal Real = double>
struct SurfaceParams {
    std::int64_t genus = 1;
    Real l1{};        // homological systole
    Real diameter{};
    Real volume{};

    void validate() const {
        if (genus < 1) {
            throw InputError("genus must be >= 1, got " + std::to_string(genus));
        }
        auto positive = [](const Real& v, const char* name) {
            if (!is_finite(v) || !(v > 0)) {
                throw InputError(std::string(name) + " must be positive and finite, got " + to_string(v));
            }
        };
        positive(l1, "l1");
        positive(diameter, "diameter");
        positive(volume, "volume");
        if (l1 > Real(2) * diameter) {
            throw InputError("l1 = " + to_string(l1) + " exceeds twice the diameter " + to_string(diameter));
        }
    }
};

template <ScalarReal Real = double>
struct BoundReport {
    Real inv_vol{};     // 1/V <= K
    Real lower_l1d{};   // 1/(2 l1 D) <= K
    Real upper_l1sq{};  // K <= 9/l1^2
    std::optional<Real> hyperbolic_lower;
    std::optional<Real> hyperbolic_upper;
    std::optional<Real> case2_value;
};

/// Bounds valid in any curvature.
template <ScalarReal Real>
BoundReport<Real> general_bounds(const SurfaceParams<Real>& p) {
    p.validate();
    BoundReport<Real> r;
    r.inv_vol = Real(1) / p.volume;
    r.lower_l1d = Real(1) / (Real(2) * p.l1 * p.diameter);
    r.upper_l1sq = Real(9) / (p.l1 * p.l1);
    if (!(r.lower_l1d <= r.upper_l1sq)) {
        throw Error("internal: 1/(2 l1 D) > 9/l1^2 although l1 <= 2D");
    }
    return r;
}

template <ScalarReal Real = double>
struct HyperbolicBounds {
    Real lower{};
    Real upper{};
    /// 1/(2 l1 cl(l1)), the contribution of a class winding around one collar
    Real case2{};
    /// l1 >= 2 arsinh(1): outside the short-systole regime the formulas still
    /// evaluate but the collar argument behind them does not apply.
    bool outside_short_regime = false;
};

/// Bounds for a hyperbolic surface of genus s >= 2 with homological systole l1:
///   lower = 1 / ((s - 1) l1 (105 s + 4 arsinh(4 / l1)))
///   upper = 144 + 18 (s - 1) / (l1 cl(l1))
template <ScalarReal Real>
HyperbolicBounds<Real> hyperbolic_bounds(std::int64_t s, const Real& l1) {
    using std::log;
    if (s < 2) {
        throw InputError("hyperbolic bounds need genus >= 2, got " + std::to_string(s));
    }
    if (!is_finite(l1) || !(l1 > 0)) {
        throw InputError("l1 must be positive and finite, got " + to_string(l1));
    }
    const Real sm1 = Real(s - 1);
    const Real cl = hyptrig::collar_width(l1);
    HyperbolicBounds<Real> b;
    b.lower = Real(1) / (sm1 * l1 * (Real(105) * Real(s) + Real(4) * hyptrig::arsinh(Real(4) / l1)));
    b.upper = Real(144) + Real(18) * sm1 / (l1 * cl);
    b.case2 = Real(1) / (Real(2) * l1 * cl);
    b.outside_short_regime = !(l1 < hyptrig::short_geodesic_limit<Real>());
    if (!(b.lower < b.upper)) {
        throw Error("internal: lower bound " + to_string(b.lower) + " >= upper bound " + to_string(b.upper));
    }
    return b;
}

/// general_bounds plus the hyperbolic fields, for genus >= 2.
template <ScalarReal Real>
BoundReport<Real> full_bounds(const SurfaceParams<Real>& p) {
    BoundReport<Real> r = general_bounds(p);
    if (p.genus >= 2) {
        const auto h = hyperbolic_bounds(p.genus, p.l1);
        r.hyperbolic_lower = h.lower;
        r.hyperbolic_upper = h.upper;
        r.case2_value = h.case2;
    }
    return r;
}

template <ScalarReal Real = double>
struct ProfileRow {
    Real l1{};
    Real lower{};
    Real upper{};
    Real case2{};
    Real lower_profile{};  // lower * l1 * |log l1|
    Real upper_profile{};  // upper * l1 * |log l1|
};

template <ScalarReal Real = double>
struct ProfileTable {
    std::int64_t genus = 2;
    std::vector<ProfileRow<Real>> rows;
    /// limits of the profiles as l1 -> 0: 1/(4(s-1)) and 18(s-1)
    Real lower_limit{};
    Real upper_limit{};
    /// empirical constants: min of the lower profile, max of the upper one
    Real a_empirical{};
    Real b_empirical{};
    /// taking rows in order of decreasing l1
    bool lower_increasing = true;
    bool upper_decreasing = true;
};

/// Tabulates the bounds scaled by l1 |log l1|, which stay bounded away from
/// 0 and infinity as l1 -> 0.
template <ScalarReal Real>
ProfileTable<Real> asymptotic_profile(std::int64_t s, const std::vector<Real>& l1_grid) {
    using std::abs;
    using std::log;
    for (const auto& x : l1_grid) {
        if (!is_finite(x) || !(x > 0) || !(x < Real(1))) {
            throw InputError("profile grid values must lie in (0, 1), got " + to_string(x));
        }
    }
    ProfileTable<Real> t;
    t.genus = s;
    t.rows.reserve(l1_grid.size());
    for (const auto& x : l1_grid) {
        const auto b = hyperbolic_bounds(s, x);
        const Real scale = x * abs(log(x));
        t.rows.push_back({x, b.lower, b.upper, b.case2, b.lower * scale, b.upper * scale});
    }
    t.lower_limit = Real(1) / (Real(4) * Real(s - 1));
    t.upper_limit = Real(18) * Real(s - 1);
    if (!t.rows.empty()) {
        t.a_empirical = t.rows.front().lower_profile;
        t.b_empirical = t.rows.front().upper_profile;
    }
    for (const auto& r : t.rows) {
        t.a_empirical = std::min(t.a_empirical, r.lower_profile);
        t.b_empirical = std::max(t.b_empirical, r.upper_profile);
    }
    std::vector<const ProfileRow<Real>*> order;
    for (const auto& r : t.rows) order.push_back(&r);
    std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->l1 > b->l1; });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (!(order[i]->lower_profile > order[i - 1]->lower_profile)) t.lower_increasing = false;
        if (!(order[i]->upper_profile < order[i - 1]->upper_profile)) t.upper_decreasing = false;
    }
    return t;
}

template <ScalarReal Real = double>
struct CollarCheckReport {
    std::size_t points = 0;
    std::size_t monotone_points = 0;
    /// smallest values of the margins over the grid; all positive on success
    Real min_b_margin{};      // 2(cl - 1.3) - 5 l cosh(cl - 1.3)
    Real min_half_margin{};   // l cosh(cl - 1.3) - 1/2
    Real min_cl{};
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/// Numeric facts about shrunk collars of half-width w = cl(l) - 1.3 for
/// l in (0, 1/4]:
///   2 w > 5 l cosh w,  l cosh w > 1/2 > 2 l,  cl(l) > 1.95,
/// (with 1/2 = 2 l allowed at l = 1/4)
/// and 1/(x cl(x)) strictly decreasing along `monotone_grid` (sorted
/// internally, within (0, 2 arsinh 1]). An empty monotone grid reuses l_grid.
template <ScalarReal Real>
CollarCheckReport<Real> collar_constants_check(const std::vector<Real>& l_grid,
                                               std::vector<Real> monotone_grid = {},
                                               const Real& shrink = Real(13) / Real(10)) {
    using std::cosh;
    for (const auto& l : l_grid) {
        if (!is_finite(l) || !(l > 0) || l > Real(1) / Real(4)) {
            throw InputError("collar grid values must lie in (0, 0.25], got " + to_string(l));
        }
    }
    if (monotone_grid.empty()) monotone_grid = l_grid;
    const Real limit = hyptrig::short_geodesic_limit<Real>();
    for (const auto& x : monotone_grid) {
        if (!is_finite(x) || !(x > 0) || x > limit) {
            throw InputError("monotonicity grid values must lie in (0, 2 arsinh 1], got " + to_string(x));
        }
    }

    CollarCheckReport<Real> rep;
    rep.points = l_grid.size();
    bool first = true;
    for (const auto& l : l_grid) {
        const Real cl = hyptrig::collar_width(l);
        const Real w = cl - shrink;
        const Real lb = l * cosh(w);
        const Real b_margin = Real(2) * w - Real(5) * lb;
        const Real half_margin = lb - Real(1) / Real(2);
        if (first) {
            rep.min_b_margin = b_margin;
            rep.min_half_margin = half_margin;
            rep.min_cl = cl;
            first = false;
        }
        rep.min_b_margin = std::min(rep.min_b_margin, b_margin);
        rep.min_half_margin = std::min(rep.min_half_margin, half_margin);
        rep.min_cl = std::min(rep.min_cl, cl);
        if (!(b_margin > 0)) {
            rep.violations.push_back("l = " + to_string(l) + ": 2(cl - shrink) <= 5 l cosh(cl - shrink)");
        }
        if (!(half_margin > 0)) {
            rep.violations.push_back("l = " + to_string(l) + ": l cosh(cl - shrink) <= 1/2");
        }
        // 2 l = 1/2 at the end point l = 1/4 itself, which no shrunk collar has
        const bool end_point = l == Real(1) / Real(4);
        if (!(Real(2) * l < Real(1) / Real(2) || (end_point && Real(2) * l == Real(1) / Real(2)))) {
            rep.violations.push_back("l = " + to_string(l) + ": 2 l >= 1/2");
        }
        if (!(cl > Real(195) / Real(100))) {
            rep.violations.push_back("l = " + to_string(l) + ": cl(l) <= 1.95");
        }
    }

    std::sort(monotone_grid.begin(), monotone_grid.end());
    rep.monotone_points = monotone_grid.size();
    auto f = [](const Real& x) { return Real(1) / (x * hyptrig::collar_width(x)); };
    for (std::size_t i = 1; i < monotone_grid.size(); ++i) {
        if (!(monotone_grid[i] > monotone_grid[i - 1])) continue;
        if (!(f(monotone_grid[i]) < f(monotone_grid[i - 1]))) {
            rep.violations.push_back("1/(x cl(x)) not decreasing between " + to_string(monotone_grid[i - 1]) +
                                     " and " + to_string(monotone_grid[i]));
        }
    }
    return rep;
}

}  // namespace intlen::bounds
