#pragma once

// Geodesic arcs crossing a hyperbolic collar: winding numbers, lengths,
// intersection-count bounds, Dehn twists and the rewinding rules used to
// replace arcs by shorter comparison arcs.
//
// A collar about a closed geodesic of length l is parametrized by Fermi
// coordinates (t, s), t in R mod l along the core and s in (-w, w). The
// orientation is the one for which the perpendiculars t = const, traversed
// with s increasing, cross the core with sign +1.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "intlen/errors.hpp"
#include "intlen/flat_torus.hpp"
#include "intlen/hyptrig.hpp"
#include "intlen/real.hpp"
#include "intlen/rng.hpp"

namespace intlen::cylinder {

using hyptrig::FermiPoint;
using torus::CrossingReport;
using torus::Vec2;

/// The collar constants: collars are shrunk by `shrink` and only geodesics
/// shorter than `short_threshold` get a shrunk collar.
template <ScalarReal Real = double>
struct CollarConstants {
    Real shrink = Real(13) / Real(10);
    Real short_threshold = Real(1) / Real(4);
};

enum class CollarMode { Full, ShrunkB };

template <ScalarReal Real = double>
class Cylinder {
public:
    /// Collar of half-width `half_width` about a core of length `core_length`.
    /// Requires 0 < half_width <= cl(core_length) so that the collar embeds.
    Cylinder(Real core_length, Real half_width) : core_(core_length), width_(half_width) {
        const Real limit = hyptrig::collar_width(core_.value());
        if (width_.value() > limit * (Real(1) + Real(1e-14))) {
            throw InputError("half width " + to_string(width_.value()) + " exceeds the collar width " +
                             to_string(limit));
        }
    }

    const Real& core_length() const noexcept { return core_.value(); }
    const Real& half_width() const noexcept { return width_.value(); }

    /// Length of a boundary component.
    Real boundary_length() const { return hyptrig::boundary_length(core_length(), half_width()); }

    /// Length of a perpendicular from one boundary to the other (2 w).
    Real width() const { return Real(2) * half_width(); }

private:
    hyptrig::HyperbolicLength<Real> core_;
    hyptrig::HyperbolicLength<Real> width_;
};

/// Full collar (w = cl(l)) or shrunk collar (w = cl(l) - shrink, l below the
/// short-geodesic threshold).
template <ScalarReal Real>
Cylinder<Real> make_collar(const Real& core_length, CollarMode mode,
                           const CollarConstants<Real>& constants = {}) {
    const Real cl = hyptrig::collar_width(core_length);
    if (mode == CollarMode::Full) {
        return Cylinder<Real>(core_length, cl);
    }
    if (!(core_length < constants.short_threshold)) {
        throw ModeError("shrunk collar needs core length < " + to_string(constants.short_threshold) + ", got " +
                        to_string(core_length));
    }
    const Real w = cl - constants.shrink;
    if (!(w > 0)) {
        throw WidthError("collar width " + to_string(cl) + " does not exceed the shrink " +
                         to_string(constants.shrink));
    }
    return Cylinder<Real>(core_length, w);
}

/// A geodesic arc traversing the collar.
///
/// The arc enters at Fermi position `entry_t` on the boundary s = -w when
/// crossing_sign = +1 (on s = +w when crossing_sign = -1) and leaves on the
/// opposite boundary at the unwrapped position entry_t + winding * l.
template <ScalarReal Real = double>
struct ArcSpec {
    Real entry_t{};
    Real winding{};
    /// Int(arc, core)
    int crossing_sign = 1;

    /// sigma(arc): the direction in which the arc runs along the core.
    int orientation() const { return sign_of(winding); }

    FermiPoint<Real> start(const Cylinder<Real>& cyl) const {
        return {entry_t, -Real(crossing_sign) * cyl.half_width()};
    }
    FermiPoint<Real> end(const Cylinder<Real>& cyl) const {
        return {entry_t + winding * cyl.core_length(), Real(crossing_sign) * cyl.half_width()};
    }
};

/// Winding number of an arc from its entry position and unwrapped exit
/// position: signed displacement along the core in units of the core length.
template <ScalarReal Real>
Real winding_from_endpoints(const Cylinder<Real>& cyl, const Real& t_in, const Real& t_out_unwrapped) {
    return (t_out_unwrapped - t_in) / cyl.core_length();
}

/// Arc with the given endpoints; the entry position is reduced into [0, l).
template <ScalarReal Real>
ArcSpec<Real> arc_from_endpoints(const Cylinder<Real>& cyl, const Real& t_in, const Real& t_out_unwrapped,
                                 int crossing_sign) {
    using std::floor;
    if (crossing_sign != 1 && crossing_sign != -1) {
        throw InputError("crossing sign must be +1 or -1");
    }
    const Real l = cyl.core_length();
    const Real entry = t_in - l * floor(t_in / l);
    return {entry, winding_from_endpoints(cyl, t_in, t_out_unwrapped), crossing_sign};
}

/// Length of the geodesic arc. Its orthogonal projection onto the core has
/// length |winding| * l.
template <ScalarReal Real>
Real arc_length(const Cylinder<Real>& cyl, const ArcSpec<Real>& arc) {
    using std::abs;
    return hyptrig::crossing_arc_length(cyl.half_width(), abs(arc.winding) * cyl.core_length());
}

struct IntersectionBounds {
    std::int64_t lo = 0;
    std::int64_t hi = 1;
    /// Sign of every crossing, in the convention where the first arc crosses
    /// the core with sign +1. Multiply by the first arc's crossing sign to get
    /// the raw sign of Int(c, d).
    int sign = 0;
};

/// Bounds on the number of crossings of two arcs with windings c and d:
/// floor|d - c| <= # <= floor|d - c| + 1 when both cross the core with the
/// same sign, with d + c in place of d - c otherwise.
template <ScalarReal Real>
IntersectionBounds intersection_bounds(const Real& c_wind, const Real& d_wind, bool same_side) {
    using std::abs;
    using std::floor;
    const Real x = same_side ? d_wind - c_wind : d_wind + c_wind;
    const auto lo = static_cast<std::int64_t>(to_double(floor(abs(x))));
    return {lo, lo + 1, sign_of(x)};
}

namespace detail {

template <ScalarReal Real>
struct HalfPlaneArc {
    Real xa, ya, xb, yb;  // endpoints
    Real center, radius;  // circle orthogonal to the real axis
};

/// Upper half-plane model: the core is the imaginary axis and the deck
/// transformation is z -> e^l z. Fermi (t, s) maps to e^t (tanh s + i sech s).
template <ScalarReal Real>
std::pair<Real, Real> to_half_plane(const FermiPoint<Real>& p) {
    using std::cosh;
    using std::exp;
    using std::tanh;
    const Real r = exp(p.t);
    return {r * tanh(p.s), r / cosh(p.s)};
}

/// The endpoints of a traversing arc lie on opposite sides of the imaginary
/// axis, so the geodesic through them is never a vertical line.
template <ScalarReal Real>
HalfPlaneArc<Real> make_half_plane_arc(const FermiPoint<Real>& a, const FermiPoint<Real>& b) {
    using std::sqrt;
    HalfPlaneArc<Real> h;
    std::tie(h.xa, h.ya) = to_half_plane(a);
    std::tie(h.xb, h.yb) = to_half_plane(b);
    const Real na = h.xa * h.xa + h.ya * h.ya;
    const Real nb = h.xb * h.xb + h.yb * h.yb;
    h.center = (na - nb) / (Real(2) * (h.xa - h.xb));
    const Real dx = h.xa - h.center;
    h.radius = sqrt(dx * dx + h.ya * h.ya);
    return h;
}

template <ScalarReal Real>
bool same_arc(const Cylinder<Real>& cyl, const ArcSpec<Real>& p, const ArcSpec<Real>& q) {
    using std::abs;
    using std::floor;
    const Real l = cyl.core_length();
    const Real eps = Real(1e-12);
    auto same_mod_l = [&](const Real& x, const Real& y) {
        Real d = (x - y) / l;
        d -= floor(d + Real(0.5));
        return abs(d) < eps;
    };
    if (p.crossing_sign == q.crossing_sign) {
        return abs(p.winding - q.winding) < eps && same_mod_l(p.entry_t, q.entry_t);
    }
    // q is p traversed backwards
    return abs(p.winding + q.winding) < eps && same_mod_l(p.entry_t + p.winding * l, q.entry_t);
}

}  // namespace detail

/// Brute-force crossing count of two arcs in the universal cover.
///
/// The first arc is lifted once; the second is lifted to every deck translate
/// k with |k| <= ceil(|c| + |d|) + 2, which covers all translates whose
/// projection onto the core overlaps that of the first lift. Geodesics are
/// half-circles orthogonal to the real axis, so each pair of lifts meets at
/// most once.
///
/// Positions are reported in Fermi coordinates (t mod l, s) as (x, y).
/// Throws RetrySignal when a crossing falls within `tolerance` (relative to
/// the arc's extent) of an endpoint.
template <ScalarReal Real>
CrossingReport<Real> crossing_count_oracle_cyl(const Cylinder<Real>& cyl, const ArcSpec<Real>& arc1,
                                               const ArcSpec<Real>& arc2, const Real& tolerance = Real(1e-9)) {
    using std::abs;
    using std::ceil;
    using std::floor;
    using std::log;
    using std::sqrt;
    if (detail::same_arc(cyl, arc1, arc2)) {
        throw DegenerateInputError("crossing oracle needs two distinct arcs");
    }
    const Real l = cyl.core_length();
    // Recentre on the midpoint of the first arc; translation along the core is
    // an isometry and keeps the half-plane coordinates of moderate size.
    const Real t_ref = arc1.entry_t + arc1.winding * l / Real(2);
    auto shifted = [&](FermiPoint<Real> p, const Real& dt) {
        p.t += dt;
        return p;
    };
    const auto h1 = detail::make_half_plane_arc(shifted(arc1.start(cyl), -t_ref), shifted(arc1.end(cyl), -t_ref));
    const Real dir1 = h1.xb > h1.xa ? Real(1) : Real(-1);

    const auto window = static_cast<std::int64_t>(to_double(ceil(abs(arc1.winding) + abs(arc2.winding)))) + 2;
    CrossingReport<Real> report;
    for (std::int64_t k = -window; k <= window; ++k) {
        const Real dt = Real(k) * l - t_ref;
        const auto h2 = detail::make_half_plane_arc(shifted(arc2.start(cyl), dt), shifted(arc2.end(cyl), dt));
        const Real dc = h2.center - h1.center;
        const Real scale = h1.radius + h2.radius;
        if (abs(dc) <= Real(1e-14) * scale) {
            // Concentric: the same geodesic or disjoint.
            if (abs(h1.radius - h2.radius) <= Real(1e-12) * scale) {
                throw RetrySignal("arcs lie on a common geodesic");
            }
            continue;
        }
        const Real x = (h1.center + h2.center) / Real(2) +
                       (h1.radius - h2.radius) * (h1.radius + h2.radius) / (Real(2) * dc);
        const Real dx = x - h1.center;
        const Real y2 = h1.radius * h1.radius - dx * dx;
        if (!(y2 > 0)) {
            continue;
        }
        const Real p1 = (x - h1.xa) / (h1.xb - h1.xa);
        const Real p2 = (x - h2.xa) / (h2.xb - h2.xa);
        const bool in1 = p1 > -tolerance && p1 < Real(1) + tolerance;
        const bool in2 = p2 > -tolerance && p2 < Real(1) + tolerance;
        if (!(in1 && in2)) {
            continue;
        }
        const bool near_end = abs(p1) < tolerance || abs(p1 - Real(1)) < tolerance || abs(p2) < tolerance ||
                              abs(p2 - Real(1)) < tolerance;
        if (near_end) {
            throw RetrySignal("arc crossing within tolerance of an endpoint");
        }
        const Real y = sqrt(y2);
        const Real dir2 = h2.xb > h2.xa ? Real(1) : Real(-1);
        // tangent of a half-circle traversed with x increasing: (y, -(x - c))
        const Real t1x = dir1 * y;
        const Real t1y = -dir1 * (x - h1.center);
        const Real t2x = dir2 * y;
        const Real t2y = -dir2 * (x - h2.center);
        const Real orient = t1x * t2y - t1y * t2x;
        report.signs.push_back(orient > 0 ? 1 : -1);
        ++report.count;
        Real t = log(sqrt(x * x + y2)) + t_ref;
        t -= l * floor(t / l);
        report.positions.push_back({t, hyptrig::arsinh(x / y)});
    }
    return report;
}

/// Winding number after a Dehn twist of order z about the core.
template <ScalarReal Real>
Real dehn_twist_winding(const Real& c_wind, int crossing_sign, const Real& z) {
    return c_wind + Real(crossing_sign) * z;
}

/// The twist D_z in Fermi coordinates: (t, s) -> (t + z l (w + s) / (2 w), s).
/// The shift is measured in units of the core length, so the boundary
/// s = +w is turned z full times relative to s = -w.
template <ScalarReal Real>
FermiPoint<Real> dehn_twist_point(const Cylinder<Real>& cyl, const FermiPoint<Real>& p, const Real& z) {
    const Real w = cyl.half_width();
    return {p.t + z * cyl.core_length() * (w + p.s) / (Real(2) * w), p.s};
}

/// The geodesic arc homotopic (rel endpoints) to the twisted arc.
template <ScalarReal Real>
ArcSpec<Real> dehn_twist_arc(const Cylinder<Real>& cyl, const ArcSpec<Real>& arc, const Real& z) {
    const FermiPoint<Real> a = dehn_twist_point(cyl, arc.start(cyl), z);
    const FermiPoint<Real> b = dehn_twist_point(cyl, arc.end(cyl), z);
    return arc_from_endpoints(cyl, a.t, b.t, arc.crossing_sign);
}

enum class ArcFamily { Gamma, Delta };

template <ScalarReal Real = double>
struct RewindInput {
    ArcFamily kind = ArcFamily::Gamma;
    Real winding{};
    int orientation = 0;
    std::int64_t m_gamma = 0;
    std::int64_t m_delta = 0;
};

/// Winding number of the comparison arc. With gamma leading (m_gamma <=
/// m_delta) gamma arcs are unwound by max(m_gamma - 1, 0) turns and delta arcs
/// by a further max(m_delta - m_gamma - 2, 0); the roles swap otherwise.
template <ScalarReal Real>
Real rewind_winding(const RewindInput<Real>& in, bool gamma_leads) {
    if (in.m_gamma < 0 || in.m_delta < 0) {
        throw InputError("m_gamma and m_delta must be non-negative");
    }
    const std::int64_t m_lead = gamma_leads ? in.m_gamma : in.m_delta;
    const std::int64_t m_follow = gamma_leads ? in.m_delta : in.m_gamma;
    const bool is_leader = (in.kind == ArcFamily::Gamma) == gamma_leads;
    std::int64_t turns = std::max<std::int64_t>(m_lead - 1, 0);
    if (!is_leader) {
        turns += std::max<std::int64_t>(m_follow - m_lead - 2, 0);
    }
    return in.winding - Real(in.orientation) * Real(turns);
}

template <ScalarReal Real = double>
struct RewindReport {
    bool gamma_leads = true;
    std::int64_t m_gamma = 0;
    std::int64_t m_delta = 0;
    std::vector<Real> gamma_star;
    std::vector<Real> delta_star;
    /// largest |winding| after rewinding, for the leading and following family
    Real max_leader{};
    Real max_follower{};
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

namespace detail {

template <ScalarReal Real>
void check_family(const std::vector<Real>& winds, const char* name) {
    using std::abs;
    if (winds.empty()) {
        throw RejectedInputError(std::string(name) + " arcs: need at least one winding number");
    }
    for (std::size_t j = 0; j < winds.size(); ++j) {
        for (std::size_t l = j + 1; l < winds.size(); ++l) {
            if (!(abs(winds[j] - winds[l]) < Real(1))) {
                std::ostringstream msg;
                msg << name << " arcs " << j << " and " << l << ": winding gap |" << winds[j] << " - " << winds[l]
                    << "| >= 1 (the arcs would intersect)";
                throw RejectedInputError(msg.str());
            }
        }
    }
    Real min_abs = abs(winds.front());
    for (const auto& v : winds) min_abs = std::min(min_abs, abs(v));
    if (min_abs >= Real(1)) {
        for (std::size_t j = 1; j < winds.size(); ++j) {
            if (sign_of(winds[j]) != sign_of(winds[0])) {
                std::ostringstream msg;
                msg << name << " arcs 0 and " << j << ": mixed orientation with min |winding| >= 1";
                throw RejectedInputError(msg.str());
            }
        }
    }
}

template <ScalarReal Real>
Real min_abs(const std::vector<Real>& winds) {
    using std::abs;
    Real m = abs(winds.front());
    for (const auto& v : winds) m = std::min(m, abs(v));
    return m;
}

}  // namespace detail

/// Rewinds every arc of two families crossing one collar and checks the
/// comparison-arc invariants:
///  - leading family |v*| < 3, following family |v*| < 5;
///  - for every cross pair the sign of d - c (d + c for opposite sides) is
///    unchanged;
///  - the rewound arc collapsed onto a boundary, of length |v*| times the
///    boundary length, is shorter than the original arc.
///
/// The families must come from simple closed geodesics: within a family the
/// windings differ by less than 1 and share an orientation once every
/// |winding| >= 1. Anything else is rejected.
template <ScalarReal Real>
RewindReport<Real> rewind_suite_check(const Cylinder<Real>& cyl, const std::vector<Real>& gamma_winds,
                                      const std::vector<Real>& delta_winds, bool same_side) {
    using std::abs;
    using std::floor;
    detail::check_family(gamma_winds, "gamma");
    detail::check_family(delta_winds, "delta");

    RewindReport<Real> rep;
    const Real c_min = detail::min_abs(gamma_winds);
    const Real d_min = detail::min_abs(delta_winds);
    rep.m_gamma = static_cast<std::int64_t>(to_double(floor(c_min)));
    rep.m_delta = static_cast<std::int64_t>(to_double(floor(d_min)));
    rep.gamma_leads = c_min <= d_min;

    auto rewind_all = [&](const std::vector<Real>& winds, ArcFamily kind) {
        std::vector<Real> out;
        out.reserve(winds.size());
        for (const auto& v : winds) {
            out.push_back(rewind_winding(RewindInput<Real>{kind, v, sign_of(v), rep.m_gamma, rep.m_delta},
                                         rep.gamma_leads));
        }
        return out;
    };
    rep.gamma_star = rewind_all(gamma_winds, ArcFamily::Gamma);
    rep.delta_star = rewind_all(delta_winds, ArcFamily::Delta);

    const auto& leader = rep.gamma_leads ? rep.gamma_star : rep.delta_star;
    const auto& follower = rep.gamma_leads ? rep.delta_star : rep.gamma_star;
    for (const auto& v : leader) rep.max_leader = std::max(rep.max_leader, abs(v));
    for (const auto& v : follower) rep.max_follower = std::max(rep.max_follower, abs(v));
    if (!(rep.max_leader < Real(3))) {
        rep.violations.push_back("leading family rewound winding " + to_string(rep.max_leader) + " >= 3");
    }
    if (!(rep.max_follower < Real(5))) {
        rep.violations.push_back("following family rewound winding " + to_string(rep.max_follower) + " >= 5");
    }

    for (std::size_t j = 0; j < gamma_winds.size(); ++j) {
        for (std::size_t l = 0; l < delta_winds.size(); ++l) {
            const Real before = same_side ? delta_winds[l] - gamma_winds[j] : delta_winds[l] + gamma_winds[j];
            const Real after = same_side ? rep.delta_star[l] - rep.gamma_star[j] : rep.delta_star[l] + rep.gamma_star[j];
            if (sign_of(before) != sign_of(after)) {
                std::ostringstream msg;
                msg << "sign of winding " << (same_side ? "difference" : "sum") << " changed for gamma " << j
                    << ", delta " << l << ": " << before << " -> " << after;
                rep.violations.push_back(msg.str());
            }
        }
    }

    const Real boundary = cyl.boundary_length();
    auto check_length = [&](const std::vector<Real>& original, const std::vector<Real>& rewound, const char* name) {
        for (std::size_t j = 0; j < original.size(); ++j) {
            const Real collapsed = abs(rewound[j]) * boundary;
            const Real before = arc_length(cyl, ArcSpec<Real>{Real(0), original[j], 1});
            if (!(collapsed < before)) {
                rep.violations.push_back(std::string(name) + " arc " + std::to_string(j) +
                                         ": collapsed length " + to_string(collapsed) + " >= arc length " +
                                         to_string(before));
            }
        }
    };
    check_length(gamma_winds, rep.gamma_star, "gamma");
    check_length(delta_winds, rep.delta_star, "delta");
    return rep;
}

/// One bound-versus-oracle comparison for a pair of arcs.
template <ScalarReal Real = double>
struct ArcPairOutcome {
    ArcSpec<Real> first;
    ArcSpec<Real> second;
    bool same_side = true;
    std::size_t count = 0;
    IntersectionBounds bounds;
    bool count_ok = true;
    bool signs_ok = true;
    bool length_ok = true;
    int retries = 0;

    bool ok() const { return count_ok && signs_ok && length_ok; }
};

/// Runs the oracle on an arc pair, perturbing the second arc's entry by a
/// jitter in (0, l 1e-6) after each RetrySignal (at most `max_retries`), and
/// compares the result with the winding-number bounds, the sign rule and
/// both arc length lower bounds.
template <ScalarReal Real>
ArcPairOutcome<Real> check_arc_pair(const Cylinder<Real>& cyl, const ArcSpec<Real>& first, ArcSpec<Real> second,
                                    CounterRng& rng, int max_retries = 8, const Real& length_tol = Real(1e-9)) {
    using std::abs;
    using std::max;
    ArcPairOutcome<Real> out;
    out.first = first;
    out.same_side = first.crossing_sign == second.crossing_sign;
    CrossingReport<Real> rep;
    for (;;) {
        try {
            rep = crossing_count_oracle_cyl(cyl, first, second);
            break;
        } catch (const RetrySignal&) {
            if (out.retries >= max_retries) {
                throw;
            }
            ++out.retries;
            second.entry_t += Real(rng.uniform(0x1.0p-53, 1.0)) * cyl.core_length() * Real(1e-6);
        }
    }
    out.second = second;
    out.count = rep.count;
    out.bounds = intersection_bounds(first.winding, second.winding, out.same_side);
    const auto count = static_cast<std::int64_t>(rep.count);
    out.count_ok = count >= out.bounds.lo && count <= out.bounds.hi;
    for (int s : rep.signs) {
        if (s * first.crossing_sign != out.bounds.sign) {
            out.signs_ok = false;
        }
    }
    const ArcSpec<Real>* arcs[] = {&first, &second};
    for (const auto* arc : arcs) {
        const Real len = arc_length(cyl, *arc);
        const Real need = max(cyl.width(), abs(arc->winding) * cyl.core_length());
        if (len < need * (Real(1) - length_tol)) {
            out.length_ok = false;
        }
    }
    return out;
}

/// Random arc crossing the collar: winding uniform in [-max_winding,
/// max_winding], entry uniform in [0, l), either crossing sign.
template <ScalarReal Real>
ArcSpec<Real> random_arc(const Cylinder<Real>& cyl, CounterRng& rng, double max_winding = 8.0) {
    ArcSpec<Real> arc;
    arc.entry_t = Real(rng.uniform()) * cyl.core_length();
    arc.winding = Real(rng.uniform(-max_winding, max_winding));
    arc.crossing_sign = rng.sign();
    return arc;
}

}  // namespace intlen::cylinder
