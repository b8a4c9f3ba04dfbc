#pragma once

// Flat tori R^2 / (Z e1 + Z e2): intersection numbers, stable norm, systole,
// diameter, and exhaustive searches over lattice classes.
//
// Homology classes are written in the basis [e1], [e2]. The torus is oriented
// so that Int([e1], [e2]) = +1, whatever the sign of det(e1, e2) in the plane.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "intlen/errors.hpp"
#include "intlen/real.hpp"

namespace intlen::torus {

using Rational = boost::multiprecision::cpp_rational;

template <ScalarReal Real = double>
struct Vec2 {
    Real x{};
    Real y{};

    friend Vec2 operator+(const Vec2& p, const Vec2& q) { return {p.x + q.x, p.y + q.y}; }
    friend Vec2 operator-(const Vec2& p, const Vec2& q) { return {p.x - q.x, p.y - q.y}; }
    friend Vec2 operator*(const Real& k, const Vec2& p) { return {k * p.x, k * p.y}; }
};

template <ScalarReal Real>
Real dot(const Vec2<Real>& p, const Vec2<Real>& q) {
    return p.x * q.x + p.y * q.y;
}

template <ScalarReal Real>
Real cross(const Vec2<Real>& p, const Vec2<Real>& q) {
    return p.x * q.y - p.y * q.x;
}

template <ScalarReal Real>
Real norm(const Vec2<Real>& p) {
    using std::hypot;
    using std::sqrt;
    if constexpr (std::floating_point<Real>) {
        return hypot(p.x, p.y);
    } else {
        return sqrt(dot(p, p));
    }
}

/// Integer homology class a[e1] + b[e2].
struct IntegerClass {
    std::int64_t a = 0;
    std::int64_t b = 0;

    bool is_zero() const noexcept { return a == 0 && b == 0; }

    /// Primitive classes are exactly the classes of simple closed geodesics.
    bool is_primitive() const noexcept { return std::gcd(a, b) == 1; }

    /// Representative of {h, -h} with a > 0, or a == 0 and b > 0.
    IntegerClass normalized() const noexcept {
        return (a < 0 || (a == 0 && b < 0)) ? IntegerClass{-a, -b} : *this;
    }

    IntegerClass operator-() const noexcept { return {-a, -b}; }
    friend IntegerClass operator+(IntegerClass u, IntegerClass v) noexcept { return {u.a + v.a, u.b + v.b}; }
    friend IntegerClass operator*(std::int64_t k, IntegerClass u) noexcept { return {k * u.a, k * u.b}; }
    friend bool operator==(const IntegerClass&, const IntegerClass&) = default;
};

/// Real homology class x[e1] + y[e2].
template <ScalarReal Real = double>
struct RealClass {
    Real x{};
    Real y{};

    static RealClass from(const IntegerClass& u) { return {Real(u.a), Real(u.b)}; }
};

/// Algebraic intersection number; the intersection form is the determinant in
/// the basis [e1], [e2].
inline std::int64_t intersection_number(const IntegerClass& u, const IntegerClass& v) {
    __int128 r = static_cast<__int128>(u.a) * v.b - static_cast<__int128>(u.b) * v.a;
    if (r > std::numeric_limits<std::int64_t>::max() || r < std::numeric_limits<std::int64_t>::min()) {
        throw InputError("intersection number overflows 64 bits");
    }
    return static_cast<std::int64_t>(r);
}

template <ScalarReal Real>
Real intersection_number(const RealClass<Real>& u, const RealClass<Real>& v) {
    return u.x * v.y - u.y * v.x;
}

/// Exact coordinates of a basis, kept when the lattice was given as decimal or
/// rational strings. Used to settle near-ties between ratios.
struct ExactBasis {
    Rational e1x, e1y, e2x, e2y;

    Rational quadratic_form(const IntegerClass& u) const {
        const Rational x = e1x * u.a + e2x * u.b;
        const Rational y = e1y * u.a + e2y * u.b;
        return x * x + y * y;
    }

    Rational det() const { return e1x * e2y - e1y * e2x; }
};

/// A unimodular change of basis: column i holds the coordinates of the new
/// i-th basis vector in the old basis.
struct Unimodular {
    IntegerClass col1{1, 0};
    IntegerClass col2{0, 1};

    IntegerClass apply(std::int64_t a, std::int64_t b) const { return a * col1 + b * col2; }
};

/// The flat torus R^2 / (Z e1 + Z e2).
template <ScalarReal Real = double>
class Lattice {
public:
    Lattice(Vec2<Real> e1, Vec2<Real> e2) : e1_(e1), e2_(e2) { validate(); }

    /// Lattice with exact rational coordinates; floating point coordinates are
    /// the nearest representable values.
    explicit Lattice(const ExactBasis& exact)
        : e1_{from_rational(exact.e1x), from_rational(exact.e1y)},
          e2_{from_rational(exact.e2x), from_rational(exact.e2y)},
          exact_(exact) {
        if (exact.det() == 0) {
            throw InputError("degenerate lattice basis: det(e1, e2) = 0");
        }
        validate();
    }

    static Lattice square(Real side = Real(1)) { return Lattice({side, Real(0)}, {Real(0), side}); }

    /// Hexagonal lattice e1 = (1, 0), e2 = (1/2, sqrt(3)/2).
    static Lattice hexagonal() {
        using std::sqrt;
        return Lattice({Real(1), Real(0)}, {Real(1) / Real(2), sqrt(Real(3)) / Real(2)});
    }

    const Vec2<Real>& e1() const noexcept { return e1_; }
    const Vec2<Real>& e2() const noexcept { return e2_; }
    const std::optional<ExactBasis>& exact() const noexcept { return exact_; }

    Real det() const { return cross(e1_, e2_); }
    /// Area of a fundamental domain, i.e. the volume of the torus.
    Real covolume() const {
        using std::abs;
        return abs(det());
    }
    /// +1 when (e1, e2) is positively oriented in the plane.
    int orientation() const { return det() > 0 ? 1 : -1; }

    Vec2<Real> embed(const IntegerClass& u) const { return Real(u.a) * e1_ + Real(u.b) * e2_; }
    Vec2<Real> embed(const RealClass<Real>& h) const { return h.x * e1_ + h.y * e2_; }

    /// Coordinates of a plane point in the basis (e1, e2).
    RealClass<Real> coordinates(const Vec2<Real>& p) const {
        const Real d = det();
        return {cross(p, e2_) / d, cross(e1_, p) / d};
    }

    /// Rows of the inverse basis matrix; |a| <= |dual1| |x| for x = a e1 + b e2.
    Vec2<Real> dual1() const { return Real(1) / det() * Vec2<Real>{e2_.y, -e2_.x}; }
    Vec2<Real> dual2() const { return Real(1) / det() * Vec2<Real>{-e1_.y, e1_.x}; }

    Lattice scaled(const Real& lambda) const {
        Lattice out(lambda * e1_, lambda * e2_);
        return out;
    }

    static Real from_rational(const Rational& r) {
        if constexpr (std::floating_point<Real>) {
            return static_cast<Real>(r);
        } else {
            return Real(boost::multiprecision::numerator(r)) / Real(boost::multiprecision::denominator(r));
        }
    }

private:
    void validate() const {
        if (!is_finite(e1_.x) || !is_finite(e1_.y) || !is_finite(e2_.x) || !is_finite(e2_.y)) {
            throw InputError("lattice basis must be finite");
        }
        if (!(det() != Real(0))) {
            throw InputError("degenerate lattice basis: det(e1, e2) = 0");
        }
    }

    Vec2<Real> e1_;
    Vec2<Real> e2_;
    std::optional<ExactBasis> exact_;
};

/// Stable norm of a class; on a flat torus the closed geodesics are straight
/// and the stable norm is the Euclidean length of the embedded vector.
template <ScalarReal Real>
Real class_length(const Lattice<Real>& lat, const IntegerClass& u) {
    return norm(lat.embed(u));
}

template <ScalarReal Real>
Real class_length(const Lattice<Real>& lat, const RealClass<Real>& h) {
    return norm(lat.embed(h));
}

/// Lagrange-Gauss reduction: returns a basis change after which
/// |b1| <= |b2| and |<b1, b2>| <= |b1|^2 / 2.
template <ScalarReal Real>
Unimodular gauss_reduce(const Lattice<Real>& lat) {
    using std::abs;
    using std::llround;
    Unimodular m;
    Vec2<Real> b1 = lat.e1();
    Vec2<Real> b2 = lat.e2();
    for (int iter = 0; iter < 10000; ++iter) {
        if (dot(b1, b1) > dot(b2, b2)) {
            std::swap(b1, b2);
            std::swap(m.col1, m.col2);
        }
        const Real q = dot(b1, b2) / dot(b1, b1);
        const auto mu = static_cast<std::int64_t>(llround(to_double(q)));
        if (mu == 0) {
            break;
        }
        b2 = b2 - Real(mu) * b1;
        m.col2 = m.col2 + (-mu) * m.col1;
    }
    return m;
}

/// Visits every nonzero class of length <= radius exactly once. The search
/// box comes from |a| <= |dual1| * radius (Cauchy-Schwarz on the inverse of a
/// reduced basis), so no class inside the disc is missed.
template <ScalarReal Real, typename Visitor>
std::size_t for_each_class_within(const Lattice<Real>& lat, const Real& radius, Visitor&& visit) {
    using std::floor;
    const Unimodular m = gauss_reduce(lat);
    const Lattice<Real> reduced(lat.embed(m.col1), lat.embed(m.col2));
    const Real slack = radius * (Real(1) + Real(1e-12));
    const auto box_a = static_cast<std::int64_t>(to_double(floor(norm(reduced.dual1()) * slack))) + 1;
    const auto box_b = static_cast<std::int64_t>(to_double(floor(norm(reduced.dual2()) * slack))) + 1;
    std::size_t visited = 0;
    for (std::int64_t a = -box_a; a <= box_a; ++a) {
        for (std::int64_t b = -box_b; b <= box_b; ++b) {
            if (a == 0 && b == 0) {
                continue;
            }
            const Real len = norm(Real(a) * reduced.e1() + Real(b) * reduced.e2());
            if (len <= slack) {
                visit(m.apply(a, b), len);
                ++visited;
            }
        }
    }
    return visited;
}

template <ScalarReal Real = double>
struct ClassWithLength {
    IntegerClass cls;
    Real length;
};

/// Primitive classes of length <= radius, one representative per pair
/// {h, -h}, sorted by length then coordinates.
template <ScalarReal Real>
std::vector<ClassWithLength<Real>> primitive_classes_within(const Lattice<Real>& lat, const Real& radius) {
    std::vector<ClassWithLength<Real>> out;
    for_each_class_within(lat, radius, [&](const IntegerClass& u, const Real& len) {
        if (u.is_primitive() && u.normalized() == u) {
            out.push_back({u, len});
        }
    });
    std::sort(out.begin(), out.end(), [](const auto& p, const auto& q) {
        return std::tie(p.length, p.cls.a, p.cls.b) < std::tie(q.length, q.cls.a, q.cls.b);
    });
    return out;
}

/// Length of a shortest nonzero lattice vector (the homological systole).
template <ScalarReal Real>
Real systole(const Lattice<Real>& lat) {
    using std::min;
    const Real radius = min(norm(lat.e1()), norm(lat.e2()));
    Real best = radius;
    for_each_class_within(lat, radius, [&](const IntegerClass&, const Real& len) {
        if (len < best) {
            best = len;
        }
    });
    return best;
}

/// Diameter of the flat torus: the circumradius of the Voronoi cell of the
/// origin, built from the eight neighbours +-b1, +-b2, +-(b1 + b2), +-(b1 - b2)
/// of a reduced basis.
template <ScalarReal Real>
Real diameter(const Lattice<Real>& lat) {
    using std::max;
    const Unimodular m = gauss_reduce(lat);
    const Vec2<Real> b1 = lat.embed(m.col1);
    const Vec2<Real> b2 = lat.embed(m.col2);
    const std::array<Vec2<Real>, 8> neighbours{b1, Real(-1) * b1, b2, Real(-1) * b2,
                                                b1 + b2, Real(-1) * (b1 + b2), b1 - b2, b2 - b1};
    const Real big = Real(4) * (norm(b1) + norm(b2));
    std::vector<Vec2<Real>> poly{{-big, -big}, {big, -big}, {big, big}, {-big, big}};
    for (const auto& n : neighbours) {
        // keep {x : <x, n> <= |n|^2 / 2}
        const Real offset = dot(n, n) / Real(2);
        std::vector<Vec2<Real>> next;
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const Vec2<Real>& p = poly[i];
            const Vec2<Real>& q = poly[(i + 1) % poly.size()];
            const Real fp = dot(p, n) - offset;
            const Real fq = dot(q, n) - offset;
            if (fp <= 0) {
                next.push_back(p);
            }
            if ((fp < 0 && fq > 0) || (fp > 0 && fq < 0)) {
                const Real s = fp / (fp - fq);
                next.push_back(p + s * (q - p));
            }
        }
        poly = std::move(next);
    }
    Real r = Real(0);
    for (const auto& p : poly) {
        r = max(r, norm(p));
    }
    return r;
}

/// K for a flat torus: the intersection-to-length ratio equals 1 / covolume.
template <ScalarReal Real>
Real k_real(const Lattice<Real>& lat) {
    return Real(1) / lat.covolume();
}

template <ScalarReal Real = double>
struct CrossingReport {
    std::size_t count = 0;
    std::vector<int> signs;
    std::vector<Vec2<Real>> positions;
};

/// Brute-force crossing count of the closed geodesics in the classes u and v.
///
/// u is realized by the segment [0, U) from the origin, v by [o, o + V) and
/// all its lattice translates. Every intersection point on the torus is seen
/// exactly once as (s, t) in [0, 1)^2 with s U = o + T + t V for one translate
/// T. The sign of each crossing is the sign of the oriented angle from u to v.
template <ScalarReal Real>
CrossingReport<Real> crossing_count_oracle(const Lattice<Real>& lat, const IntegerClass& u,
                                           const IntegerClass& v, const Vec2<Real>& offset,
                                           const Real& seam_tolerance = Real(1e-9)) {
    using std::abs;
    using std::floor;
    if (u.is_zero() || v.is_zero()) {
        throw DegenerateInputError("crossing oracle needs nonzero classes");
    }
    if (u.a * v.b == u.b * v.a) {
        throw DegenerateInputError("crossing oracle needs non-proportional classes");
    }
    const Vec2<Real> U = lat.embed(u);
    const Vec2<Real> V = lat.embed(v);
    const Real uv = cross(U, V);
    const int sign = (uv > 0 ? 1 : -1) * lat.orientation();

    // Reduce the offset into the fundamental parallelogram.
    RealClass<Real> oc = lat.coordinates(offset);
    oc.x -= floor(oc.x);
    oc.y -= floor(oc.y);
    const Vec2<Real> o = lat.embed(oc);

    auto near_seam = [&](const Real& p) { return abs(p) < seam_tolerance || abs(p - Real(1)) < seam_tolerance; };

    CrossingReport<Real> report;
    const std::int64_t wa = std::abs(u.a) + std::abs(v.a) + 2;
    const std::int64_t wb = std::abs(u.b) + std::abs(v.b) + 2;
    for (std::int64_t m = -wa; m <= wa; ++m) {
        for (std::int64_t n = -wb; n <= wb; ++n) {
            const Vec2<Real> w = o + Real(m) * lat.e1() + Real(n) * lat.e2();
            const Real s = cross(w, V) / uv;
            const Real t = cross(w, U) / uv;
            if (near_seam(s) || near_seam(t)) {
                const bool inside = s > -seam_tolerance && s < Real(1) + seam_tolerance &&
                                    t > -seam_tolerance && t < Real(1) + seam_tolerance;
                if (inside) {
                    throw RetrySignal("torus crossing within tolerance of the base point seam");
                }
                continue;
            }
            if (s > 0 && s < Real(1) && t > 0 && t < Real(1)) {
                RealClass<Real> pc = lat.coordinates(s * U);
                pc.x -= floor(pc.x);
                pc.y -= floor(pc.y);
                report.positions.push_back(lat.embed(pc));
                report.signs.push_back(sign);
                ++report.count;
            }
        }
    }
    return report;
}

template <ScalarReal Real = double>
struct RatioSearchResult {
    Real ratio{};
    IntegerClass u;
    IntegerClass v;
    std::size_t classes = 0;
    std::size_t pairs = 0;
};

namespace detail {

/// Orders a pair canonically: both classes normalized, Int(u, v) >= 0.
inline std::pair<IntegerClass, IntegerClass> canonical_pair(IntegerClass u, IntegerClass v) {
    u = u.normalized();
    v = v.normalized();
    if (intersection_number(u, v) < 0) {
        std::swap(u, v);
    }
    return {u, v};
}

/// Tie-break key among pairs with equal ratio: smallest coordinates first.
inline auto tie_key(const IntegerClass& u, const IntegerClass& v) {
    const std::int64_t mx = std::max({std::abs(u.a), std::abs(u.b), std::abs(v.a), std::abs(v.b)});
    const std::int64_t l1 = std::abs(u.a) + std::abs(u.b) + std::abs(v.a) + std::abs(v.b);
    return std::make_tuple(mx, l1, u.a, u.b, v.a, v.b);
}

inline constexpr double kTieTolerance = 1e-12;

/// Compares Int(u1,v1)^2 / (Q(u1) Q(v1)) with the same quantity for (u2, v2)
/// exactly. Returns -1, 0, +1.
inline int compare_ratio_exact(const ExactBasis& basis, const IntegerClass& u1, const IntegerClass& v1,
                               const IntegerClass& u2, const IntegerClass& v2) {
    const Rational i1 = intersection_number(u1, v1);
    const Rational i2 = intersection_number(u2, v2);
    const Rational lhs = i1 * i1 * basis.quadratic_form(u2) * basis.quadratic_form(v2);
    const Rational rhs = i2 * i2 * basis.quadratic_form(u1) * basis.quadratic_form(v1);
    return (lhs > rhs) - (lhs < rhs);
}

/// -1 if candidate (value c) is worse than incumbent (value b), +1 if better,
/// 0 on an exact or within-tolerance tie. `larger_is_better` selects
/// maximization (ratios) or minimization (length products).
template <ScalarReal Real>
int compare_values(const Real& c, const Real& b, bool larger_is_better) {
    using std::abs;
    using std::max;
    const Real scale = max(abs(c), abs(b));
    if (abs(c - b) <= Real(kTieTolerance) * scale) {
        return 0;
    }
    const bool better = larger_is_better ? (c > b) : (c < b);
    return better ? 1 : -1;
}

}  // namespace detail

/// Maximizes |Int(u, v)| / (len(u) len(v)) over pairs of primitive classes of
/// length <= cutoff. Ratios closer than 1e-12 (relative) are compared exactly
/// when the lattice carries exact coordinates; remaining ties go to the pair
/// with the smallest coordinates.
template <ScalarReal Real>
RatioSearchResult<Real> best_ratio_search(const Lattice<Real>& lat, const Real& cutoff) {
    const Real l1 = systole(lat);
    if (!(cutoff >= l1 * (Real(1) - Real(detail::kTieTolerance)))) {
        throw EmptySearchError("cutoff " + to_string(cutoff) + " is below the systole " + to_string(l1));
    }
    const auto classes = primitive_classes_within(lat, cutoff);
    RatioSearchResult<Real> best;
    best.classes = classes.size();
    bool found = false;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        for (std::size_t j = i + 1; j < classes.size(); ++j) {
            const auto k = intersection_number(classes[i].cls, classes[j].cls);
            if (k == 0) {
                continue;
            }
            ++best.pairs;
            using std::abs;
            const Real ratio = Real(std::abs(k)) / (classes[i].length * classes[j].length);
            const auto [u, v] = detail::canonical_pair(classes[i].cls, classes[j].cls);
            if (!found) {
                best.ratio = ratio;
                best.u = u;
                best.v = v;
                found = true;
                continue;
            }
            int cmp = detail::compare_values(ratio, best.ratio, true);
            if (cmp == 0 && lat.exact()) {
                cmp = detail::compare_ratio_exact(*lat.exact(), u, v, best.u, best.v);
            }
            if (cmp > 0 || (cmp == 0 && detail::tie_key(u, v) < detail::tie_key(best.u, best.v))) {
                best.ratio = cmp > 0 ? ratio : std::max(ratio, best.ratio);
                best.u = u;
                best.v = v;
            }
        }
    }
    if (!found) {
        throw EmptySearchError("no pair of non-proportional primitive classes within cutoff " +
                               to_string(cutoff));
    }
    return best;
}

template <ScalarReal Real = double>
struct LengthProductResult {
    IntegerClass u;
    IntegerClass v;
    Real product{};
};

/// Minimizes len(u) len(v) over primitive pairs with |Int(u, v)| = n and both
/// lengths <= cutoff.
template <ScalarReal Real>
LengthProductResult<Real> min_length_product(const Lattice<Real>& lat, std::int64_t n, const Real& cutoff) {
    if (n <= 0) {
        throw DegenerateInputError("intersection count n must be >= 1");
    }
    const auto classes = primitive_classes_within(lat, cutoff);
    LengthProductResult<Real> best;
    bool found = false;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        for (std::size_t j = i + 1; j < classes.size(); ++j) {
            if (std::abs(intersection_number(classes[i].cls, classes[j].cls)) != n) {
                continue;
            }
            const Real product = classes[i].length * classes[j].length;
            const auto [u, v] = detail::canonical_pair(classes[i].cls, classes[j].cls);
            const int cmp = found ? detail::compare_values(product, best.product, false) : 1;
            if (cmp > 0 || (cmp == 0 && detail::tie_key(u, v) < detail::tie_key(best.u, best.v))) {
                best = {u, v, product};
                found = true;
            }
        }
    }
    if (!found) {
        throw CutoffTooSmallError("no primitive pair with |Int| = " + std::to_string(n) +
                                  " within cutoff " + to_string(cutoff));
    }
    return best;
}

template <ScalarReal Real = double>
struct SegmentBoundReport {
    Real systole{};
    /// max over enumerated pairs of |Int| l1^2 / (len(u) len(v))
    Real max_observed{};
    IntegerClass u;
    IntegerClass v;
    std::size_t pairs = 0;
    /// constant of the segment-cutting bound |Int| <= 9 len len / l1^2
    Real bound = Real(9);
    /// l1^2 / covolume: |Int| covolume = |U x V| <= len(u) len(v)
    Real sine_bound{};
    bool within_bound = true;
    bool within_sine_bound = true;
};

/// Checks |Int(u, v)| <= 9 len(u) len(v) / l1^2 for every enumerated pair of
/// primitive classes of length <= cutoff.
template <ScalarReal Real>
SegmentBoundReport<Real> segment_bound_check(const Lattice<Real>& lat, const Real& cutoff) {
    const Real l1 = systole(lat);
    if (!(cutoff >= l1 * (Real(1) - Real(detail::kTieTolerance)))) {
        throw EmptySearchError("cutoff is below the systole");
    }
    const auto classes = primitive_classes_within(lat, cutoff);
    SegmentBoundReport<Real> rep;
    rep.systole = l1;
    rep.sine_bound = l1 * l1 / lat.covolume();
    const Real slack = Real(1) + Real(detail::kTieTolerance);
    for (std::size_t i = 0; i < classes.size(); ++i) {
        for (std::size_t j = i + 1; j < classes.size(); ++j) {
            const auto k = std::abs(intersection_number(classes[i].cls, classes[j].cls));
            ++rep.pairs;
            const Real q = Real(k) * l1 * l1 / (classes[i].length * classes[j].length);
            if (q > rep.max_observed) {
                rep.max_observed = q;
                std::tie(rep.u, rep.v) = detail::canonical_pair(classes[i].cls, classes[j].cls);
            }
        }
    }
    rep.within_bound = rep.max_observed <= rep.bound;
    rep.within_sine_bound = rep.max_observed <= rep.sine_bound * slack;
    return rep;
}

template <ScalarReal Real = double>
struct NormComparison {
    Real stable{};
    Real l2{};
    /// both inequalities stable/sqrt(V) <= l2 <= K sqrt(V) stable hold
    bool inequalities_hold = false;
    bool lower_tight = false;
    bool upper_tight = false;
};

/// L2 norm of a real class: the norm dual to the L2 norm of harmonic 1-forms.
/// A harmonic form on a flat torus is constant; the one with periods p on
/// (e1, e2) has squared L2 norm V p^T G^-1 p, G the Gram matrix, so the dual
/// norm on homology is sqrt(h^T G h / V).
template <ScalarReal Real>
Real l2_norm(const Lattice<Real>& lat, const RealClass<Real>& h) {
    using std::sqrt;
    const Real g11 = dot(lat.e1(), lat.e1());
    const Real g12 = dot(lat.e1(), lat.e2());
    const Real g22 = dot(lat.e2(), lat.e2());
    const Real q = g11 * h.x * h.x + Real(2) * g12 * h.x * h.y + g22 * h.y * h.y;
    return sqrt(q / lat.covolume());
}

/// Stable norm against L2 norm of a real class:
///   ||h||_s / sqrt(V) <= ||h||_2 <= K sqrt(V) ||h||_s.
/// On a flat torus both inequalities are equalities.
template <ScalarReal Real>
NormComparison<Real> norm_comparison_report(const Lattice<Real>& lat, const RealClass<Real>& h,
                                            const Real& tolerance = Real(1e-12)) {
    using std::abs;
    using std::sqrt;
    NormComparison<Real> r;
    const Real root = sqrt(lat.covolume());
    r.stable = class_length(lat, h);
    r.l2 = l2_norm(lat, h);
    const Real lower = r.stable / root;
    const Real upper = k_real(lat) * root * r.stable;
    const Real scale = r.l2 > 0 ? r.l2 : Real(1);
    r.inequalities_hold = lower <= r.l2 + tolerance * scale && r.l2 <= upper + tolerance * scale;
    r.lower_tight = abs(r.l2 - lower) <= tolerance * scale;
    r.upper_tight = abs(upper - r.l2) <= tolerance * scale;
    return r;
}

}  // namespace intlen::torus
