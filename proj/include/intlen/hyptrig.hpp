#pragma once

// Hyperbolic special functions shared by the collar, cylinder and bound code.
//
// Everything is templated on the scalar so that the same formulas can be
// evaluated in double and in 50-digit decimal arithmetic (intlen::Extended).

#include <cmath>
#include <string>

#include "intlen/errors.hpp"
#include "intlen/real.hpp"

namespace intlen::hyptrig {

namespace detail {

template <ScalarReal Real>
void require_positive(const Real& x, const char* what) {
    if (!is_finite(x) || !(x > 0)) {
        throw DomainError(std::string(what) + " must be positive and finite, got " + to_string(x));
    }
}

template <ScalarReal Real>
void require_finite(const Real& x, const char* what) {
    if (!is_finite(x)) {
        throw DomainError(std::string(what) + " must be finite");
    }
}

}  // namespace detail

/// A length measured in the hyperbolic metric. Always positive and finite.
template <ScalarReal Real = double>
class HyperbolicLength {
public:
    explicit HyperbolicLength(Real value) : value_(value) {
        detail::require_positive(value_, "hyperbolic length");
    }

    const Real& value() const noexcept { return value_; }
    operator const Real&() const noexcept { return value_; }

private:
    Real value_;
};

/// Inverse hyperbolic sine. In double precision the logarithmic form is
/// replaced by its Taylor series below 1e-4 (where log(x + sqrt(x^2+1))
/// cancels) and by log(2|x|) + 1/(4x^2) above 1e8 (where x^2 overflows long
/// before x does).
template <ScalarReal Real>
Real arsinh(const Real& x) {
    using std::abs;
    using std::log;
    using std::log1p;
    using std::sqrt;
    if constexpr (std::same_as<Real, Extended>) {
        return boost::multiprecision::asinh(x);
    } else {
        const Real ax = abs(x);
        Real r;
        if (ax < Real(1e-4)) {
            const Real x2 = ax * ax;
            r = ax - ax * x2 * (Real(1) / Real(6) - Real(3) * x2 / Real(40));
        } else if (ax > Real(1e8)) {
            r = log(Real(2) * ax) + Real(1) / (Real(4) * ax * ax);
        } else {
            // log(x + sqrt(x^2 + 1)) loses digits for small x
            r = log1p(ax + ax * ax / (Real(1) + sqrt(ax * ax + Real(1))));
        }
        return x < 0 ? -r : r;
    }
}

/// Inverse hyperbolic cosine on [1, inf).
template <ScalarReal Real>
Real arcosh(const Real& x) {
    using std::log;
    using std::log1p;
    using std::sqrt;
    if (!(x >= Real(1)) || !is_finite(x)) {
        throw DomainError("arcosh argument must be >= 1, got " + to_string(x));
    }
    if constexpr (std::same_as<Real, Extended>) {
        return boost::multiprecision::acosh(x);
    } else {
        if (x > Real(1e8)) {
            return log(Real(2) * x) - Real(1) / (Real(4) * x * x);
        }
        const Real y = x - Real(1);
        return log1p(y + sqrt(y * (Real(2) + y)));
    }
}

/// 2 arsinh(1), the largest core length for which x <= 2 cl(x).
template <ScalarReal Real = double>
Real short_geodesic_limit() {
    return Real(2) * arsinh(Real(1));
}

/// Collar width cl(l) = arsinh(1 / sinh(l/2)). A simple closed geodesic of
/// length l has an embedded collar of this half-width.
template <ScalarReal Real>
Real collar_width(const Real& l) {
    using std::sinh;
    detail::require_positive(l, "core length");
    return arsinh(Real(1) / sinh(l / Real(2)));
}

/// A point in Fermi coordinates about a geodesic: t is arclength along the
/// geodesic, s the signed perpendicular distance from it.
template <ScalarReal Real = double>
struct FermiPoint {
    Real t;
    Real s;
};

/// Distance between two points of the universal cover of a cylinder, given
/// in Fermi coordinates about the core.
///
/// cosh d = cosh s1 cosh s2 cosh(t2 - t1) - sinh s1 sinh s2, evaluated as
/// sinh^2(d/2) = sinh^2((s1 - s2)/2) + cosh s1 cosh s2 sinh^2((t2 - t1)/2),
/// which has no cancellation for nearby points.
template <ScalarReal Real>
Real fermi_distance(const FermiPoint<Real>& p1, const FermiPoint<Real>& p2) {
    using std::cosh;
    using std::sinh;
    using std::sqrt;
    detail::require_finite(p1.t, "t1");
    detail::require_finite(p1.s, "s1");
    detail::require_finite(p2.t, "t2");
    detail::require_finite(p2.s, "s2");
    const Real a = sinh((p1.s - p2.s) / Real(2));
    const Real b = sinh((p2.t - p1.t) / Real(2));
    const Real half = sqrt(a * a + cosh(p1.s) * cosh(p2.s) * b * b);
    return Real(2) * arsinh(half);
}

/// Length of the geodesic arc crossing a collar of half-width w whose
/// orthogonal projection onto the core has length delta_t. The arc is
/// symmetric about its midpoint on the core, so the right-angled triangle
/// relation cosh(l/2) = cosh(w) cosh(delta_t/2) applies.
template <ScalarReal Real>
Real crossing_arc_length(const Real& w, const Real& delta_t) {
    using std::cosh;
    detail::require_positive(w, "half width");
    if (!is_finite(delta_t) || delta_t < 0) {
        throw DomainError("projection length must be non-negative and finite, got " +
                          to_string(delta_t));
    }
    return Real(2) * arcosh(cosh(w) * cosh(delta_t / Real(2)));
}

/// Length of a boundary curve of the collar of half-width w about a geodesic
/// of length l.
template <ScalarReal Real>
Real boundary_length(const Real& l, const Real& w) {
    using std::cosh;
    detail::require_positive(l, "core length");
    detail::require_positive(w, "half width");
    return l * cosh(w);
}

}  // namespace intlen::hyptrig
