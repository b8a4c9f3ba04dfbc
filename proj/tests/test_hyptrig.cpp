#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "intlen/hyptrig.hpp"
#include "reference_values.hpp"

using intlen::Extended;
using namespace intlen::hyptrig;

namespace {

template <typename Real>
class HyptrigTyped : public ::testing::Test {};

using Scalars = ::testing::Types<double, Extended>;
TYPED_TEST_SUITE(HyptrigTyped, Scalars);

template <typename Real>
double rel_tol() {
    return std::is_same_v<Real, double> ? 4e-16 : 1e-38;
}

}  // namespace

TYPED_TEST(HyptrigTyped, ArsinhMatchesReference) {
    using R = TypeParam;
    const double tol = std::is_same_v<R, double> ? 1e-15 : 1e-38;
    EXPECT_TRUE(ref::near_rel(arsinh(ref::get<R>("1e-6")), ref::asinh_1e_6, tol));
    EXPECT_TRUE(ref::near_rel(arsinh(R(40)), ref::asinh_40, tol));
    EXPECT_TRUE(ref::near_rel(arsinh(R(1e10)), ref::asinh_1e10, tol));
    EXPECT_TRUE(ref::near_rel(arsinh(ref::get<R>("-3.5")), ref::asinh_m3_5, tol));
    EXPECT_EQ(arsinh(R(0)), R(0));
}

TYPED_TEST(HyptrigTyped, ArsinhIsOdd) {
    using R = TypeParam;
    for (const char* x : {"1e-9", "3e-5", "0.7", "12", "3e9"}) {
        const R v = ref::get<R>(x);
        EXPECT_EQ(arsinh(-v), -arsinh(v)) << x;
    }
}

TYPED_TEST(HyptrigTyped, ArcoshMatchesReference) {
    using R = TypeParam;
    // near 1 the argument itself carries the rounding error of 1 + 1e-10
    const double near_one = std::is_same_v<R, double> ? 1e-6 : 1e-38;
    EXPECT_TRUE(ref::near_rel(arcosh(ref::get<R>("1.0000000001")), ref::acosh_1p1e_10, near_one));
    EXPECT_TRUE(ref::near_rel(arcosh(R(1e9)), ref::acosh_1e9, rel_tol<R>() * 4));
    EXPECT_TRUE(ref::near_rel(arcosh(R(2)), ref::acosh_2, rel_tol<R>() * 4));
    EXPECT_EQ(arcosh(R(1)), R(0));
}

TYPED_TEST(HyptrigTyped, ArcoshDomain) {
    using R = TypeParam;
    EXPECT_THROW(arcosh(R(0.5)), intlen::DomainError);
    EXPECT_THROW(arcosh(R(-2)), intlen::DomainError);
}

TEST(Hyptrig, ArcoshRejectsNonFinite) {
    EXPECT_THROW(arcosh(std::numeric_limits<double>::quiet_NaN()), intlen::DomainError);
    EXPECT_THROW(arcosh(std::numeric_limits<double>::infinity()), intlen::DomainError);
}

TEST(Hyptrig, ArsinhBranchesAreContinuous) {
    for (double x : {1e-4, 1e8}) {
        const double below = arsinh(std::nextafter(x, 0.0));
        const double above = arsinh(std::nextafter(x, 1e300));
        EXPECT_NEAR(below, above, 1e-15 * std::abs(above)) << x;
    }
}

TYPED_TEST(HyptrigTyped, CollarWidth) {
    using R = TypeParam;
    const double tol = std::is_same_v<R, double> ? 1e-15 : 1e-38;
    EXPECT_TRUE(ref::near_rel(collar_width(ref::get<R>("0.25")), ref::cl_0_25, tol));
    EXPECT_TRUE(ref::near_rel(collar_width(ref::get<R>("0.2")), ref::cl_0_2, tol));
    EXPECT_TRUE(ref::near_rel(collar_width(ref::get<R>("0.1")), ref::cl_0_1, tol));
    EXPECT_TRUE(ref::near_rel(collar_width(ref::get<R>("0.001")), ref::cl_1e_3, tol));
    EXPECT_THROW(collar_width(R(0)), intlen::DomainError);
    EXPECT_THROW(collar_width(R(-1)), intlen::DomainError);
}

TYPED_TEST(HyptrigTyped, ShortGeodesicLimitIsTwiceItsCollar) {
    using R = TypeParam;
    using std::abs;
    const R x = short_geodesic_limit<R>();
    EXPECT_LE(abs(x - R(2) * collar_width(x)), R(rel_tol<R>() * 8));
    EXPECT_LT(R(0.2), R(2) * collar_width(R(0.2)));
    EXPECT_GT(R(2), R(2) * collar_width(R(2)));
}

TEST(Hyptrig, HyperbolicLengthRejectsBadValues) {
    EXPECT_THROW(HyperbolicLength<double>(0.0), intlen::DomainError);
    EXPECT_THROW(HyperbolicLength<double>(-1.0), intlen::DomainError);
    EXPECT_THROW(HyperbolicLength<double>(std::numeric_limits<double>::infinity()), intlen::DomainError);
    EXPECT_DOUBLE_EQ(HyperbolicLength<double>(0.3).value(), 0.3);
}

TYPED_TEST(HyptrigTyped, FermiDistance) {
    using R = TypeParam;
    const FermiPoint<R> p{ref::get<R>("0.3"), ref::get<R>("0.5")};
    const FermiPoint<R> q{ref::get<R>("1.7"), ref::get<R>("-0.2")};
    EXPECT_TRUE(ref::near_rel(fermi_distance(p, q), ref::fermi_sample, rel_tol<R>() * 8));
    using std::abs;
    EXPECT_LE(abs(fermi_distance(p, q) - fermi_distance(q, p)), R(1e-45));
    EXPECT_EQ(fermi_distance(p, p), R(0));
}

TEST(Hyptrig, FermiDistanceOfNearbyPoints) {
    // along a curve of constant s the metric is cosh(s) dt
    const double s = 1.3, dt = 1e-9;
    const double d = fermi_distance(FermiPoint<double>{0.0, s}, FermiPoint<double>{dt, s});
    EXPECT_NEAR(d, std::cosh(s) * dt, 1e-14 * d);
    // along a perpendicular it is ds
    const double s2 = 0.4 + 1e-10;
    EXPECT_NEAR(fermi_distance(FermiPoint<double>{0.0, 0.4}, FermiPoint<double>{0.0, s2}), s2 - 0.4, 1e-24);
}

TEST(Hyptrig, FermiDistanceRejectsNonFinite) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW(fermi_distance(FermiPoint<double>{nan, 0}, FermiPoint<double>{0, 0}), intlen::DomainError);
}

TYPED_TEST(HyptrigTyped, CrossingArcLength) {
    using R = TypeParam;
    EXPECT_TRUE(ref::near_rel(crossing_arc_length(R(1), R(2)), ref::arc_w1_dt2, rel_tol<R>() * 8));
    EXPECT_TRUE(ref::near_rel(crossing_arc_length(ref::get<R>("0.5"), R(4)), ref::arc_w0_5_dt4, rel_tol<R>() * 8));
    const R w = ref::get<R>("1.7");
    using std::abs;
    EXPECT_LE(abs(crossing_arc_length(w, R(0)) - R(2) * w), R(rel_tol<R>() * 16));
    EXPECT_THROW(crossing_arc_length(R(1), R(-0.1)), intlen::DomainError);
    EXPECT_THROW(crossing_arc_length(R(0), R(1)), intlen::DomainError);
}

TEST(Hyptrig, CrossingArcLengthAgreesWithFermiDistance) {
    // the arc from (-dt/2, -w) to (dt/2, w) is the geodesic between its end points
    for (double w : {0.3, 1.1, 1.7, 3.0}) {
        for (double dt : {0.0, 0.01, 0.5, 2.0, 7.0}) {
            const double a = crossing_arc_length(w, dt);
            const double b = fermi_distance(FermiPoint<double>{-dt / 2, -w}, FermiPoint<double>{dt / 2, w});
            EXPECT_NEAR(a, b, 1e-13 * a) << w << " " << dt;
        }
    }
}

TEST(Hyptrig, CrossingArcLengthLowerBounds) {
    for (double w : {0.2, 1.0, 2.5}) {
        for (double dt = 0; dt < 20; dt += 0.37) {
            const double len = crossing_arc_length(w, dt);
            EXPECT_GE(len, 2 * w);
            EXPECT_GE(len, dt);
        }
    }
}

TYPED_TEST(HyptrigTyped, BoundaryLength) {
    using R = TypeParam;
    const R w = collar_width(ref::get<R>("0.2")) - ref::get<R>("1.3");
    EXPECT_TRUE(ref::near_rel(w, ref::w_0_2, rel_tol<R>() * 8));
    EXPECT_TRUE(ref::near_rel(boundary_length(ref::get<R>("0.2"), w), ref::boundary_0_2, rel_tol<R>() * 8));
    const R w1 = collar_width(ref::get<R>("0.1")) - ref::get<R>("1.3");
    EXPECT_TRUE(ref::near_rel(boundary_length(ref::get<R>("0.1"), w1), ref::boundary_0_1, rel_tol<R>() * 8));
    EXPECT_THROW(boundary_length(R(0), R(1)), intlen::DomainError);
}
