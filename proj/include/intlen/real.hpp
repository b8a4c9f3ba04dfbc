#pragma once

#include <cmath>
#include <concepts>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>
#include <type_traits>

#include <boost/multiprecision/cpp_dec_float.hpp>

namespace intlen {

/// 50 significant decimal digits, expression templates off so that `auto`
/// behaves like it does for builtin floating point.
using Extended = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<50>,
                                               boost::multiprecision::et_off>;

enum class Precision { Double, Extended };

template <typename Real>
concept ScalarReal = std::floating_point<Real> || std::same_as<Real, Extended>;

template <ScalarReal Real>
bool is_finite(const Real& x) {
    if constexpr (std::floating_point<Real>) {
        return std::isfinite(x);
    } else {
        return boost::multiprecision::isfinite(x);
    }
}

template <ScalarReal Real>
double to_double(const Real& x) {
    return static_cast<double>(x);
}

template <ScalarReal Real>
int sign_of(const Real& x) {
    return (x > 0) - (x < 0);
}

/// Decimal rendering with `digits` significant digits; used for the extended
/// columns of reports.
template <ScalarReal Real>
std::string to_string(const Real& x, int digits = std::numeric_limits<Real>::digits10) {
    std::ostringstream out;
    out << std::setprecision(digits) << x;
    return out.str();
}

}  // namespace intlen
