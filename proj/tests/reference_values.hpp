#pragma once

// Reference values computed independently with mpmath at 60 significant
// digits and rounded to 40. Tests parse them into intlen::Extended.

#include <cmath>
#include <string>

#include "intlen/cli/parse.hpp"
#include "intlen/real.hpp"

namespace ref {

inline intlen::Extended ext(const char* s) { return intlen::cli::parse_real<intlen::Extended>(s); }
inline double dbl(const char* s) { return intlen::cli::parse_real<double>(s); }

template <typename Real>
Real get(const char* s) {
    if constexpr (std::is_same_v<Real, double>) {
        return dbl(s);
    } else {
        return ext(s);
    }
}

/// |got - want| <= rel |want|, with the reference given as a string
template <typename Real>
bool near_rel(const Real& got, const char* want, double rel) {
    using std::abs;
    const intlen::Extended w = ext(want);
    const intlen::Extended g = intlen::Extended(got);
    return abs(g - w) <= intlen::Extended(rel) * abs(w);
}

// collar width cl(l) = arsinh(1 / sinh(l / 2))
inline constexpr const char* cl_0_25 = "2.773889620080370266589705963105296396472";
inline constexpr const char* cl_0_2 = "2.996565121117661703749596295378270626617";
inline constexpr const char* cl_0_1 = "3.689087757070663397223270136592789949182";
inline constexpr const char* cl_1e_3 = "8.294049660935360700402332835088831762508";

inline constexpr const char* asinh_1e_6 = "0.0000009999999999998333333333334083333333332887";
inline constexpr const char* asinh_40 = "4.38218284806549830676116625337566418438";
inline constexpr const char* asinh_1e10 = "23.71899811050040214959964666830181864409";
inline constexpr const char* asinh_m3_5 = "-1.965720471649651521238756348670069302284";
inline constexpr const char* acosh_1p1e_10 = "0.00001414213562361309935782178097179287736039";
inline constexpr const char* acosh_1e9 = "21.41641301750635646532915521361745443639";
inline constexpr const char* acosh_2 = "1.316957896924816708625046347307968444027";

// 2 arcosh(cosh w cosh(dt / 2))
inline constexpr const char* arc_w1_dt2 = "3.026748013193007919608023751453270883143";
inline constexpr const char* arc_w0_5_dt4 = "4.248149869301918839325238620013117528527";

// shrunk collar about a core of length 0.2: w = cl(0.2) - 1.3
inline constexpr const char* w_0_2 = "1.696565121117661703749596295378270626617";
inline constexpr const char* boundary_0_2 = "0.5638489399130883038448619121590361258806";
inline constexpr const char* arc_0_2_wind_2_6 = "3.464463747162948584680404594163456895847";
inline constexpr const char* width_0_2 = "3.393130242235323407499192590756541253234";
inline constexpr const char* boundary_0_1 = "0.5497628017779592018652701392192571419858";
inline constexpr const char* boundary_0_24 = "0.5721047843159430944669118406115616640434";

// distance between Fermi points (0.3, 0.5) and (1.7, -0.2)
inline constexpr const char* fermi_sample = "1.600643756499271904786459133320613664002";

inline constexpr const char* lower_2_0_1 = "0.04395049336762613890859771915568661467023";
inline constexpr const char* upper_2_0_1 = "192.7925503140998205957338982072567800836";
inline constexpr const char* case2_0_1 = "1.355348619836106127659274950201577224543";
inline constexpr const char* lower_3_0_1 = "0.01503629469569603317049026664141320919796";
inline constexpr const char* upper_3_0_1 = "241.5851006281996411914677964145135601671";

// profiles bound * l1 * |log l1| for genus 2
inline constexpr const char* lower_profile_1e_3 = "0.02808615303025772020833542919567237874524";
inline constexpr const char* upper_profile_1e_3 = "15.98613833404137107665148178822265561049";
inline constexpr const char* lower_profile_1e_12 = "0.08402525731732809579582395975830645480862";
inline constexpr const char* upper_profile_1e_12 = "17.14005489569015873832551129306226832636";

// 1 / (x cl(x))
inline constexpr const char* inv_xcl_0_1 = "2.710697239672212255318549900403154449086";
inline constexpr const char* inv_xcl_0_2 = "1.668577120104466561069244221085221449494";

// hexagonal lattice: K = 2 / sqrt(3), diameter 1 / sqrt(3)
inline constexpr const char* hex_k = "1.154700538379251529018297561003914911295";
inline constexpr const char* hex_diameter = "0.5773502691896257645091487805019574556476";

}  // namespace ref
