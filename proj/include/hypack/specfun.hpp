#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace hypack {

// Apery's constant zeta(3) = sum 1/k^3 = 1.2020569031595942854...
// Stored as a literal; the test suite rederives it from the series with an
// Euler-Maclaurin tail.
constexpr double kZeta3 = 1.2020569031595942854;

inline double zeta3() { return kZeta3; }

namespace detail {

// Coefficients |B_2k| / (2k * (2k+1)!) of the Clausen expansion
//
//   Cl2(x) = x - x log x + sum_{k>=1} |B_2k| x^{2k+1} / (2k (2k+1)!),
//
// valid for 0 <= x <= pi (the series converges on |x| < 2 pi).
inline constexpr std::array<double, 30> kClausenCoeff = {
    0.013888888888888888,   6.944444444444444e-05,  7.873519778281683e-07,
    1.1482216343327455e-08, 1.8978869988971e-10,    3.387301370953521e-12,
    6.372636443183181e-14,  1.2462059912950672e-15, 2.5105444608999545e-17,
    5.178258806090623e-19,  1.0887357368300849e-20, 2.325744114302087e-22,
    5.03519521314739e-24,   1.1026499294381215e-25, 2.4386585509007344e-27,
    5.440142678856253e-29,  1.2228340131217352e-30, 2.767263468967951e-32,
    6.3000905918320136e-34, 1.4420868388418476e-35, 3.3170939991595428e-37,
    7.663913557920658e-39,  1.7778714733830659e-40, 4.1396058982341375e-42,
    9.671557036081102e-44,  2.2667187016766123e-45, 5.327956311328254e-47,
    1.2557248389564336e-48, 2.967000542247094e-50,  7.026787317600742e-52,
};

// Clausen function Cl2 on [0, pi].
inline double clausen2(double x) {
    if (x == 0.0) return 0.0;
    double sum = x - x * std::log(x);
    const double x2 = x * x;
    double p = x;
    for (double c : kClausenCoeff) {
        p *= x2;
        const double term = c * p;
        sum += term;
        if (term < 1e-18) break;
    }
    return sum;
}

}  // namespace detail

// Lobachevsky function
//
//     L(w) = -Integral_0^w log|2 sin t| dt = Cl2(2w) / 2.
//
// Odd, pi-periodic, maximal at pi/6. The argument is reduced to
// [-pi/2, pi/2] first (oddness is exact by construction), then the Clausen
// series above is summed; absolute accuracy is well below 1e-12 everywhere.
inline double lobachevsky(double omega) {
    if (!std::isfinite(omega))
        throw std::invalid_argument("lobachevsky: non-finite argument");
    const double r = std::remainder(omega, M_PI);  // [-pi/2, pi/2]
    if (r == 0.0) return 0.0;
    const double half_cl2 = 0.5 * detail::clausen2(2.0 * std::fabs(r));
    return r < 0.0 ? -half_cl2 : half_cl2;
}

}  // namespace hypack
