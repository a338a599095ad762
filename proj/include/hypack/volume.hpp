#pragma once

#include <cmath>
#include <stdexcept>

#include <hypack/coxeter.hpp>
#include <hypack/quadrature.hpp>
#include <hypack/specfun.hpp>

namespace hypack {

namespace detail {

// tolerance band for radicands that are exactly zero in real arithmetic but wobble
// around zero in floating point (the theta = 0 degenerate configurations)
inline double clamped_radicand(double r, const char* what) {
    if (r < -1e-12) throw std::domain_error(what);
    return r < 0.0 ? 0.0 : r;
}

}  // namespace detail

// Angle parameter of the tetrahedron family [5,3,beta(t)]:
//
//     beta(t) = arctan sqrt(2 - cot^2 t),    in (0, pi/2).
inline double beta_of_t(double t) {
    const double sin_t = std::sin(t);
    if (sin_t == 0.0)
        throw std::domain_error("beta_of_t: cot(t) undefined");
    const double cot = std::cos(t) / sin_t;
    const double radicand =
        detail::clamped_radicand(2.0 - cot * cot, "beta_of_t: cot^2(t) exceeds 2");
    return std::atan(std::sqrt(radicand));
}

// Auxiliary angle of the [5,3,beta] volume formula:
//
//     theta = arctan( sqrt(1 - 4 sin^2(pi/5) sin^2 beta) / (2 cos(pi/5) cos beta) ).
inline double theta_of_beta(double beta) {
    if (!(beta > 0.0 && beta < M_PI / 2.0))
        throw std::domain_error("theta_of_beta: beta must lie in (0, pi/2)");
    const double s = std::sin(M_PI / 5.0) * std::sin(beta);
    const double radicand = detail::clamped_radicand(
        1.0 - 4.0 * s * s, "theta_of_beta: tetrahedron degenerates (negative radicand)");
    return std::atan(std::sqrt(radicand) /
                     (2.0 * std::cos(M_PI / 5.0) * std::cos(beta)));
}

// Volume of the compact hyperbolic 3-orthoscheme with essential dihedral
// angles (alpha1, alpha2, alpha3), by Lobachevsky's formula:
//
//   V = 1/4 { L(a1+th) - L(a1-th) - L(pi/2 - a2 + th) + L(pi/2 - a2 - th)
//             + L(a3+th) - L(a3-th) + 2 L(pi/2 - th) },
//
//   tan th = sqrt(cos^2 a2 - sin^2 a1 sin^2 a3) / (cos a1 cos a3).
//
// Requires cos^2 a2 >= sin^2 a1 sin^2 a3; at equality th = 0 and the volume
// degenerates to zero.
inline double vol3_orthoscheme(double alpha1, double alpha2, double alpha3) {
    if (!(alpha1 > 0.0 && alpha1 < M_PI / 2.0) ||
        !(alpha2 > 0.0 && alpha2 < M_PI / 2.0) ||
        !(alpha3 > 0.0 && alpha3 < M_PI / 2.0))
        throw std::domain_error(
            "vol3_orthoscheme: essential angles must lie in (0, pi/2)");
    const double s13 = std::sin(alpha1) * std::sin(alpha3);
    const double c2 = std::cos(alpha2);
    const double disc = detail::clamped_radicand(
        c2 * c2 - s13 * s13,
        "vol3_orthoscheme: not a compact orthoscheme (cos^2 a2 <= sin^2 a1 sin^2 a3)");
    const double theta =
        std::atan(std::sqrt(disc) / (std::cos(alpha1) * std::cos(alpha3)));

    const double half_pi = M_PI / 2.0;
    return 0.25 * (lobachevsky(alpha1 + theta) - lobachevsky(alpha1 - theta) -
                   lobachevsky(half_pi - alpha2 + theta) +
                   lobachevsky(half_pi - alpha2 - theta) +
                   lobachevsky(alpha3 + theta) - lobachevsky(alpha3 - theta) +
                   2.0 * lobachevsky(half_pi - theta));
}

// Volume of the characteristic 4-simplex [5,3,3,3] on the mid-hyperplane of
// the prism tiling: pi^2 / 10800, the same base polytope for both schemes.
inline double vol4_base() { return M_PI * M_PI / 10800.0; }

struct Volume5Result {
    double value = 0.0;          // integral_part + constant_part
    double integral_part = 0.0;
    double constant_part = 0.0;  // zeta(3)/3200
    double estimated_error = 0.0;
};

// Volume of the truncated 5-orthoscheme as the integral
//
//     (1/4) Integral_{alpha}^{2 pi/5} Vol3([5, 3, beta(t)]) dt  +  zeta(3)/3200
//
// over the family's last dihedral angle. Exposed with a free lower bound so
// the degenerate empty range is testable; the supported schemes enter below.
inline Volume5Result vol5_truncated_from(double alpha_lower,
                                         const QuadratureSettings& settings = {}) {
    const double upper = 2.0 * M_PI / 5.0;
    const auto integrand = [](double t) {
        return 0.25 * vol3_orthoscheme(M_PI / 5.0, M_PI / 3.0, beta_of_t(t));
    };
    const QuadratureResult r = integrate_adaptive(integrand, alpha_lower, upper, settings);

    Volume5Result out;
    out.integral_part = r.value;
    out.constant_part = kZeta3 / 3200.0;
    out.value = out.integral_part + out.constant_part;
    out.estimated_error = r.error_estimate;
    return out;
}

// Lower integration bound pi/w for the scheme's last weight w (pi/3 for
// [5,3,3,3,3], pi/4 for [5,3,3,3,4]); rejects everything else, so it doubles
// as the support check for the packing pipeline.
inline double vol5_lower_bound(const CoxeterSymbol& symbol) {
    const auto& w = symbol.weights;
    if (w.size() != 5)
        throw std::invalid_argument("unsupported symbol " + symbol.text() +
                                    ": unsupported dimension (needs 5 weights)");
    const bool head_ok = w[0] == 5 && w[1] == 3 && w[2] == 3 && w[3] == 3;
    if (!head_ok || (w[4] != 3 && w[4] != 4))
        throw std::invalid_argument("unsupported symbol " + symbol.text() +
                                    ": supported schemes are [5,3,3,3,3], "
                                    "[5,3,3,3,4] and the 3^{1,1} alias");
    return M_PI / w[4];
}

inline Volume5Result vol5_truncated(const CoxeterSymbol& symbol,
                                    const QuadratureSettings& settings = {}) {
    return vol5_truncated_from(vol5_lower_bound(symbol), settings);
}

}  // namespace hypack
