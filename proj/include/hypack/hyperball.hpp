#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include <hypack/coxeter.hpp>
#include <hypack/lorentz.hpp>
#include <hypack/volume.hpp>

namespace hypack {

// Concrete Lorentz coordinates a_0, ..., a_n for the scheme's vertices,
// realized by factoring H = Q L Q^T (Jacobi) and scaling eigenvectors by
// sqrt(|lambda|), with the single negative direction mapped to the time
// axis. Any such realization satisfies <a_i, a_j> = h_ij, which is all the
// formulas below depend on; different realizations differ by an isometry.
inline std::vector<LorentzVector> vertex_representatives(const GramInverse& h) {
    const std::size_t n = h.order();
    const SymmetricEigen eig = jacobi_eigen(h.entries);

    std::size_t negative_idx = n;
    int negatives = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (eig.values[k] < 0.0) {
            ++negatives;
            negative_idx = k;
        }
    }
    if (negatives != 1)
        throw std::domain_error(
            "vertex_representatives: Gram inverse must have signature (1,n)");

    // column order: the negative eigenvalue first, the rest as produced
    std::vector<std::size_t> cols;
    cols.reserve(n);
    cols.push_back(negative_idx);
    for (std::size_t k = 0; k < n; ++k)
        if (k != negative_idx) cols.push_back(k);

    std::vector<LorentzVector> vertices;
    vertices.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> coords(n);
        for (std::size_t c = 0; c < n; ++c) {
            const std::size_t k = cols[c];
            coords[c] = eig.vectors(i, k) * std::sqrt(std::fabs(eig.values[k]));
        }
        vertices.emplace_back(std::move(coords));
    }
    return vertices;
}

// Orthogonal projection of the proper vertex a_p onto the polar hyperplane
// of the outer vertex a_o:
//
//     p = a_p h_oo - a_o h_po,
//
// which satisfies <p, a_o> = 0 by construction.
inline LorentzVector footpoint(const GramInverse& h, std::size_t proper_idx,
                               std::size_t outer_idx) {
    if (proper_idx >= h.order() || outer_idx >= h.order() || proper_idx == outer_idx)
        throw std::invalid_argument("footpoint: vertex indices out of range");
    if (!(h.entries(proper_idx, proper_idx) < 0.0))
        throw std::domain_error("footpoint: h_pp must be negative (proper vertex)");
    if (!(h.entries(outer_idx, outer_idx) > 0.0))
        throw std::domain_error("footpoint: h_oo must be positive (outer vertex)");

    const std::vector<LorentzVector> a = vertex_representatives(h);
    return a[proper_idx] * h.entries(outer_idx, outer_idx) -
           a[outer_idx] * h.entries(proper_idx, outer_idx);
}

// Maximal hyperball height of the truncated scheme: the distance from the
// last proper vertex A_{n-1} to its foot point on the truncating polar
// hyperplane, in closed form
//
//     h = arcosh sqrt( (h_44 h_55 - h_45^2) / (h_44 h_55) )
//
// (indices written for n = 5; the last two diagonal entries in general).
inline double optimal_height(const GramInverse& h) {
    if (h.order() < 2)
        throw std::invalid_argument("optimal_height: matrix order below 2");
    const std::size_t p = h.order() - 2;
    const std::size_t o = h.order() - 1;
    const double hpp = h.entries(p, p);
    const double hoo = h.entries(o, o);
    const double hpo = h.entries(p, o);
    if (!(hpp < 0.0))
        throw std::domain_error("optimal_height: h_44 must be negative (proper vertex)");
    if (!(hoo > 0.0))
        throw std::domain_error("optimal_height: h_55 must be positive (outer vertex)");

    const double radicand = (hpp * hoo - hpo * hpo) / (hpp * hoo);
    if (radicand < 1.0 - 1e-9)
        throw std::domain_error("optimal_height: radicand below 1, inconsistent Gram data");
    return detail::acosh_clamped(std::sqrt(std::max(radicand, 1.0)), 1e-9);
}

// Same, straight from a supported Coxeter symbol.
inline double optimal_height(const CoxeterSymbol& symbol) {
    vol5_lower_bound(symbol);  // restricts to the supported scheme pair
    return optimal_height(invert(schlafli_matrix(symbol)));
}

// Volume of the hyperball piece of height h over a base 4-polytope of
// volume Vol(A), lying on the mid-hyperplane (Bolyai-style integration):
//
//     Vol = (1/16) Vol(A) k ( 1/2 sinh(4h/k) + 4 sinh(2h/k) ) + 3 h Vol(A) / 8,
//
// with k the natural length unit (k = 1 for curvature -1). Factored as
// base_volume * (rest) so the volume is exactly linear in the base.
inline double piece_volume(double base_volume, double height, double k = 1.0) {
    if (!(base_volume > 0.0))
        throw std::domain_error("piece_volume: base volume must be positive");
    if (!(height >= 0.0))
        throw std::domain_error("piece_volume: height must be non-negative");
    if (!(k > 0.0))
        throw std::domain_error("piece_volume: natural length unit must be positive");
    const double shell = (k / 16.0) * (0.5 * std::sinh(4.0 * height / k) +
                                       4.0 * std::sinh(2.0 * height / k));
    return base_volume * (shell + 3.0 * height / 8.0);
}

// One row of the packing table: everything the density of a scheme's
// optimal hyperball packing is made of.
struct PackingReport {
    CoxeterSymbol symbol;
    double vol5 = 0.0;
    double height = 0.0;
    double piece_volume = 0.0;
    double density = 0.0;
};

// Optimal hyperball packing density of the regular prism tiling of the
// given scheme:
//
//     delta = Vol(hyperball piece) / Vol5(truncated orthoscheme),
//
// with the piece taken over the characteristic simplex of volume
// pi^2/10800 (the same for both schemes) at the maximal height.
inline PackingReport density(const CoxeterSymbol& symbol,
                             const QuadratureSettings& settings = {}) {
    const Volume5Result vol5 = vol5_truncated(symbol, settings);
    const GramInverse gram_inverse = invert(schlafli_matrix(symbol));
    const double height = optimal_height(gram_inverse);
    const double piece = piece_volume(vol4_base(), height, 1.0);

    PackingReport report;
    report.symbol = symbol;
    report.vol5 = vol5.value;
    report.height = height;
    report.piece_volume = piece;
    report.density = piece / vol5.value;
    return report;
}

}  // namespace hypack
