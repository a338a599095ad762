#pragma once

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <hypack/linalg.hpp>

namespace hypack {

// Linear Coxeter diagram weights (p, q, r, ...): the orthoscheme in H^n has
// n weights and an (n+1) x (n+1) Coxeter-Schlafli matrix. The branched
// "3^{1,1}" tail is accepted as an alias token: it resolves to a final
// weight 3 for all computations and is only remembered for labelling.
struct CoxeterSymbol {
    std::vector<int> weights;
    bool branched_alias = false;

    std::size_t dimension() const { return weights.size(); }
    std::size_t matrix_order() const { return weights.size() + 1; }

    // canonical form, e.g. "[5,3,3,3,3]" or "[5,3,3,3,3^{1,1}]"
    std::string text() const {
        std::string out = "[";
        const std::size_t shown = branched_alias ? weights.size() - 1 : weights.size();
        for (std::size_t i = 0; i < shown; ++i) {
            if (i) out += ',';
            out += std::to_string(weights[i]);
        }
        if (branched_alias) out += ",3^{1,1}";
        out += ']';
        return out;
    }
};

namespace detail {

inline void skip_ws(std::string_view s, std::size_t& pos) {
    while (pos < s.size() &&
           std::isspace(static_cast<unsigned char>(s[pos])) != 0)
        ++pos;
}

}  // namespace detail

// Parses a bracketed, whitespace-tolerant weight list:
//
//     [5,3,3,3,3]    [ 5 , 3 ]    [5,3,3,3,3^{1,1}]
//
// The "3^{1,1}" token is permitted only in the last position. Weights must
// be integers >= 3.
inline CoxeterSymbol parse_symbol(std::string_view text) {
    constexpr std::string_view alias_token = "3^{1,1}";
    std::size_t pos = 0;
    detail::skip_ws(text, pos);
    if (pos >= text.size() || text[pos] != '[')
        throw std::invalid_argument("Coxeter symbol must start with '[': " +
                                    std::string(text));
    ++pos;

    CoxeterSymbol symbol;
    bool expect_more = true;
    while (expect_more) {
        detail::skip_ws(text, pos);
        if (symbol.branched_alias)
            throw std::invalid_argument(
                "Coxeter symbol: \"3^{1,1}\" is only allowed as the last entry");
        if (text.compare(pos, alias_token.size(), alias_token) == 0) {
            if (symbol.weights.empty())
                throw std::invalid_argument(
                    "Coxeter symbol: \"3^{1,1}\" cannot be the only entry");
            symbol.weights.push_back(3);
            symbol.branched_alias = true;
            pos += alias_token.size();
        } else {
            int weight = 0;
            const char* first = text.data() + pos;
            const char* last = text.data() + text.size();
            const auto [ptr, ec] = std::from_chars(first, last, weight);
            if (ec != std::errc() || ptr == first)
                throw std::invalid_argument("Coxeter symbol: expected an integer at \"" +
                                            std::string(text.substr(pos)) + "\"");
            if (weight < 3)
                throw std::invalid_argument("Coxeter symbol: weight " +
                                            std::to_string(weight) + " is below 3");
            symbol.weights.push_back(weight);
            pos += static_cast<std::size_t>(ptr - first);
        }
        detail::skip_ws(text, pos);
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
        } else {
            expect_more = false;
        }
    }
    if (pos >= text.size() || text[pos] != ']')
        throw std::invalid_argument("Coxeter symbol: missing ']' in " + std::string(text));
    ++pos;
    detail::skip_ws(text, pos);
    if (pos != text.size())
        throw std::invalid_argument("Coxeter symbol: trailing characters in " +
                                    std::string(text));
    return symbol;
}

// Symmetric tridiagonal matrix with unit diagonal and superdiagonal entries
// -cos(pi/w) for the symbol's weights w; all other entries are exactly zero.
struct SchlafliMatrix {
    SquareMatrix entries;
    std::size_t order() const { return entries.order(); }
};

inline SchlafliMatrix schlafli_matrix(const CoxeterSymbol& symbol) {
    const std::size_t n1 = symbol.matrix_order();
    SquareMatrix m(n1);
    for (std::size_t i = 0; i < n1; ++i) m(i, i) = 1.0;
    for (std::size_t i = 0; i + 1 < n1; ++i) {
        const double c = -std::cos(M_PI / symbol.weights[i]);
        m(i, i + 1) = c;
        m(i + 1, i) = c;
    }
    return {m};
}

struct SignatureCounts {
    int positives = 0;
    int negatives = 0;
    int zeros = 0;
};

// Eigenvalue sign counts; |lambda| <= tol counts as zero. A compact
// hyperbolic scheme reports exactly one negative direction.
inline SignatureCounts signature(const SchlafliMatrix& m, double tol = 1e-12) {
    SignatureCounts counts;
    for (double lambda : jacobi_eigen(m.entries).values) {
        if (std::fabs(lambda) <= tol)
            ++counts.zeros;
        else if (lambda < 0.0)
            ++counts.negatives;
        else
            ++counts.positives;
    }
    return counts;
}

// Inverse H = (h_ij) of the Coxeter-Schlafli matrix. The diagonal signs of H
// classify the scheme's vertices (negative proper, positive outer); columns
// of H are the vertex representatives in the basis of the face normals.
struct GramInverse {
    SquareMatrix entries;
    double residual = 0.0;  // max-norm of C*H - I
    std::size_t order() const { return entries.order(); }
};

namespace detail {

inline double max_abs_entry(const SquareMatrix& m) {
    double worst = 0.0;
    for (std::size_t i = 0; i < m.order(); ++i)
        for (std::size_t j = 0; j < m.order(); ++j)
            worst = std::max(worst, std::fabs(m(i, j)));
    return worst;
}

}  // namespace detail

inline GramInverse invert(const SchlafliMatrix& m) {
    SquareMatrix h = invert_partial_pivot(m.entries);

    // A degenerate (Euclidean/ideal) scheme has an exactly singular matrix in
    // real arithmetic; in floating point the elimination still succeeds and
    // can even leave a tiny residual, but the inverse blows up. Gate on the
    // blowup.
    if (detail::max_abs_entry(m.entries) * detail::max_abs_entry(h) > 1e12)
        throw SingularMatrixError(
            "Coxeter-Schlafli matrix is numerically singular: degenerate or ideal "
            "scheme");

    // enforce exact symmetry; elimination breaks it at rounding level
    for (std::size_t i = 0; i + 1 < h.order(); ++i)
        for (std::size_t j = i + 1; j < h.order(); ++j) {
            const double avg = 0.5 * (h(i, j) + h(j, i));
            h(i, j) = avg;
            h(j, i) = avg;
        }
    const double residual =
        max_abs_diff(multiply(m.entries, h), SquareMatrix::identity(m.order()));
    if (residual > 1e-10)
        throw SingularMatrixError(
            "Coxeter-Schlafli matrix inversion failed: residual " +
            std::to_string(residual));
    return {h, residual};
}

// Mutual position of two bounding hyperplanes, classified from their Gram
// matrix entry g = <b^i, b^j>:
//
//     g = 0        perpendicular
//     -1 < g < 0   intersecting at angle arccos(-g)
//     g = -1       parallel
//     g < -1       divergent with common perpendicular of length arccosh(-g)
struct EdgeRelation {
    enum class Kind { perpendicular, intersecting, parallel, divergent };
    Kind kind;
    double measure = 0.0;  // the angle or length above; 0 otherwise
};

inline EdgeRelation edge_relation(double gram_entry) {
    if (gram_entry > 0.0)
        throw std::domain_error(
            "edge_relation: positive Gram entry violates the acute-angled convention");
    if (gram_entry == 0.0) return {EdgeRelation::Kind::perpendicular, 0.0};
    if (gram_entry > -1.0)
        return {EdgeRelation::Kind::intersecting, std::acos(-gram_entry)};
    if (gram_entry == -1.0) return {EdgeRelation::Kind::parallel, 0.0};
    return {EdgeRelation::Kind::divergent, std::acosh(-gram_entry)};
}

}  // namespace hypack
