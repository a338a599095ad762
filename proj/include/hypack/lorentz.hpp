#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hypack {

// Projective coordinates (x^0, x^1, ..., x^n) of a point of n-dimensional
// hyperbolic space in the Lorentzian model of signature (1,n):
//
//     <x,y> = -x^0 y^0 + x^1 y^1 + ... + x^n y^n
//
// Vectors differing by a nonzero real factor represent the same point.
class LorentzVector {
public:
    LorentzVector() = default;
    LorentzVector(std::initializer_list<double> coords) : coords_(coords) {}
    explicit LorentzVector(std::vector<double> coords) : coords_(std::move(coords)) {}

    std::size_t size() const { return coords_.size(); }
    double operator[](std::size_t i) const { return coords_[i]; }
    double& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<double>& coords() const { return coords_; }

private:
    std::vector<double> coords_;
};

inline LorentzVector operator*(const LorentzVector& x, double f) {
    std::vector<double> c(x.coords());
    for (double& v : c) v *= f;
    return LorentzVector(std::move(c));
}

inline LorentzVector operator*(double f, const LorentzVector& x) { return x * f; }

inline LorentzVector operator+(const LorentzVector& x, const LorentzVector& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("lorentz vector sum: dimension mismatch");
    std::vector<double> c(x.coords());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += y[i];
    return LorentzVector(std::move(c));
}

inline LorentzVector operator-(const LorentzVector& x, const LorentzVector& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("lorentz vector difference: dimension mismatch");
    std::vector<double> c(x.coords());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= y[i];
    return LorentzVector(std::move(c));
}

// Sign of <x,x> relative to the absolute quadric: proper points lie inside
// (<x,x> < 0), ideal points on it, outer points beyond it.
enum class PointClass { proper, ideal, outer };

inline double lorentz_product(const LorentzVector& x, const LorentzVector& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("lorentz_product: dimension mismatch");
    if (x.size() < 2)
        throw std::invalid_argument("lorentz_product: need at least 2 coordinates");
    double s = -x[0] * y[0];
    for (std::size_t i = 1; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

// Trichotomy on sign(<x,x>); |<x,x>| <= tol * |x|^2 (Euclidean norm) counts
// as ideal, absorbing rounding in coordinates that are exact in real arithmetic.
inline PointClass classify_point(const LorentzVector& x, double tol = 1e-9) {
    double norm2 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) norm2 += x[i] * x[i];
    if (norm2 == 0.0)
        throw std::invalid_argument("classify_point: zero vector");
    const double q = lorentz_product(x, x);
    if (std::fabs(q) <= tol * norm2) return PointClass::ideal;
    return q < 0.0 ? PointClass::proper : PointClass::outer;
}

namespace detail {

// acosh via log(x + sqrt(x^2 - 1)); arguments in [1 - tol, 1) are clamped to
// 1. Rounding can also push the argument of projectively equal points a few
// ulp above 1, which acosh would amplify to ~1e-8, so a machine-noise band
// above 1 snaps to zero distance as well. Distances below ~1e-6 are not
// resolvable from the quotient in double precision either way.
inline double acosh_clamped(double x, double tol) {
    if (x < 1.0) {
        if (x < 1.0 - tol)
            throw std::domain_error("acosh argument below 1: inconsistent input");
        x = 1.0;
    } else if (x - 1.0 <= 1e-13) {
        x = 1.0;
    }
    return std::log(x + std::sqrt(x * x - 1.0));
}

}  // namespace detail

// Hyperbolic distance of two proper points (natural length unit k = 1):
//
//     cosh d = |<x,y>| / sqrt(<x,x> <y,y>)
//
// Independent of the representative scaling of either argument.
inline double proper_distance(const LorentzVector& x, const LorentzVector& y,
                              double tol = 1e-9) {
    if (x.size() != y.size())
        throw std::invalid_argument("proper_distance: dimension mismatch");
    if (classify_point(x, tol) != PointClass::proper ||
        classify_point(y, tol) != PointClass::proper)
        throw std::domain_error("proper_distance: both points must be proper");
    const double xx = lorentz_product(x, x);
    const double yy = lorentz_product(y, y);
    const double arg = std::fabs(lorentz_product(x, y)) / std::sqrt(xx * yy);
    return detail::acosh_clamped(arg, tol);
}

}  // namespace hypack
