#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hypack {

// Dense square matrix, row-major storage. Everything in this library is
// order <= 10, so no effort is spent on blocking or pivgrowth heuristics.
class SquareMatrix {
public:
    SquareMatrix() = default;

    explicit SquareMatrix(std::size_t order, double fill = 0.0)
        : order_(order), data_(order * order, fill) {}

    static SquareMatrix identity(std::size_t order) {
        SquareMatrix m(order);
        for (std::size_t i = 0; i < order; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t order() const { return order_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * order_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * order_ + j]; }

private:
    std::size_t order_ = 0;
    std::vector<double> data_;
};

inline SquareMatrix multiply(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("matrix product: order mismatch");
    const std::size_t n = a.order();
    SquareMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

// max-norm of A - B
inline double max_abs_diff(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("matrix difference: order mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.order(); ++i)
        for (std::size_t j = 0; j < a.order(); ++j)
            worst = std::max(worst, std::fabs(a(i, j) - b(i, j)));
    return worst;
}

struct SingularMatrixError : std::domain_error {
    using std::domain_error::domain_error;
};

// Gauss-Jordan elimination with partial pivoting. Throws SingularMatrixError
// on an exactly zero pivot; near-singular inputs are the caller's problem
// (callers that care check the residual of the result).
inline SquareMatrix invert_partial_pivot(SquareMatrix m) {
    const std::size_t n = m.order();
    SquareMatrix inv = SquareMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot_row = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::fabs(m(r, col)) > std::fabs(m(pivot_row, col))) pivot_row = r;
        if (m(pivot_row, col) == 0.0)
            throw SingularMatrixError("matrix inversion: zero pivot");
        if (pivot_row != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(col, j), m(pivot_row, j));
                std::swap(inv(col, j), inv(pivot_row, j));
            }
        }
        const double pivot = m(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            m(col, j) /= pivot;
            inv(col, j) /= pivot;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = m(r, col);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                m(r, j) -= f * m(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

struct SymmetricEigen {
    std::vector<double> values;  // unsorted, as produced by the sweeps
    SquareMatrix vectors;        // column j is the eigenvector of values[j]
};

// Cyclic Jacobi iteration for a symmetric matrix. Deterministic: fixed sweep
// order, fixed convergence threshold, so repeated calls on equal input give
// bit-identical output.
inline SymmetricEigen jacobi_eigen(SquareMatrix a, int max_sweeps = 64) {
    const std::size_t n = a.order();
    SquareMatrix v = SquareMatrix::identity(n);

    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::fabs(a(i, j)));
    const double stop = scale * 1e-15;

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off = std::max(off, std::fabs(a(i, j)));
        if (off <= stop) break;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::fabs(apq) <= stop) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    SymmetricEigen out;
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.values[i] = a(i, i);
    out.vectors = std::move(v);
    return out;
}

}  // namespace hypack
