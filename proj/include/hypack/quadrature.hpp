#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hypack {

struct QuadratureSettings {
    double abs_tol = 1e-11;    // absolute tolerance for the whole interval
    int max_subdivisions = 60; // max bisection depth of any subinterval
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t intervals = 0;  // panels actually evaluated
};

// Thrown when the adaptive scheme cannot meet abs_tol; carries the best
// estimate accumulated so far.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& msg, QuadratureResult best)
        : std::runtime_error(msg), best_(best) {}
    const QuadratureResult& best() const { return best_; }

private:
    QuadratureResult best_;
};

namespace detail {

// Gauss(7)/Kronrod(15) nodes and weights on [-1,1].
inline constexpr std::array<double, 8> kGk15Nodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};

inline constexpr std::array<double, 8> kK15Weights = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};

// weights of the embedded 7-point Gauss rule, at nodes 1, 3, 5 and the centre
inline constexpr std::array<double, 4> kG7Weights = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct PanelEstimate {
    double value;  // K15 result
    double error;  // |K15 - G7|, a conservative bound for the K15 error
};

template <class F>
PanelEstimate gk15_panel(F& f, double a, double b) {
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(centre);
    double k15 = kK15Weights[7] * fc;
    double g7 = kG7Weights[3] * fc;
    for (std::size_t i = 0; i < 7; ++i) {
        const double dx = half * kGk15Nodes[i];
        const double fv = f(centre - dx) + f(centre + dx);
        k15 += kK15Weights[i] * fv;
        if (i % 2 == 1) g7 += kG7Weights[i / 2] * fv;
    }
    k15 *= half;
    g7 *= half;
    return {k15, std::fabs(k15 - g7)};
}

// hard cap on the total number of panels, so hopeless tolerances fail in
// bounded time instead of exploding the bisection tree
inline constexpr std::size_t kMaxPanels = 50000;

}  // namespace detail

// Adaptive Gauss-Kronrod integration of f over [a, b]. Panels are bisected
// depth-first, left child first, each child inheriting half the parent's
// error budget, so the summation order is fixed and results are
// bit-identical across runs at equal settings.
template <class F>
QuadratureResult integrate_adaptive(F&& f, double a, double b,
                                    const QuadratureSettings& settings = {}) {
    if (!(settings.abs_tol > 0.0))
        throw std::invalid_argument("integrate_adaptive: abs_tol must be positive");
    if (settings.max_subdivisions < 1)
        throw std::invalid_argument("integrate_adaptive: max_subdivisions must be >= 1");
    if (!(a <= b))
        throw std::invalid_argument("integrate_adaptive: reversed or non-finite range");

    struct Panel {
        double a, b, tol;
        int depth;
    };

    std::vector<Panel> stack;
    stack.push_back({a, b, settings.abs_tol, 0});

    QuadratureResult total;
    bool budget_exhausted = false;

    while (!stack.empty()) {
        const Panel panel = stack.back();
        stack.pop_back();
        ++total.intervals;

        const detail::PanelEstimate est = detail::gk15_panel(f, panel.a, panel.b);
        bool accept = est.error <= panel.tol || panel.a == panel.b;
        if (!accept && (panel.depth >= settings.max_subdivisions ||
                        total.intervals >= detail::kMaxPanels)) {
            accept = true;
            budget_exhausted = true;
        }
        if (accept) {
            total.value += est.value;
            total.error_estimate += est.error;
        } else {
            const double mid = 0.5 * (panel.a + panel.b);
            const double child_tol = 0.5 * panel.tol;
            stack.push_back({mid, panel.b, child_tol, panel.depth + 1});
            stack.push_back({panel.a, mid, child_tol, panel.depth + 1});
        }
    }

    if (budget_exhausted)
        throw QuadratureError(
            "integrate_adaptive: tolerance not reached within subdivision limits",
            total);
    return total;
}

}  // namespace hypack
