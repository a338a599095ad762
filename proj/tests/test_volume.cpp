#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include <hypack/specfun.hpp>
#include <hypack/volume.hpp>

#include "oracles.hpp"

using hypack::beta_of_t;
using hypack::parse_symbol;
using hypack::theta_of_beta;
using hypack::vol3_orthoscheme;
using hypack::vol5_truncated;

namespace {

// largest angle of the family: the tetrahedron [5,3,beta] degenerates here
const double kBetaEuclidean = std::asin(1.0 / (2.0 * std::sin(M_PI / 5.0)));

}  // namespace

TEST_CASE("beta_of_t at the distinguished arguments") {
    CHECK(beta_of_t(M_PI / 4.0) == doctest::Approx(M_PI / 4.0).epsilon(1e-12));
    CHECK(beta_of_t(2.0 * M_PI / 5.0) ==
          doctest::Approx(3.0 * M_PI / 10.0).epsilon(1e-13));
    // frozen: arctan sqrt(5/3)
    CHECK(beta_of_t(M_PI / 3.0) == doctest::Approx(0.9117382909684876).epsilon(1e-14));
    CHECK(beta_of_t(M_PI / 3.0) ==
          doctest::Approx(std::atan(std::sqrt(5.0 / 3.0))).epsilon(1e-15));
}

TEST_CASE("beta_of_t domain errors") {
    CHECK_THROWS_AS(beta_of_t(0.1), std::domain_error);  // cot^2 = 99
    CHECK_THROWS_AS(beta_of_t(0.0), std::domain_error);
}

TEST_CASE("theta_of_beta at the upper endpoint angle") {
    // at beta = 3pi/10 the ingredients collapse to sin(pi/10) and cos(pi/10)
    const double beta = 3.0 * M_PI / 10.0;
    const double s = std::sin(M_PI / 5.0) * std::sin(beta);
    CHECK(std::sqrt(1.0 - 4.0 * s * s) ==
          doctest::Approx(std::sin(M_PI / 10.0)).epsilon(1e-12));
    CHECK(2.0 * std::cos(M_PI / 5.0) * std::cos(beta) ==
          doctest::Approx(std::cos(M_PI / 10.0)).epsilon(1e-12));
    CHECK(theta_of_beta(beta) == doctest::Approx(M_PI / 10.0).epsilon(1e-13));
}

TEST_CASE("theta_of_beta elsewhere") {
    // frozen double, plus an independent closed form:
    // theta(pi/4) = arctan( sqrt(2 (sqrt 5 - 1)) / (1 + sqrt 5) )
    const double closed =
        std::atan(std::sqrt(2.0 * (std::sqrt(5.0) - 1.0)) / (1.0 + std::sqrt(5.0)));
    CHECK(theta_of_beta(M_PI / 4.0) ==
          doctest::Approx(0.4522784471511907).epsilon(1e-14));
    CHECK(theta_of_beta(M_PI / 4.0) == doctest::Approx(closed).epsilon(1e-14));

    // vanishing radicand: theta = 0 at the degeneration angle
    CHECK(std::fabs(theta_of_beta(kBetaEuclidean)) <= 1e-7);

    CHECK_THROWS_AS(theta_of_beta(1.4), std::domain_error);  // radicand < 0
    CHECK_THROWS_AS(theta_of_beta(0.0), std::domain_error);
    CHECK_THROWS_AS(theta_of_beta(M_PI / 2.0), std::domain_error);
}

TEST_CASE("vol3_orthoscheme specializes to the seven-term [5,3,beta] formula") {
    // literal transcription with pi/6 = pi/2 - pi/3 and the display form of
    // theta(t), against the general-angle implementation
    const auto literal = [](double beta) {
        const double th = theta_of_beta(beta);
        const double p5 = M_PI / 5.0, p6 = M_PI / 6.0, p2 = M_PI / 2.0;
        using hypack::lobachevsky;
        return 0.25 * (lobachevsky(p5 + th) - lobachevsky(p5 - th) -
                       lobachevsky(p6 + th) + lobachevsky(p6 - th) +
                       lobachevsky(beta + th) - lobachevsky(beta - th) +
                       2.0 * lobachevsky(p2 - th));
    };
    std::mt19937 rng(31u);
    std::uniform_real_distribution<double> dist(0.05, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double beta = dist(rng);
        const double general = vol3_orthoscheme(M_PI / 5.0, M_PI / 3.0, beta);
        CHECK(std::fabs(general - literal(beta)) <= 1e-13);
    }
}

TEST_CASE("vol3_orthoscheme frozen values and the Schlafli-differential oracle") {
    const double at_top = vol3_orthoscheme(M_PI / 5.0, M_PI / 3.0,
                                           beta_of_t(2.0 * M_PI / 5.0));
    CHECK(at_top == doctest::Approx(0.005789141162616002).epsilon(1e-11));
    CHECK(std::fabs(at_top - oracle::vol3_schlafli_differential(
                                 beta_of_t(2.0 * M_PI / 5.0))) <= 1e-9);

    const double at_pi3 = vol3_orthoscheme(M_PI / 5.0, M_PI / 3.0, beta_of_t(M_PI / 3.0));
    CHECK(at_pi3 == doctest::Approx(0.00992512425103688).epsilon(1e-11));
    CHECK(std::fabs(at_pi3 -
                    oracle::vol3_schlafli_differential(beta_of_t(M_PI / 3.0))) <= 1e-9);

    CHECK(vol3_orthoscheme(M_PI / 5.0, M_PI / 3.0, M_PI / 4.0) ==
          doctest::Approx(0.035885063339423456).epsilon(1e-11));
}

TEST_CASE("vol3_orthoscheme degenerates to zero volume at theta = 0") {
    CHECK(std::fabs(vol3_orthoscheme(M_PI / 5.0, M_PI / 3.0, kBetaEuclidean)) <= 1e-10);
}

TEST_CASE("vol3_orthoscheme is symmetric in the outer angles") {
    std::mt19937 rng(32u);
    std::uniform_real_distribution<double> dist(0.3, 0.7);
    for (int i = 0; i < 50; ++i) {
        const double a1 = dist(rng), a3 = dist(rng);
        const double forward = vol3_orthoscheme(a1, M_PI / 3.0, a3);
        const double swapped = vol3_orthoscheme(a3, M_PI / 3.0, a1);
        CHECK(std::fabs(forward - swapped) <= 1e-15);
    }
}

TEST_CASE("vol3_orthoscheme rejects non-compact data") {
    CHECK_THROWS_AS(vol3_orthoscheme(1.0, 1.5, 1.0), std::domain_error);
    CHECK_THROWS_AS(vol3_orthoscheme(-0.1, 1.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(vol3_orthoscheme(0.5, 1.0, M_PI / 2.0), std::domain_error);
}

TEST_CASE("vol4_base") {
    CHECK(hypack::vol4_base() == doctest::Approx(0.00091385).epsilon(5e-9));
    CHECK(std::fabs(10800.0 * hypack::vol4_base() - M_PI * M_PI) <= 4e-15);
    CHECK(hypack::vol4_base() > 0.0);
}

TEST_CASE("vol5_truncated reproduces the published volumes") {
    const auto v0 = vol5_truncated(parse_symbol("[5,3,3,3,3]"));
    CHECK(std::fabs(v0.value - 0.00076730) <= 1e-7);
    CHECK(v0.value == doctest::Approx(0.0007672961801030737).epsilon(1e-10));

    const auto v2 = vol5_truncated(parse_symbol("[5,3,3,3,4]"));
    CHECK(std::fabs(v2.value - 0.00198469) <= 1e-7);
    CHECK(v2.value == doctest::Approx(0.0019846964303116285).epsilon(1e-10));

    for (const auto& v : {v0, v2}) {
        CHECK(v.value == v.integral_part + v.constant_part);  // exact by construction
        CHECK(v.constant_part == hypack::kZeta3 / 3200.0);
        CHECK(v.estimated_error <= hypack::QuadratureSettings{}.abs_tol);
        CHECK(v.integral_part > 0.0);
    }
}

TEST_CASE("vol5 over the empty range is exactly the constant term") {
    const auto v = hypack::vol5_truncated_from(2.0 * M_PI / 5.0);
    CHECK(v.integral_part == 0.0);
    CHECK(v.value == hypack::kZeta3 / 3200.0);
    CHECK(v.estimated_error == 0.0);
}

TEST_CASE("vol5_lower_bound is pi over the last weight") {
    CHECK(hypack::vol5_lower_bound(parse_symbol("[5,3,3,3,3]")) == M_PI / 3.0);
    CHECK(hypack::vol5_lower_bound(parse_symbol("[5,3,3,3,4]")) == M_PI / 4.0);
    CHECK(hypack::vol5_lower_bound(parse_symbol("[5,3,3,3,3^{1,1}]")) == M_PI / 3.0);
    CHECK_THROWS_AS(hypack::vol5_lower_bound(parse_symbol("[3,3,3,3,3]")),
                    std::invalid_argument);
}

TEST_CASE("vol5_truncated rejects unsupported symbols") {
    CHECK_THROWS_AS(vol5_truncated(parse_symbol("[5,3]")), std::invalid_argument);
    CHECK_THROWS_AS(vol5_truncated(parse_symbol("[4,3,3,3,3]")), std::invalid_argument);
    CHECK_THROWS_AS(vol5_truncated(parse_symbol("[5,3,3,3,5]")), std::invalid_argument);
    CHECK_THROWS_AS(vol5_truncated(parse_symbol("[5,3,3,3,3,3]")), std::invalid_argument);
}

TEST_CASE("vol5 quadrature is stable under tolerance halving") {
    for (const char* text : {"[5,3,3,3,3]", "[5,3,3,3,4]"}) {
        const auto s = parse_symbol(text);
        hypack::QuadratureSettings coarse, fine;
        coarse.abs_tol = 1e-10;
        fine.abs_tol = 5e-11;
        const double a = vol5_truncated(s, coarse).value;
        const double b = vol5_truncated(s, fine).value;
        CHECK(std::fabs(a - b) <= 1e-10);
    }
}

TEST_CASE("vol5 integrand is finite and positive at every node") {
    for (const char* text : {"[5,3,3,3,3]", "[5,3,3,3,4]"}) {
        const auto s = parse_symbol(text);
        const double lower = M_PI / s.weights.back();
        const double upper = 2.0 * M_PI / 5.0;

        // instrumented copy of the vol5 integrand, run through the same
        // deterministic engine at the same settings, so the nodes recorded
        // here are exactly the nodes vol5_truncated evaluates
        std::vector<double> nodes;
        const auto recording = [&nodes](double t) {
            const double v =
                0.25 * hypack::vol3_orthoscheme(M_PI / 5.0, M_PI / 3.0, beta_of_t(t));
            nodes.push_back(v);
            return v;
        };
        const auto r = hypack::integrate_adaptive(recording, lower, upper);
        CHECK(r.value == vol5_truncated(s).integral_part);

        REQUIRE(nodes.size() >= 15);
        for (double v : nodes) {
            CHECK(std::isfinite(v));
            CHECK(v > 0.0);
        }

        // the Gauss-Kronrod nodes are interior; check the closed endpoints too
        for (double t : {lower, upper}) {
            const double v =
                0.25 * hypack::vol3_orthoscheme(M_PI / 5.0, M_PI / 3.0, beta_of_t(t));
            CHECK(std::isfinite(v));
            CHECK(v > 0.0);
        }
    }
}

TEST_CASE("vol5 propagates non-convergence with the best estimate attached") {
    hypack::QuadratureSettings hopeless;
    hopeless.abs_tol = 1e-30;
    hopeless.max_subdivisions = 1;
    const double reference = vol5_truncated(parse_symbol("[5,3,3,3,3]")).value;
    try {
        vol5_truncated(parse_symbol("[5,3,3,3,3]"), hopeless);
        FAIL("expected QuadratureError");
    } catch (const hypack::QuadratureError& e) {
        CHECK(std::fabs(e.best().value + hypack::kZeta3 / 3200.0 - reference) <= 1e-6);
    }
}
