#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "nliouville/holo2d.hpp"
#include "oracles.hpp"

using namespace nliouville;

TEST_SUITE("holo2d") {

TEST_CASE("invariant vanishes at pinned probes") {
    const PlanarSolution shifted(1.0, 1.0, {1.0, 0.0});
    CHECK(std::abs(holomorphic_invariant(shifted, {0.7, 0.2}).invariant) < 1e-8);

    const PlanarSolution regular(0.0, 2.0);
    CHECK(std::abs(holomorphic_invariant(regular, {1.0, 0.0}).invariant) < 1e-8);

    const PlanarSolution quartic(2.0, 1.0);
    for (int j = 0; j < 8; ++j) {
        const auto d = holomorphic_invariant(quartic, std::polar(3.0, 0.1 + j * 0.785398));
        CHECK(std::abs(d.invariant) < 1e-7);
    }

    CHECK_THROWS_AS(holomorphic_invariant(regular, {0.0, 0.0}), DomainError);
}

TEST_CASE("invariant vanishes on random probes across the planar sweep") {
    std::mt19937 rng(314);
    std::uniform_real_distribution<double> log_r(std::log(0.2), std::log(5.0)),
        angle(0.0, 2.0 * M_PI);
    for (double alpha : {0.0, 0.5, 1.0, 1.5, 2.0})
        for (double lambda : {0.5, 3.0}) {
            const bool integer = PlanarSolution::integer_weight(alpha);
            const PlanarSolution sol(alpha, lambda,
                                     integer ? std::complex<double>{1.0, 0.5}
                                             : std::complex<double>{0.0, 0.0});
            for (int trial = 0; trial < 50; ++trial) {
                const std::complex<double> z = std::polar(std::exp(log_r(rng)), angle(rng));
                CHECK(std::abs(holomorphic_invariant(sol, z).invariant) < 1e-7);
            }
        }
}

TEST_CASE("finite-difference route agrees at second order") {
    const PlanarSolution sol(1.0, 1.0, {0.5, -0.3});
    const std::complex<double> z(0.9, 0.6);
    const auto analytic = holomorphic_invariant(sol, z).invariant;
    const auto err = [&](double h) {
        return std::abs(holomorphic_invariant_fd(sol, z, h).invariant - analytic);
    };
    const double order = oracle::convergence_order(err, 1e-2);
    CHECK(order > 1.9);
    CHECK(order < 2.1);
    CHECK(err(1e-4) < 1e-5);

    CHECK_THROWS_AS(holomorphic_invariant_fd(sol, {0.0, 0.0}, 1e-3), DomainError);
    CHECK_THROWS_AS(holomorphic_invariant_fd(sol, z, 0.0), DomainError);
}

TEST_CASE("invariant survives the principal-branch seam") {
    // shift-free members depend only on |z|, so nothing may jump across the
    // negative real axis even though the complex powers are branch-cut there
    for (double alpha : {0.5, 1.5}) {
        const PlanarSolution sol(alpha, 1.0);
        for (const std::complex<double> z :
             {std::complex<double>(-1.3, 0.0), std::complex<double>(-1.3, 1e-12),
              std::complex<double>(-1.3, -1e-12), std::complex<double>(-0.4, 0.0)}) {
            CHECK(std::abs(holomorphic_invariant(sol, z).invariant) < 1e-7);
            CHECK(std::isfinite(sol.value(z)));
        }
    }
}

TEST_CASE("methods are tagged") {
    const PlanarSolution sol(0.0, 1.0);
    CHECK(holomorphic_invariant(sol, {1.0, 0.0}).method ==
          ComplexDiagnostic::Method::analytic);
    CHECK(holomorphic_invariant_fd(sol, {1.0, 0.0}, 1e-4).method ==
          ComplexDiagnostic::Method::finite_difference);
}

TEST_CASE("origin gradient decay exponents") {
    std::vector<double> radii;
    for (int j = 0; j < 12; ++j)
        radii.push_back(std::pow(10.0, -1.0 - 1.5 * j / 11.0));

    // shifted integer member decays exactly at the weight rate
    const double shifted = origin_gradient_decay(PlanarSolution(1.0, 1.0, {1.0, 0.0}), radii);
    CHECK(shifted == doctest::Approx(1.0).epsilon(0.02));

    // shift-free members decay faster: exponent 2 alpha + 1
    const double half = origin_gradient_decay(PlanarSolution(0.5, 1.0), radii);
    CHECK(half >= 0.45);
    CHECK(half == doctest::Approx(2.0).epsilon(0.02));

    const double regular = origin_gradient_decay(PlanarSolution(0.0, 1.0), radii);
    CHECK(regular == doctest::Approx(1.0).epsilon(0.02));

    CHECK_THROWS_AS(origin_gradient_decay(PlanarSolution(-0.5, 1.0), radii), DomainError);
    const std::vector<double> out_of_range = {0.5, 0.2};
    CHECK_THROWS_AS(origin_gradient_decay(PlanarSolution(1.0, 1.0), out_of_range), DomainError);
    const std::vector<double> too_short = {0.05};
    CHECK_THROWS_AS(origin_gradient_decay(PlanarSolution(1.0, 1.0), too_short), DomainError);
}

TEST_CASE("diagnostics stay finite away from the origin") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> unif(-4.0, 4.0);
    const PlanarSolution sol(2.0, 0.5, {1.0, 1.0});
    for (int trial = 0; trial < 40; ++trial) {
        const std::complex<double> z(unif(rng), unif(rng));
        if (std::abs(z) < 1e-2)
            continue;
        const auto d = holomorphic_invariant(sol, z);
        CHECK(std::isfinite(d.invariant.real()));
        CHECK(std::isfinite(d.invariant.imag()));
    }
}

}  // TEST_SUITE
