#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "nliouville/solutions.hpp"
#include "oracles.hpp"

using namespace nliouville;

TEST_SUITE("solutions") {

TEST_CASE("radial values at pinned points") {
    const RadialSolution flat2(Problem(2, 0.0), 1.0);
    CHECK(flat2.value(0.0) == doctest::Approx(std::log(8.0)).epsilon(1e-15));
    CHECK(flat2.value(1.0) == doctest::Approx(std::log(2.0)).epsilon(1e-15));

    const RadialSolution flat3(Problem(3, 0.0), 1.0);
    CHECK(flat3.value(1.0) == doctest::Approx(std::log(60.75 / 8.0)).epsilon(1e-15));

    CHECK_THROWS_AS(flat2.value(-1.0), DomainError);
    CHECK_THROWS_AS(flat2.eval(0.0), DomainError);
    CHECK_THROWS_AS(RadialSolution(Problem(2, 0.0), 0.0), DomainError);
}

TEST_CASE("large-radius tail approaches its logarithmic limit") {
    // u + 8 log r -> log 32 for the quartic-weight planar-dimension member
    const RadialSolution sol(Problem(2, 1.0), 1.0);
    const double r = 1e8;
    CHECK(sol.value(r) + 8.0 * std::log(r) ==
          doctest::Approx(std::log(32.0)).epsilon(1e-13));
}

TEST_CASE("closed-form laplacian balances the weighted density") {
    // spot value: -e^{u(1)} = -2 in the regular planar case
    const RadialSolution flat2(Problem(2, 0.0), 1.0);
    CHECK(flat2.nlaplacian(1.0) == doctest::Approx(-2.0).epsilon(1e-14));

    for (int n : {2, 3, 4})
        for (double alpha : {-0.9, -0.5, 0.0, 0.5, 2.0})
            for (double lambda : {0.5, 1.0, 3.0}) {
                const RadialSolution sol(Problem(n, alpha), lambda);
                for (double r : log_grid(1e-3, 1e3, 61).points) {
                    const double w = sol.weighted_density(r);
                    const double rel = std::abs(sol.nlaplacian(r) + w) / (1.0 + w);
                    CHECK(rel < 1e-9);
                }
            }
}

TEST_CASE("radial derivatives agree with a finite-difference oracle") {
    const RadialSolution sol(Problem(3, -0.5), 2.0);
    const auto u_of = [&sol](double r) { return sol.value(r); };
    for (double r : {0.3, 0.7, 1.9}) {
        const auto e = sol.eval(r);
        CHECK(e.du == doctest::Approx(oracle::deriv1(u_of, r, 1e-6 * r)).epsilon(1e-8));
        CHECK(e.d2u == doctest::Approx(oracle::deriv2(u_of, r, 1e-4 * r)).epsilon(1e-6));
    }

    // second-order convergence of the central differences toward the closed forms
    const auto du_err = [&](double h) {
        return std::abs(oracle::deriv1(u_of, 0.7, h) - sol.eval(0.7).du);
    };
    const double order = oracle::convergence_order(du_err, 1e-2);
    CHECK(order > 1.9);
    CHECK(order < 2.1);
}

TEST_CASE("hand residual check at an off-lattice member") {
    const RadialSolution sol(Problem(3, -0.5), 2.0);
    const double w = sol.weighted_density(0.7);
    CHECK(std::abs(sol.nlaplacian(0.7) + w) < 1e-10 * (1.0 + w));
}

TEST_CASE("scaling covariance of the radial family") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> alpha_of(-0.8, 2.0), lambda_of(0.2, 4.0),
        radius_of(-2.0, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + trial % 3;
        const double alpha = alpha_of(rng);
        const double lambda = lambda_of(rng);
        const double r = std::pow(10.0, radius_of(rng));
        const Problem problem(n, alpha);
        const RadialSolution scaled(problem, lambda), base(problem, 1.0);
        const double shift = std::pow(lambda, (n - 1.0) / (n * (alpha + 1.0)));
        const double expected =
            base.value(shift * r) + n * (alpha + 1.0) * std::log(shift);
        CHECK(scaled.value(r) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("planar family matches the radial one for zero shift") {
    // lambda_planar^2 = lambda_radial
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (double alpha : {-0.5, 0.0, 0.5, 1.0}) {
        const double lp = 1.7;
        const PlanarSolution planar(alpha, lp);
        const RadialSolution radial(Problem(2, alpha), lp * lp);
        for (int trial = 0; trial < 20; ++trial) {
            const std::complex<double> z(unif(rng) * 3.0, unif(rng) * 3.0);
            if (std::abs(z) < 1e-3)
                continue;
            CHECK(planar.value(z) == doctest::Approx(radial.value(std::abs(z))).epsilon(1e-12));
        }
    }
}

TEST_CASE("planar construction rules") {
    CHECK_NOTHROW(PlanarSolution(2.0, 1.0, {1.0, 1.0}));
    CHECK_NOTHROW(PlanarSolution(0.0, 1.0, {0.3, 0.0}));
    CHECK_NOTHROW(PlanarSolution(0.5, 1.0));
    CHECK_THROWS_AS(PlanarSolution(0.5, 1.0, {1.0, 0.0}), DomainError);
    CHECK_THROWS_AS(PlanarSolution(-0.5, 1.0, {1.0, 0.0}), DomainError);
    CHECK_THROWS_AS(PlanarSolution(-1.0, 1.0), DomainError);
    CHECK_THROWS_AS(PlanarSolution(0.0, -1.0), DomainError);
}

TEST_CASE("planar gradient and hessian agree with finite differences") {
    const PlanarSolution sol(1.0, 1.0, {1.0, 1.0});
    const std::complex<double> z(0.63, -0.41);
    const auto u_at = [&sol](double x, double y) { return sol.value({x, y}); };
    const double h = 1e-5;
    const auto grad = sol.gradient(z);
    CHECK(grad[0] == doctest::Approx((u_at(z.real() + h, z.imag()) -
                                      u_at(z.real() - h, z.imag())) /
                                     (2 * h))
                         .epsilon(1e-7));
    CHECK(grad[1] == doctest::Approx((u_at(z.real(), z.imag() + h) -
                                      u_at(z.real(), z.imag() - h)) /
                                     (2 * h))
                         .epsilon(1e-7));
    const auto hess = sol.hessian(z);
    ScalarField field = u_field(sol);
    Vec xv(2);
    xv << z.real(), z.imag();
    const Mat fd = fd_hessian(ScalarField{field.value, field.gradient, {}}, xv, 1e-5);
    CHECK((hess - fd).norm() < 1e-6);
}

TEST_CASE("planar equation residual vanishes at second order in the step") {
    const PlanarSolution shifted(1.0, 1.0, {1.0, 1.0});
    const std::complex<double> z(0.5, 0.0);
    const auto err = [&](double h) { return residual_planar(shifted, z, h).value; };
    const double order = oracle::convergence_order(err, 2e-2);
    CHECK(order > 1.9);
    CHECK(order < 2.1);
}

TEST_CASE("planar residual pinned examples") {
    // Richardson-extrapolated residual at the regular member
    const PlanarSolution regular(0.0, 1.0);
    CHECK(residual_planar(regular, {1.0, 0.0}, 1e-3).extrapolated < 1e-8);

    // plain five-point residual for a steep member
    const PlanarSolution steep(2.0, 3.0);
    CHECK(residual_planar(steep, {0.0, 2.0}, 1e-3).value < 1e-6);

    CHECK_THROWS_AS(residual_planar(regular, {0.0, 0.0}, 1e-3), DomainError);
    CHECK_THROWS_AS(residual_planar(regular, {1.0, 0.0}, 0.0), DomainError);
}

TEST_CASE("asymptotic defects") {
    const RadialSolution flat2(Problem(2, 0.0), 1.0);
    const auto d = flat2.check_asymptotics(1e6);
    CHECK(d.slope_defect < 1e-10);
    CHECK(std::abs(d.log_defect) < 1e-10);

    // r u'(r) -> -4: the slope itself
    CHECK(flat2.eval(1e6).du * 1e6 == doctest::Approx(-4.0).epsilon(1e-10));

    CHECK(Problem(3, 0.0).constants().slope == doctest::Approx(4.5));
}

TEST_CASE("slope defect follows its exact tail formula") {
    // the defect of r u' + slope is slope/(1 + lambda r^g) for every member;
    // this pins the closed-form derivative at extreme radii
    for (int n : {2, 3, 4})
        for (double alpha : {-0.9, 0.0, 2.0})
            for (double lambda : {0.5, 3.0}) {
                const Problem problem(n, alpha);
                const RadialSolution sol(problem, lambda);
                const double g = problem.profile_exponent();
                for (double r : {1e4, 1e6}) {
                    const double expected =
                        problem.constants().slope / (1.0 + lambda * std::pow(r, g));
                    const double defect = sol.check_asymptotics(r).slope_defect;
                    CHECK(defect == doctest::Approx(expected).epsilon(1e-9));
                }
            }
}

TEST_CASE("field factories expose consistent derivatives") {
    const RadialSolution sol(Problem(3, 0.5), 1.0);
    const ScalarField v = v_field(sol);
    Vec x(3);
    x << 0.8, -0.3, 0.5;
    CHECK(v.value(x) == doctest::Approx(std::exp(-sol.value(x.norm()) / 3.0)).epsilon(1e-14));
    const Vec grad_fd = fd_gradient(v, x, 1e-6);
    CHECK((v.gradient(x) - grad_fd).norm() < 1e-8);
    const Mat hess_fd = fd_hessian(ScalarField{v.value, v.gradient, {}}, x, 1e-5);
    CHECK((v.hessian(x) - hess_fd).norm() < 1e-7);
}

}  // TEST_SUITE
