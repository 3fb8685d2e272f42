#include <doctest.h>

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "nliouville/geometry.hpp"
#include "oracles.hpp"

using namespace nliouville;

namespace {

Vec point2(double x, double y) {
    Vec v(2);
    v << x, y;
    return v;
}

Vec point3(double x, double y, double z) {
    Vec v(3);
    v << x, y, z;
    return v;
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("flat metric has no connection coefficients") {
    const ConformalMetric flat(3, 0.0);
    const auto gamma = flat.christoffel(point3(0.3, -1.2, 0.7));
    for (const Mat& g : gamma)
        CHECK(g.norm() == 0.0);
}

TEST_CASE("connection coefficients at a pinned point") {
    const ConformalMetric metric(2, 1.0);
    const auto gamma = metric.christoffel(point2(1.0, 0.0));
    CHECK(gamma[0](0, 0) == doctest::Approx(1.0));
    CHECK(gamma[0](1, 1) == doctest::Approx(-1.0));
    CHECK(gamma[1](0, 1) == doctest::Approx(1.0));
    CHECK(gamma[1](1, 0) == doctest::Approx(1.0));
    CHECK(gamma[0](0, 1) == doctest::Approx(0.0));
    CHECK(gamma[0](1, 0) == doctest::Approx(0.0));
    CHECK(gamma[1](0, 0) == doctest::Approx(0.0));
    CHECK(gamma[1](1, 1) == doctest::Approx(0.0));

    CHECK_THROWS_AS(metric.christoffel(point2(0.0, 0.0)), DomainError);
}

TEST_CASE("connection symmetry in the lower indices") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> unif(-2.0, 2.0);
    const ConformalMetric metric(3, -0.4);
    for (int trial = 0; trial < 10; ++trial) {
        const Vec x = point3(unif(rng), unif(rng), unif(rng));
        if (x.norm() < 0.1)
            continue;
        for (const Mat& g : metric.christoffel(x))
            CHECK((g - g.transpose()).norm() < 1e-14);
    }
}

TEST_CASE("connection matches metric-derivative finite differences") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> unif(0.4, 1.8);
    for (int n : {2, 3})
        for (double alpha : {-0.5, 0.8}) {
            const ConformalMetric metric(n, alpha);
            Vec x(n);
            for (int i = 0; i < n; ++i)
                x[i] = unif(rng);
            const auto closed = metric.christoffel(x);
            const auto fd =
                oracle::christoffel_from_metric(n, alpha, x, 1e-5 * (1.0 + x.norm()));
            for (int i = 0; i < n; ++i)
                CHECK((closed[i] - fd[i]).norm() < 1e-7);
        }
}

TEST_CASE("ricci tensor of the planar metric vanishes") {
    const ConformalMetric metric(2, 1.3);
    CHECK(metric.ricci(point2(0.4, -0.9)).matrix.norm() < 1e-15);
}

TEST_CASE("ricci pinned values and sign change") {
    const ConformalMetric negative_weight(3, -0.5);
    const auto psd = negative_weight.ricci(point3(1.0, 0.0, 0.0));
    CHECK(psd.tangential_eigenvalue == doctest::Approx(0.75));
    Eigen::SelfAdjointEigenSolver<Mat> eig_psd(psd.matrix);
    CHECK(eig_psd.eigenvalues().minCoeff() > -1e-14);

    const ConformalMetric positive_weight(3, 1.0);
    const auto indefinite = positive_weight.ricci(point3(0.0, 2.0, 0.0));
    CHECK(indefinite.tangential_eigenvalue == doctest::Approx(-0.75));
    Eigen::SelfAdjointEigenSolver<Mat> eig_neg(indefinite.matrix);
    CHECK(eig_neg.eigenvalues().minCoeff() < -0.7);
}

TEST_CASE("ricci is semidefinite exactly for nonpositive weights") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> unif(-2.0, 2.0);
    for (double alpha : {-0.9, -0.3, 0.0, 0.4, 1.5}) {
        const ConformalMetric metric(3, alpha);
        double min_eig = 1e300;
        for (int trial = 0; trial < 12; ++trial) {
            const Vec x = point3(unif(rng), unif(rng), unif(rng));
            if (x.norm() < 0.2)
                continue;
            Eigen::SelfAdjointEigenSolver<Mat> eig(metric.ricci(x).matrix);
            min_eig = std::min(min_eig, eig.eigenvalues().minCoeff());
        }
        if (alpha <= 0.0)
            CHECK(min_eig > -1e-12);
        else
            CHECK(min_eig < -1e-3);
    }
}

TEST_CASE("radial direction spans the ricci kernel") {
    const ConformalMetric metric(3, 0.7);
    const Vec x = point3(0.9, -0.2, 1.4);
    CHECK((metric.ricci(x).matrix * x).norm() < 1e-13);
}

TEST_CASE("ricci matches the conformal coordinate formula") {
    for (int n : {2, 3})
        for (double alpha : {-0.6, 0.9}) {
            const ConformalMetric metric(n, alpha);
            Vec x(n);
            x.setConstant(0.8);
            x[0] = 1.1;
            // second differences balance truncation against rounding near 1e-4
            const Mat fd = oracle::ricci_conformal(n, alpha, x, 1e-4 * (1.0 + x.norm()));
            CHECK((metric.ricci(x).matrix - fd).norm() < 1e-7);
        }
}

TEST_CASE("flat g-hessian reduces to the plain hessian") {
    const ConformalMetric flat(2, 0.0);
    ScalarField f;
    f.value = [](const Vec& x) { return x[0] * x[0] * x[1] + 2.0 * x[1]; };
    f.gradient = [](const Vec& x) {
        Vec g(2);
        g << 2.0 * x[0] * x[1], x[0] * x[0] + 2.0;
        return g;
    };
    f.hessian = [](const Vec& x) {
        Mat h(2, 2);
        h << 2.0 * x[1], 2.0 * x[0], 2.0 * x[0], 0.0;
        return h;
    };
    const Vec x = point2(0.7, -0.4);
    CHECK((flat.g_hessian(f, x) - f.hessian(x)).norm() < 1e-14);
}

TEST_CASE("g-hessian equals the covariant finite-difference hessian") {
    // quadratic field |x|^2 under a weighted metric
    ScalarField f;
    f.value = [](const Vec& x) { return x.squaredNorm(); };
    f.gradient = [](const Vec& x) { return Vec(2.0 * x); };
    f.hessian = [](const Vec& x) { return Mat(2.0 * Mat::Identity(x.size(), x.size())); };

    for (double alpha : {-0.5, 0.6, 1.0}) {
        const ConformalMetric metric(2, alpha);
        const Vec x = point2(1.0, 0.0);
        const Mat closed = metric.g_hessian(f, x);
        // the quadratic has no truncation term, so a large step leaves
        // rounding as the only error source
        const Mat fd = oracle::covariant_hessian(metric, f.value, x, 1e-3);
        CHECK((closed - fd).norm() < 1e-8);
    }
}

TEST_CASE("g-hessian of radial fields commutes with rotations") {
    const ConformalMetric metric(2, 0.8);
    const ScalarField f = radial_scalar_field([](double r) {
        return std::array<double, 3>{std::log(1.0 + r * r), 2.0 * r / (1.0 + r * r),
                                     2.0 * (1.0 - r * r) / ((1.0 + r * r) * (1.0 + r * r))};
    });
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    const Vec x = point2(0.9, 0.4);
    const Mat base = metric.g_hessian(f, x);
    for (int trial = 0; trial < 5; ++trial) {
        const double t = angle(rng);
        Mat rot(2, 2);
        rot << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
        const Mat rotated = metric.g_hessian(f, Vec(rot * x));
        CHECK((rotated - rot * base * rot.transpose()).norm() < 1e-12);
    }
}

TEST_CASE("g-hessian finite-difference fallback for hessian-free fields") {
    const ConformalMetric metric(2, 0.5);
    ScalarField f;
    f.value = [](const Vec& x) { return std::sin(x[0]) * std::cosh(x[1]); };
    f.gradient = [](const Vec& x) {
        Vec g(2);
        g << std::cos(x[0]) * std::cosh(x[1]), std::sin(x[0]) * std::sinh(x[1]);
        return g;
    };
    ScalarField with_hessian = f;
    with_hessian.hessian = [](const Vec& x) {
        Mat h(2, 2);
        h << -std::sin(x[0]) * std::cosh(x[1]), std::cos(x[0]) * std::sinh(x[1]),
            std::cos(x[0]) * std::sinh(x[1]), std::sin(x[0]) * std::cosh(x[1]);
        return h;
    };
    const Vec x = point2(0.6, -0.3);
    CHECK((metric.g_hessian(f, x) - metric.g_hessian(with_hessian, x)).norm() < 1e-6);
}

TEST_CASE("tensor norms and the laplace-beltrami reduction") {
    const ConformalMetric metric(2, 0.9);
    const Vec x = point2(1.2, -0.5);
    // |g|_g^2 = dimension
    CHECK(metric.tensor_norm_sq(metric.components(x), x) == doctest::Approx(2.0));

    // planar conformal laplacian is the flat one over the conformal factor
    ScalarField f;
    f.value = [](const Vec& y) { return y[0] * y[0] - y[1] * y[1] + 3.0 * y[0]; };
    f.gradient = [](const Vec& y) {
        Vec g(2);
        g << 2.0 * y[0] + 3.0, -2.0 * y[1];
        return g;
    };
    f.hessian = [](const Vec&) {
        Mat h(2, 2);
        h << 2.0, 0.0, 0.0, -2.0;
        return h;
    };
    CHECK(metric.laplace_beltrami(f, x) == doctest::Approx(0.0).epsilon(1e-14));
}

}  // TEST_SUITE
