#include "nliouville/harmonics.hpp"

#include <cmath>
#include <complex>
#include <vector>

namespace nliouville {

namespace {

long long binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    long long out = 1;
    for (int j = 1; j <= k; ++j)
        out = out * (n - k + j) / j;
    return out;
}

/// Sparse monomial representation sum_m coef_m x^ex y^ey z^ez.
struct Monomial {
    double coef;
    int ex[3];
};

double mono_eval(const Monomial& m, const Vec& x, int dx, int dy, int dz) {
    int e[3] = {m.ex[0], m.ex[1], m.ex[2]};
    int d[3] = {dx, dy, dz};
    double c = m.coef;
    for (int axis = 0; axis < 3; ++axis) {
        for (int rep = 0; rep < d[axis]; ++rep) {
            c *= e[axis];
            e[axis] -= 1;
        }
        if (e[axis] < 0)
            return 0.0;
    }
    if (c == 0.0)
        return 0.0;
    double out = c;
    for (int axis = 0; axis < 3; ++axis)
        out *= std::pow(x[axis], e[axis]);
    return out;
}

ScalarField monomial_field(std::vector<Monomial> terms) {
    ScalarField f;
    f.value = [terms](const Vec& x) {
        double out = 0.0;
        for (const auto& m : terms)
            out += mono_eval(m, x, 0, 0, 0);
        return out;
    };
    f.gradient = [terms](const Vec& x) {
        Vec g = Vec::Zero(3);
        for (const auto& m : terms)
            for (int i = 0; i < 3; ++i)
                g[i] += mono_eval(m, x, i == 0, i == 1, i == 2);
        return g;
    };
    f.hessian = [terms](const Vec& x) {
        Mat h = Mat::Zero(3, 3);
        for (const auto& m : terms)
            for (int i = 0; i < 3; ++i)
                for (int j = i; j < 3; ++j) {
                    const double v =
                        mono_eval(m, x, (i == 0) + (j == 0), (i == 1) + (j == 1),
                                  (i == 2) + (j == 2));
                    h(i, j) += v;
                    if (i != j)
                        h(j, i) += v;
                }
        return h;
    };
    return f;
}

// Real solid harmonics in R^3 through degree 4, as monomial lists.
// Scaling is immaterial: the harmonic spaces are used as linear bases.
const std::vector<std::vector<Monomial>>& solid_harmonics_3d(int k) {
    static const std::vector<std::vector<std::vector<Monomial>>> table = {
        // k = 0
        {{{1, {0, 0, 0}}}},
        // k = 1
        {{{1, {1, 0, 0}}}, {{1, {0, 1, 0}}}, {{1, {0, 0, 1}}}},
        // k = 2
        {{{1, {1, 1, 0}}},
         {{1, {0, 1, 1}}},
         {{1, {1, 0, 1}}},
         {{1, {2, 0, 0}}, {-1, {0, 2, 0}}},
         {{2, {0, 0, 2}}, {-1, {2, 0, 0}}, {-1, {0, 2, 0}}}},
        // k = 3
        {{{3, {2, 1, 0}}, {-1, {0, 3, 0}}},
         {{1, {1, 1, 1}}},
         {{4, {0, 1, 2}}, {-1, {2, 1, 0}}, {-1, {0, 3, 0}}},
         {{2, {0, 0, 3}}, {-3, {2, 0, 1}}, {-3, {0, 2, 1}}},
         {{4, {1, 0, 2}}, {-1, {3, 0, 0}}, {-1, {1, 2, 0}}},
         {{1, {2, 0, 1}}, {-1, {0, 2, 1}}},
         {{1, {3, 0, 0}}, {-3, {1, 2, 0}}}},
        // k = 4
        {{{1, {3, 1, 0}}, {-1, {1, 3, 0}}},
         {{3, {2, 1, 1}}, {-1, {0, 3, 1}}},
         {{6, {1, 1, 2}}, {-1, {3, 1, 0}}, {-1, {1, 3, 0}}},
         {{4, {0, 1, 3}}, {-3, {2, 1, 1}}, {-3, {0, 3, 1}}},
         {{8, {0, 0, 4}},
          {3, {4, 0, 0}},
          {3, {0, 4, 0}},
          {-24, {2, 0, 2}},
          {-24, {0, 2, 2}},
          {6, {2, 2, 0}}},
         {{4, {1, 0, 3}}, {-3, {3, 0, 1}}, {-3, {1, 2, 1}}},
         {{6, {2, 0, 2}}, {-6, {0, 2, 2}}, {-1, {4, 0, 0}}, {1, {0, 4, 0}}},
         {{1, {3, 0, 1}}, {-3, {1, 2, 1}}},
         {{1, {4, 0, 0}}, {-6, {2, 2, 0}}, {1, {0, 4, 0}}}},
    };
    return table.at(k);
}

ScalarField planar_harmonic(int k, int i) {
    // Re z^k for i = 0, Im z^k for i = 1; derivatives via d/dz z^k = k z^(k-1).
    const auto part = [i](std::complex<double> v) { return i == 0 ? v.real() : v.imag(); };
    ScalarField f;
    f.value = [k, part](const Vec& x) {
        return part(std::pow(std::complex<double>(x[0], x[1]), k));
    };
    f.gradient = [k, part](const Vec& x) {
        const std::complex<double> z(x[0], x[1]);
        const std::complex<double> d = k == 0 ? 0.0 : double(k) * std::pow(z, k - 1);
        Vec g(2);
        g[0] = part(d);
        g[1] = part(std::complex<double>(0.0, 1.0) * d);
        return g;
    };
    f.hessian = [k, part](const Vec& x) {
        const std::complex<double> z(x[0], x[1]);
        const std::complex<double> d2 =
            k < 2 ? 0.0 : double(k) * double(k - 1) * std::pow(z, k - 2);
        const std::complex<double> im(0.0, 1.0);
        Mat h(2, 2);
        h(0, 0) = part(d2);
        h(0, 1) = part(im * d2);
        h(1, 0) = h(0, 1);
        h(1, 1) = part(im * im * d2);
        return h;
    };
    return f;
}

}  // namespace

int harmonic_multiplicity(int n, int k) {
    if (n < 2 || k < 0)
        throw DomainError("harmonic_multiplicity: need n >= 2, k >= 0");
    if (k == 0)
        return 1;
    if (n == 2)
        return 2;
    return static_cast<int>((n + 2 * k - 2) * binomial(n + k - 3, k) / (n - 2));
}

HarmonicPolynomial harmonic_basis(int n, int k, int i) {
    if (i < 0 || i >= harmonic_multiplicity(n, k))
        throw DomainError("harmonic_basis: index out of range");
    HarmonicPolynomial out;
    out.dim = n;
    out.degree = k;
    if (n == 2) {
        if (k == 0) {
            out.field = planar_harmonic(0, 0);
        } else {
            out.field = planar_harmonic(k, i);
        }
        return out;
    }
    if (n == 3) {
        if (k > 4)
            throw DomainError("harmonic_basis: three-dimensional table covers degree <= 4");
        out.field = monomial_field(solid_harmonics_3d(k).at(i));
        return out;
    }
    throw DomainError("harmonic_basis: explicit bases implemented for n in {2, 3}");
}

ScalarField separated_field(RadialProfile f, const HarmonicPolynomial& y) {
    ScalarField out;
    const ScalarField yf = y.field;
    out.value = [f, yf](const Vec& x) {
        return f(x.norm())[0] * yf.value(x);
    };
    out.gradient = [f, yf](const Vec& x) {
        const double r = x.norm();
        const auto d = f(r);
        return Vec(d[1] / r * yf.value(x) * x + d[0] * yf.gradient(x));
    };
    out.hessian = [f, yf](const Vec& x) {
        const double r = x.norm();
        const auto d = f(r);
        const double yv = yf.value(x);
        const Vec yg = yf.gradient(x);
        const Mat unit = x * x.transpose() / (r * r);
        const int n = static_cast<int>(x.size());
        return Mat((d[2] - d[1] / r) * yv * unit + d[1] / r * yv * Mat::Identity(n, n) +
                   d[1] / r * (x * yg.transpose() + yg * x.transpose()) + d[0] * yf.hessian(x));
    };
    return out;
}

}  // namespace nliouville
