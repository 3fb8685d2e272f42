#include "nliouville/field.hpp"

namespace nliouville {

ScalarField radial_scalar_field(RadialProfile profile) {
    ScalarField f;
    f.value = [profile](const Vec& x) {
        return profile(x.norm())[0];
    };
    f.gradient = [profile](const Vec& x) {
        const double r = x.norm();
        const auto d = profile(r);
        return Vec(d[1] / r * x);
    };
    f.hessian = [profile](const Vec& x) {
        const double r = x.norm();
        const auto d = profile(r);
        const Mat radial = x * x.transpose() / (r * r);
        const Mat id = Mat::Identity(x.size(), x.size());
        return Mat(d[2] * radial + d[1] / r * (id - radial));
    };
    return f;
}

Vec fd_gradient(const ScalarField& f, const Vec& x, double h) {
    Vec g(x.size());
    for (int i = 0; i < x.size(); ++i) {
        Vec xp = x, xm = x;
        xp[i] += h;
        xm[i] -= h;
        g[i] = (f.value(xp) - f.value(xm)) / (2.0 * h);
    }
    return g;
}

Mat fd_hessian(const ScalarField& f, const Vec& x, double h) {
    const int n = static_cast<int>(x.size());
    Mat hess(n, n);
    if (f.gradient) {
        for (int j = 0; j < n; ++j) {
            Vec xp = x, xm = x;
            xp[j] += h;
            xm[j] -= h;
            hess.col(j) = (f.gradient(xp) - f.gradient(xm)) / (2.0 * h);
        }
        // symmetrize the mixed finite-difference entries
        hess = 0.5 * (hess + hess.transpose()).eval();
        return hess;
    }
    const double f0 = f.value(x);
    for (int i = 0; i < n; ++i) {
        Vec xp = x, xm = x;
        xp[i] += h;
        xm[i] -= h;
        hess(i, i) = (f.value(xp) - 2.0 * f0 + f.value(xm)) / (h * h);
        for (int j = i + 1; j < n; ++j) {
            Vec xpp = x, xpm = x, xmp = x, xmm = x;
            xpp[i] += h; xpp[j] += h;
            xpm[i] += h; xpm[j] -= h;
            xmp[i] -= h; xmp[j] += h;
            xmm[i] -= h; xmm[j] -= h;
            const double v =
                (f.value(xpp) - f.value(xpm) - f.value(xmp) + f.value(xmm)) / (4.0 * h * h);
            hess(i, j) = v;
            hess(j, i) = v;
        }
    }
    return hess;
}

double fd_laplacian(const std::function<double(const Vec&)>& value, const Vec& x, double h) {
    double acc = 0.0;
    const double f0 = value(x);
    for (int i = 0; i < x.size(); ++i) {
        Vec xp = x, xm = x;
        xp[i] += h;
        xm[i] -= h;
        acc += (value(xp) - 2.0 * f0 + value(xm)) / (h * h);
    }
    return acc;
}

}  // namespace nliouville
