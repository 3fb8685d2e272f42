#include "nliouville/geometry.hpp"

#include <cmath>

namespace nliouville {

ConformalMetric::ConformalMetric(int n, double alpha) : n_(n), alpha_(alpha) {
    if (n < 2)
        throw DomainError("ConformalMetric: dimension must satisfy n >= 2");
    if (!(alpha > -1.0))
        throw DomainError("ConformalMetric: weight exponent must satisfy alpha > -1");
}

void ConformalMetric::require_off_origin(const Vec& x, const char* where) const {
    if (x.size() != n_)
        throw DomainError(std::string(where) + ": point dimension mismatch");
    if (x.norm() == 0.0)
        throw DomainError(std::string(where) + ": the metric is singular at the origin");
}

double ConformalMetric::factor(const Vec& x) const {
    require_off_origin(x, "ConformalMetric::factor");
    return std::pow(x.squaredNorm(), alpha_);
}

Mat ConformalMetric::components(const Vec& x) const {
    return factor(x) * Mat::Identity(n_, n_);
}

Mat ConformalMetric::inverse(const Vec& x) const {
    return 1.0 / factor(x) * Mat::Identity(n_, n_);
}

ChristoffelSymbols ConformalMetric::christoffel(const Vec& x) const {
    require_off_origin(x, "ConformalMetric::christoffel");
    const double r2 = x.squaredNorm();
    ChristoffelSymbols symbols(n_, Mat::Zero(n_, n_));
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k)
            for (int j = 0; j < n_; ++j) {
                double value = 0.0;
                if (i == j)
                    value += x[k];
                if (i == k)
                    value += x[j];
                if (k == j)
                    value -= x[i];
                symbols[i](k, j) = alpha_ / r2 * value;
            }
    return symbols;
}

RicciValue ConformalMetric::ricci(const Vec& x) const {
    require_off_origin(x, "ConformalMetric::ricci");
    const double r2 = x.squaredNorm();
    RicciValue out;
    out.tangential_eigenvalue = (n_ - 2) * (1.0 - (alpha_ + 1.0) * (alpha_ + 1.0)) / r2;
    out.matrix = out.tangential_eigenvalue * (Mat::Identity(n_, n_) - x * x.transpose() / r2);
    return out;
}

Mat ConformalMetric::g_hessian(const ScalarField& f, const Vec& x, double fd_step) const {
    require_off_origin(x, "ConformalMetric::g_hessian");
    const double r2 = x.squaredNorm();
    const Vec grad_phi = alpha_ / r2 * x;
    const Vec grad_f = f.gradient ? f.gradient(x) : fd_gradient(f, x, 1e-6 * (1.0 + x.norm()));
    const double h = fd_step > 0.0 ? fd_step : 1e-5 * (1.0 + x.norm());
    const Mat hess = f.has_hessian() ? f.hessian(x) : fd_hessian(f, x, h);
    return hess + grad_phi.dot(grad_f) * Mat::Identity(n_, n_) -
           (grad_phi * grad_f.transpose() + grad_f * grad_phi.transpose());
}

double ConformalMetric::gradient_norm(const ScalarField& f, const Vec& x) const {
    require_off_origin(x, "ConformalMetric::gradient_norm");
    return std::pow(x.squaredNorm(), -alpha_ / 2.0) * f.gradient(x).norm();
}

double ConformalMetric::laplace_beltrami(const ScalarField& f, const Vec& x,
                                         double fd_step) const {
    require_off_origin(x, "ConformalMetric::laplace_beltrami");
    const double r2 = x.squaredNorm();
    const Vec grad_phi = alpha_ / r2 * x;
    const Vec grad_f = f.gradient ? f.gradient(x) : fd_gradient(f, x, 1e-6 * (1.0 + x.norm()));
    const double h = fd_step > 0.0 ? fd_step : 1e-5 * (1.0 + x.norm());
    const Mat hess = f.has_hessian() ? f.hessian(x) : fd_hessian(f, x, h);
    return (hess.trace() + (n_ - 2) * grad_phi.dot(grad_f)) / factor(x);
}

double ConformalMetric::tensor_norm_sq(const Mat& t, const Vec& x) const {
    const double f = factor(x);
    return t.squaredNorm() / (f * f);
}

}  // namespace nliouville
