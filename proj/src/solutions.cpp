#include "nliouville/solutions.hpp"

#include <cmath>

namespace nliouville {

RadialSolution::RadialSolution(Problem problem, double lambda)
    : problem_(problem), lambda_(lambda) {
    if (!(lambda > 0.0))
        throw DomainError("RadialSolution: scale lambda must be positive");
    const int n = problem_.dim();
    gamma_ = problem_.profile_exponent();
    log_amp_ = std::log(problem_.constants().c_n) + n * std::log(problem_.alpha() + 1.0) +
               (n - 1) * std::log(lambda_);
}

double RadialSolution::value(double r) const {
    if (r < 0.0)
        throw DomainError("RadialSolution::value: negative radius");
    const int n = problem_.dim();
    if (r == 0.0)
        return log_amp_;
    // log1p keeps the tail accurate where lambda r^gamma is tiny; when
    // lambda r^gamma overflows, switch to the asymptotic branch.
    const double t = gamma_ * std::log(r) + std::log(lambda_);
    if (t > 700.0)
        return log_amp_ - n * t;
    return log_amp_ - n * std::log1p(std::exp(t));
}

RadialEval RadialSolution::eval(double r) const {
    if (!(r > 0.0))
        throw DomainError("RadialSolution::eval: derivatives require r > 0");
    const int n = problem_.dim();
    const double rho = lambda_ * std::pow(r, gamma_);
    RadialEval e;
    e.u = value(r);
    if (rho > 1e300) {  // saturated tail; the exact ratios below would be inf/inf
        e.du = -n * gamma_ / r;
        e.d2u = n * gamma_ / (r * r);
        return e;
    }
    const double den = 1.0 + rho;
    e.du = -n * gamma_ * rho / (r * den);
    e.d2u = -n * gamma_ * rho / (r * r) * ((gamma_ - 1.0) - rho) / (den * den);
    return e;
}

double RadialSolution::nlaplacian(double r) const {
    if (!(r > 0.0))
        throw DomainError("RadialSolution::nlaplacian: requires r > 0");
    const int n = problem_.dim();
    const double alpha = problem_.alpha();
    // Delta_N u = -(N lambda gamma)^(N-1) gamma (N-1) r^(N alpha) / (1+lambda r^gamma)^N,
    // composed in log space to survive extreme radii.
    const double rho_log = gamma_ * std::log(r) + std::log(lambda_);
    const double tail =
        rho_log > 700.0 ? n * rho_log : n * std::log1p(std::exp(rho_log));
    const double mag = (n - 1) * std::log(n * lambda_ * gamma_) +
                       std::log(gamma_ * (n - 1)) + n * alpha * std::log(r) - tail;
    return -std::exp(mag);
}

double RadialSolution::weighted_density(double r) const {
    return std::exp(log_weighted_density(r));
}

double RadialSolution::log_weighted_density(double r) const {
    if (!(r > 0.0))
        throw DomainError("RadialSolution::log_weighted_density: requires r > 0");
    const int n = problem_.dim();
    return n * problem_.alpha() * std::log(r) + value(r);
}

AsymptoticsDefect RadialSolution::check_asymptotics(double r_large) const {
    const double slope = problem_.constants().slope;
    const int n = problem_.dim();
    AsymptoticsDefect d;
    const double limit = std::log(problem_.constants().c_n) +
                         n * std::log(problem_.alpha() + 1.0) - std::log(lambda_);
    d.log_defect = value(r_large) + slope * std::log(r_large) - limit;
    d.slope_defect = std::abs(r_large * eval(r_large).du + slope);
    return d;
}

bool PlanarSolution::integer_weight(double alpha) {
    return alpha >= 0.0 && alpha == std::floor(alpha);
}

PlanarSolution::PlanarSolution(double alpha, double lambda, std::complex<double> shift)
    : alpha_(alpha), lambda_(lambda), shift_(shift) {
    if (!(alpha > -1.0))
        throw DomainError("PlanarSolution: weight exponent must satisfy alpha > -1");
    if (!(lambda > 0.0))
        throw DomainError("PlanarSolution: scale lambda must be positive");
    if (shift_ != std::complex<double>(0.0) && !integer_weight(alpha_))
        throw DomainError(
            "PlanarSolution: a nonzero shift requires alpha to be a nonnegative integer");
}

std::complex<double> PlanarSolution::zpow(std::complex<double> z, double p) const {
    if (z == std::complex<double>(0.0)) {
        if (p == 0.0)
            return 1.0;
        return 0.0;  // negative p only occurs with a vanishing prefactor
    }
    // integer exponents (the shifted family) multiply out exactly; the
    // exp/log route of std::pow would otherwise dominate the finite-difference
    // noise floor of the residual oracles
    if (p == std::floor(p) && std::abs(p) <= 64.0) {
        const long n = std::lround(p);
        std::complex<double> out(1.0);
        std::complex<double> base = n < 0 ? 1.0 / z : z;
        for (long k = std::labs(n); k > 0; k >>= 1) {
            if (k & 1)
                out *= base;
            base *= base;
        }
        return out;
    }
    return std::pow(z, p);
}

double PlanarSolution::value(std::complex<double> z) const {
    const std::complex<double> w = zpow(z, alpha_ + 1.0) + shift_;
    const double s = std::norm(w);
    return std::log(8.0) + 2.0 * std::log((alpha_ + 1.0) * lambda_) -
           2.0 * std::log1p(lambda_ * lambda_ * s);
}

PlanarSolution::Wirtinger PlanarSolution::wirtinger(std::complex<double> z) const {
    if (z == std::complex<double>(0.0) && !integer_weight(alpha_))
        throw DomainError("PlanarSolution::wirtinger: z = 0 is singular for non-integer alpha");
    const double a = alpha_;
    const double l2 = lambda_ * lambda_;
    const std::complex<double> w = zpow(z, a + 1.0) + shift_;
    const std::complex<double> wp = (a + 1.0) * zpow(z, a);
    const std::complex<double> wpp = (a + 1.0) * a * zpow(z, a - 1.0);
    const double den = 1.0 + l2 * std::norm(w);

    Wirtinger d;
    const std::complex<double> wpwbar = wp * std::conj(w);
    d.uz = -2.0 * l2 * wpwbar / den;
    d.uzz = -2.0 * l2 * (wpp * std::conj(w) / den - l2 * wpwbar * wpwbar / (den * den));
    d.uzzbar = -2.0 * l2 * std::norm(wp) / (den * den);
    return d;
}

Eigen::Vector2d PlanarSolution::gradient(std::complex<double> z) const {
    const auto d = wirtinger(z);
    return {2.0 * d.uz.real(), -2.0 * d.uz.imag()};
}

Eigen::Matrix2d PlanarSolution::hessian(std::complex<double> z) const {
    const auto d = wirtinger(z);
    Eigen::Matrix2d h;
    const double uxx = 2.0 * d.uzz.real() + 2.0 * d.uzzbar;
    const double uyy = 2.0 * d.uzzbar - 2.0 * d.uzz.real();
    const double uxy = -2.0 * d.uzz.imag();
    h << uxx, uxy, uxy, uyy;
    return h;
}

double PlanarSolution::weighted_density(std::complex<double> z) const {
    const double r = std::abs(z);
    if (r == 0.0 && alpha_ < 0.0)
        throw DomainError("PlanarSolution::weighted_density: singular at z = 0 for alpha < 0");
    if (r == 0.0)
        return alpha_ == 0.0 ? std::exp(value(z)) : 0.0;
    return std::exp(2.0 * alpha_ * std::log(r) + value(z));
}

PlanarResidual residual_planar(const PlanarSolution& sol, std::complex<double> z, double h) {
    if (z == std::complex<double>(0.0))
        throw DomainError("residual_planar: z = 0 excluded");
    if (!(h > 0.0))
        throw DomainError("residual_planar: step must be positive");

    // long double accumulation: the stencil cancellation otherwise dominates
    // the extrapolated residual at usable step sizes
    const auto lap = [&sol, z](double step) {
        const std::complex<double> ex(step, 0.0), ey(0.0, step);
        const long double sum = static_cast<long double>(sol.value(z + ex)) +
                                static_cast<long double>(sol.value(z - ex)) +
                                static_cast<long double>(sol.value(z + ey)) +
                                static_cast<long double>(sol.value(z - ey)) -
                                4.0L * static_cast<long double>(sol.value(z));
        return static_cast<double>(sum / (static_cast<long double>(step) * step));
    };
    const double w = sol.weighted_density(z);
    const double lap_h = lap(h);
    const double lap_h2 = lap(h / 2.0);
    PlanarResidual res;
    res.z = z;
    res.value = std::abs(lap_h + w);
    res.extrapolated = std::abs((4.0 * lap_h2 - lap_h) / 3.0 + w);
    res.error_estimate = std::abs(res.value - res.extrapolated);
    return res;
}

ScalarField u_field(const RadialSolution& sol) {
    return radial_scalar_field([sol](double r) {
        const auto e = sol.eval(r);
        return std::array<double, 3>{e.u, e.du, e.d2u};
    });
}

ScalarField v_field(const RadialSolution& sol) {
    const int n = sol.problem().dim();
    return radial_scalar_field([sol, n](double r) {
        const auto e = sol.eval(r);
        const double v = std::exp(-e.u / n);
        const double dv = -v * e.du / n;
        const double d2v = v * (e.du * e.du / (n * n) - e.d2u / n);
        return std::array<double, 3>{v, dv, d2v};
    });
}

namespace {

std::complex<double> as_complex(const Vec& x) {
    return {x[0], x[1]};
}

}  // namespace

ScalarField u_field(const PlanarSolution& sol) {
    ScalarField f;
    f.value = [sol](const Vec& x) { return sol.value(as_complex(x)); };
    f.gradient = [sol](const Vec& x) { return Vec(sol.gradient(as_complex(x))); };
    f.hessian = [sol](const Vec& x) { return Mat(sol.hessian(as_complex(x))); };
    return f;
}

ScalarField v_field(const PlanarSolution& sol) {
    return v_field_from_u(u_field(sol), 2);
}

ScalarField v_field_from_u(const ScalarField& u, int n) {
    ScalarField f;
    f.value = [u, n](const Vec& x) { return std::exp(-u.value(x) / n); };
    f.gradient = [u, n](const Vec& x) {
        const double v = std::exp(-u.value(x) / n);
        return Vec(-v / n * u.gradient(x));
    };
    if (u.has_hessian()) {
        f.hessian = [u, n](const Vec& x) {
            const double v = std::exp(-u.value(x) / n);
            const Vec g = u.gradient(x);
            return Mat(v * (g * g.transpose() / (n * n) - u.hessian(x) / n));
        };
    }
    return f;
}

}  // namespace nliouville
