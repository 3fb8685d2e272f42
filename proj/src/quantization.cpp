#include "nliouville/quantization.hpp"

#include <cmath>

namespace nliouville {

double mass_closed_form(const Problem& problem) {
    const auto& k = problem.constants();
    return k.c_n * k.omega_n * std::pow(problem.alpha() + 1.0, problem.dim() - 1);
}

namespace {

MassResult finish(const Problem& problem, double numeric, double tol, const char* route) {
    MassResult res;
    res.numeric = numeric;
    res.exact = mass_closed_form(problem);
    res.rel_err = std::abs(res.numeric - res.exact) / res.exact;
    if (!(res.rel_err <= tol))
        throw ConvergenceError(std::string(route) + ": quadrature value misses the closed form, " +
                                   "rel err " + std::to_string(res.rel_err),
                               {res.numeric, res.numeric, res.numeric});
    return res;
}

}  // namespace

MassResult mass(const RadialSolution& sol, double tol) {
    if (!(tol > 0.0))
        throw DomainError("mass: tolerance must be positive");
    const Problem& problem = sol.problem();
    const int n = problem.dim();
    const double gamma = problem.profile_exponent();
    const double lambda = sol.lambda();
    const double sphere = problem.constants().sphere_area;

    // Substituted variable s = lambda r^gamma mapped to (0,1) by s = t/(1-t).
    // Integrand in log space: the r-powers and e^u never overflow.
    const auto integrand = [&](double t) {
        const double s = t / (1.0 - t);
        if (s <= 0.0)
            return 0.0;
        const double log_r = (std::log(s) - std::log(lambda)) / gamma;
        const double log_f = std::log(sphere / gamma) + n * (problem.alpha() + 1.0) * log_r +
                             sol.value(std::exp(log_r)) - std::log(s);
        const double jac = 1.0 / ((1.0 - t) * (1.0 - t));
        return std::exp(log_f) * jac;
    };

    QuadratureOptions opt;
    opt.rel_tol = std::min(tol * 1e-2, 1e-12);
    const QuadratureResult q = integrate_gk(integrand, 0.0, 1.0, opt);
    return finish(problem, q.value, tol, "mass");
}

MassResult mass_raw_quadrature(const RadialSolution& sol, double tol) {
    if (!(tol > 0.0))
        throw DomainError("mass_raw_quadrature: tolerance must be positive");
    const Problem& problem = sol.problem();
    const int n = problem.dim();
    const double sphere = problem.constants().sphere_area;

    const auto density = [&](double r) {
        // r^(N-1) |x|^(N alpha) e^u, log-composed
        return std::exp((n - 1) * std::log(r) + sol.log_weighted_density(r));
    };
    QuadratureOptions opt;
    opt.rel_tol = std::min(tol * 1e-2, 1e-12);
    opt.max_intervals = 200000;

    const QuadratureResult head = integrate_gk(density, 0.0, 1.0, opt);
    const QuadratureResult tail = integrate_gk(
        [&](double t) { return density(1.0 / t) / (t * t); }, 0.0, 1.0, opt);
    return finish(problem, sphere * (head.value + tail.value), tol, "mass_raw_quadrature");
}

double mass_independent_of_lambda(const Problem& problem, std::span<const double> lambdas,
                                  double tol) {
    for (double l : lambdas)
        if (!(l > 0.0))
            throw DomainError("mass_independent_of_lambda: scales must be positive");
    const double reference = mass(RadialSolution(problem, 1.0), tol).numeric;
    double spread = 0.0;
    for (double l : lambdas) {
        const double m = mass(RadialSolution(problem, l), tol).numeric;
        spread = std::max(spread, std::abs(m - reference) / reference);
    }
    return spread;
}

double beta_structure_integral(int n) {
    const auto integrand = [n](double t) {
        const double s = t / (1.0 - t);
        if (s <= 0.0)
            return 0.0;
        const double log_f = (n - 2) * std::log(s) - n * std::log1p(s);
        return std::exp(log_f) / ((1.0 - t) * (1.0 - t));
    };
    return integrate_gk(integrand, 0.0, 1.0).value;
}

}  // namespace nliouville
