#pragma once

#include <complex>
#include <span>

#include "nliouville/solutions.hpp"

namespace nliouville {

/// The quadratic-differential combination u_zz - u_z^2/2 - alpha u_z/z,
/// which vanishes identically along planar solutions.
struct ComplexDiagnostic {
    enum class Method { analytic, finite_difference };

    std::complex<double> z;
    std::complex<double> invariant;
    Method method;
};

/// Closed-form Wirtinger route. Throws DomainError at z = 0.
ComplexDiagnostic holomorphic_invariant(const PlanarSolution& sol, std::complex<double> z);

/// Independent route: Wirtinger derivatives assembled from central
/// differences of u with step h. u itself is not holomorphic, only the
/// combined invariant is, so the derivatives come from real partials.
ComplexDiagnostic holomorphic_invariant_fd(const PlanarSolution& sol, std::complex<double> z,
                                           double h);

/// Least-squares slope of log |grad u| against log r over the given radii
/// (all in (0, 0.1]), taking the worst angle at each radius. For weights
/// alpha >= 0 the slope is at least alpha up to fit noise.
/// Throws DomainError for alpha < 0 or an unusable radius list.
double origin_gradient_decay(const PlanarSolution& sol, std::span<const double> radii);

}  // namespace nliouville
