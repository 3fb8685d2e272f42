#pragma once

#include <span>

#include "nliouville/quadrature.hpp"
#include "nliouville/solutions.hpp"

namespace nliouville {

/// Total weighted mass of a solution, numeric against the closed form
/// c_N omega_N (alpha+1)^(N-1).
struct MassResult {
    double numeric;
    double exact;
    double rel_err;
};

/// c_N omega_N (alpha+1)^(N-1).
double mass_closed_form(const Problem& problem);

/// Numeric mass N omega_N int_0^inf r^(N-1+N alpha) e^u dr, computed after
/// the substitution s = lambda r^(N(alpha+1)/(N-1)) that maps the integrand
/// onto a bounded Beta-type profile. Throws ConvergenceError if adaptive
/// refinement stalls above tol, or if the result misses the closed form by
/// more than tol relative.
MassResult mass(const RadialSolution& sol, double tol);

/// Independent route: raw-variable adaptive Gauss-Kronrod on [0,1] and, via
/// the tail transform t = 1/r, on [1, inf). Guards the substitution in mass()
/// against transform bugs.
MassResult mass_raw_quadrature(const RadialSolution& sol, double tol);

/// Max over the given scales of |mass(lambda) - mass(1)| / mass(1).
double mass_independent_of_lambda(const Problem& problem, std::span<const double> lambdas,
                                  double tol);

/// Evaluates int_0^inf s^(N-2)/(1+s)^N ds through the same adaptive pipeline
/// used by mass(); the exact value is the Beta integral B(N-1, 1) = 1/(N-1).
double beta_structure_integral(int n);

}  // namespace nliouville
