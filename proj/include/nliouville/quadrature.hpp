#pragma once

#include <functional>

#include "nliouville/core.hpp"

namespace nliouville {

struct QuadratureResult {
    double value;
    double error_estimate;
    int evaluations;
};

struct QuadratureOptions {
    double rel_tol = 1e-12;
    double abs_tol = 0.0;
    int max_intervals = 20000;
};

/// Adaptive Gauss-Kronrod (7-15) quadrature on a finite interval, refining
/// the worst subinterval first. Integrable endpoint singularities are handled
/// by the deep one-sided refinement this ordering produces.
/// Throws ConvergenceError (with the last three running estimates) when the
/// interval budget is exhausted above tolerance.
QuadratureResult integrate_gk(const std::function<double(double)>& f, double a, double b,
                              const QuadratureOptions& opt = {});

}  // namespace nliouville
