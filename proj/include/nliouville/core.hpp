#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace nliouville {

/// Raised when an argument violates a documented precondition
/// (invalid problem parameters, points outside a function's domain, ...).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when an iterative numerical scheme stalls above its tolerance.
/// Carries the last three refinement estimates for diagnosis.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, std::array<double, 3> last_estimates)
        : std::runtime_error(what), history_(last_estimates) {}

    /// Most recent estimate last.
    const std::array<double, 3>& history() const { return history_; }

private:
    std::array<double, 3> history_;
};

/// Raised by root-bracketing solvers when the supplied interval does not
/// contain a sign change of the objective.
struct BracketError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a derivative-based quantity is requested at a critical point
/// of the underlying solution, where the coefficient matrix degenerates.
struct CriticalPointError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Derived constants of the weighted N-Liouville problem.
struct Constants {
    double c_n;          ///< N (N^2/(N-1))^(N-1), the amplitude constant of the radial family
    double omega_n;      ///< volume of the unit ball in R^N
    double sphere_area;  ///< N omega_n, surface area of the unit sphere
    double slope;        ///< N^2(alpha+1)/(N-1), asymptotic logarithmic slope of solutions
};

/// Problem parameters: dimension N >= 2 and weight exponent alpha > -1,
/// with derived constants attached. Immutable after construction.
class Problem {
public:
    Problem(int n, double alpha);

    int dim() const { return n_; }
    double alpha() const { return alpha_; }
    const Constants& constants() const { return constants_; }

    /// N(alpha+1)/(N-1): the power of |x| appearing in the radial solution family.
    double profile_exponent() const;

private:
    int n_;
    double alpha_;
    Constants constants_;
};

/// Validates (n, alpha) and attaches derived constants.
/// Throws DomainError if n < 2 or alpha <= -1.
Problem make_problem(int n, double alpha);

/// Strictly increasing positive radii used for sampling radial quantities.
struct RadialGrid {
    enum class Scale { linear, logarithmic };

    std::vector<double> points;
    Scale scale = Scale::logarithmic;
};

/// Logarithmically spaced grid on [r_min, r_max] with `count` points.
/// Throws DomainError unless 0 < r_min < r_max and count >= 2.
RadialGrid log_grid(double r_min, double r_max, int count);

/// Linearly spaced grid on [r_min, r_max] with `count` points.
RadialGrid linear_grid(double r_min, double r_max, int count);

/// Default sampling grid: 400 logarithmic points on [1e-4, 1e4].
RadialGrid default_grid();

}  // namespace nliouville
