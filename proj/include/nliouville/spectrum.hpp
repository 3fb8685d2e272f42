#pragma once

#include <span>
#include <vector>

#include "nliouville/core.hpp"
#include "nliouville/field.hpp"
#include "nliouville/harmonics.hpp"

namespace nliouville {

/// One spherical mode of the linearized operator after separation of
/// variables and the radius change r -> r^(1/(alpha+1)).
struct ModeODE {
    int n;
    double alpha;
    int k;
    double mu;    ///< k(N-2+k), eigenvalue of the sphere Laplacian
    double beta;  ///< mu / ((N-1)(alpha+1)^2), the mode coupling constant
};

ModeODE make_mode_ode(int n, double alpha, int k);

/// f(r) = offset + scale * r^a / (1 + r^g)^b with exact first and second
/// derivatives; covers every closed-form radial profile in this module.
RadialProfile power_rational_profile(double a, double g, double b, double scale = 1.0,
                                     double offset = 0.0);

/// The two bounded closed-form mode solutions:
/// eta0 = (N-1-r^(N/(N-1))) / (1+r^(N/(N-1)))  (coupling 0),
/// eta1 = r^(1/(N-1)) / (1+r^(N/(N-1)))        (coupling 1).
RadialProfile eta_bar0(int n);
RadialProfile eta_bar1(int n);

/// The unique zero of eta_bar0 on (0, inf): (N-1)^((N-1)/N).
double eta_bar0_zero(int n);

/// Left-hand side of the reduced mode equation at r, with general spectral
/// weight `lam` multiplying the potential term (lam = 1 for the kernel
/// equation). Throws DomainError for r <= 0.
double mode_equation_residual(int n, double beta, double lam, const RadialProfile& eta, double r);
double mode_ode_residual(int n, double beta, const RadialProfile& eta, double r);
double mode_ode_residual(const ModeODE& mode, const RadialProfile& eta, double r);

/// Frobenius exponent at the origin:
/// -N(N-2)/(2(N-1)) + sqrt(N^2(N-2)^2/(4(N-1)^2) + beta).
double indicial_root(int n, double beta);

/// Closed-form ground eigendata of the weighted eigenvalue problem for one
/// mode: exponents (a_k, b_k) of the eigenfunction r^a_k/(1+r^(N/(N-1)))^b_k
/// and its eigenvalue Lambda_k = b_k (N + b_k - 1)/N.
struct ClosedFormEigenvalue {
    double a_k;
    double b_k;
    double lambda_k;
};

ClosedFormEigenvalue closed_form_eigenvalue(int n, double alpha, int k);
RadialProfile closed_form_eigenfunction(int n, double alpha, int k);

/// Sturm-Liouville data of the mode equation: -(p eta')' + q eta = -beta w eta,
/// with p, w > 0 and q < 0 on (0, inf).
struct SLProblem {
    int n;
    double spectral_param;  ///< beta for the kernel form, Lambda for the weighted form
    std::function<double(double)> p;
    std::function<double(double)> q;
    std::function<double(double)> w;
};

SLProblem make_sl_problem(int n, double spectral_param);

/// Shooting configuration. Frobenius series start at r_min, decay start at
/// r_max, Wronskian matching at r_match.
struct ShootingOptions {
    double r_min = 1e-6;
    double r_max = 1e6;
    double r_match = 1.0;
    double ode_rel_tol = 1e-12;
};

/// Normalized Wronskian at r_match between the solution shot from the origin
/// (bounded branch) and the one shot from infinity (decaying branch).
/// Vanishes exactly at spectral points.
double shooting_mismatch(int n, double beta, double lam, const ShootingOptions& opt = {});

/// Numeric coupling constants for which the mode equation admits a solution
/// bounded at both ends; Brent iteration on the mismatch inside `bracket`.
/// Throws BracketError without a sign change, ConvergenceError on stall.
double sl_solve_beta(int n, std::pair<double, double> bracket, double tol,
                     const ShootingOptions& opt = {});

/// Lowest eigenvalue Lambda of the weighted mode problem, located by an
/// upward scan of the mismatch followed by Brent refinement, then verified
/// to be nodeless. Only index 0 (the ground state) is supported.
double sl_solve_lambda(int n, double alpha, int k, int index, double tol,
                       const ShootingOptions& opt = {});

/// Weight exponent at which mode k enters the kernel:
/// alpha_k = sqrt((k^2+(N-2)k)/(N-1)) - 1.
double degeneracy_alpha(int n, int k);

/// Mode cutoff S_{N,alpha} = [2-N+sqrt((N-2)^2+4(N-1)(alpha+1)^2)]/2.
double morse_threshold(int n, double alpha);

struct MorseCount {
    double s_threshold;
    int total;  ///< sum of M(k) over modes k < s_threshold
};

MorseCount morse_count(int n, double alpha);

struct DegenerateMode {
    int k;
    double alpha_k;
    int multiplicity;        ///< M(k)
    int kernel_dim;          ///< 1 + M(k) when the weight sits at alpha_k
    bool translation_modes;  ///< k = 1: kernel members match the translation modes
    bool within_range;       ///< alpha_k <= alpha of the catalog request
};

struct SpectralReport {
    int n;
    double alpha;
    std::vector<DegenerateMode> modes;  ///< k = 1..k_max
    std::vector<double> lambda_k;       ///< ground eigenvalues at this alpha, k = 0..k_max
    double s_threshold;
    int morse_total;
    int kernel_dim;  ///< at this alpha, ties within 1e-12 classified as degenerate
};

/// Catalog of degeneracy values, multiplicities, eigenvalues and the Morse
/// data for weight alpha; modes with alpha_k <= alpha are flagged in range.
SpectralReport degeneracy_catalog(int n, double alpha, int k_max);

/// Explicit members of the kernel of the linearized operator.
class KernelFunction {
public:
    enum class Kind { scaling, translation, harmonic };

    static KernelFunction scaling(int n, double alpha);
    static KernelFunction translation(int n, int axis);
    static KernelFunction harmonic(int n, double alpha, int k, int index);

    Kind kind() const { return kind_; }
    int dim() const { return n_; }
    double alpha() const { return alpha_; }
    int mode() const { return k_; }

    /// Bounded representation on R^N with closed-form derivatives.
    ScalarField field() const;

    /// Value at the origin along the radial limit (N-1 for the scaling mode,
    /// 0 for the others).
    double origin_limit() const;

private:
    KernelFunction(Kind kind, int n, double alpha, int k, int index);

    Kind kind_;
    int n_;
    double alpha_;
    int k_;
    int index_;
};

/// Strong-form defect of the linearized equation at x for a candidate kernel
/// element phi given by closed-form derivatives.
double linearized_defect(int n, double alpha, const ScalarField& phi, const Vec& x);

/// Max defect over the sample points. Throws DomainError for n > 3, where
/// only the mode-reduced path is available.
double kernel_residual(int n, double alpha, const ScalarField& phi, std::span<const Vec> points);
double kernel_residual(int n, double alpha, const KernelFunction& fn,
                       std::span<const Vec> points);

}  // namespace nliouville
