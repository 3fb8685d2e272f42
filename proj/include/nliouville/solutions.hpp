#pragma once

#include <complex>

#include "nliouville/core.hpp"
#include "nliouville/field.hpp"

namespace nliouville {

/// Value and radial derivatives of a radial solution at one radius.
struct RadialEval {
    double u;    ///< u(r)
    double du;   ///< u'(r)
    double d2u;  ///< u''(r)
};

/// Defects of the large-radius asymptotics at one radius; both tend to zero
/// as r grows.
struct AsymptoticsDefect {
    double log_defect;    ///< u(r) + slope*log r minus its limit log(c_N (a+1)^N / lambda)
    double slope_defect;  ///< |r u'(r) + slope|
};

/// The explicit radial solution family
///   u(r) = log[ c_N (alpha+1)^N lambda^(N-1) / (1 + lambda r^g)^N ],
/// g = N(alpha+1)/(N-1), of -Delta_N u = |x|^{N alpha} e^u with finite
/// weighted mass. Derivatives are closed form, hand-differentiated;
/// finite differences appear only in test oracles.
class RadialSolution {
public:
    RadialSolution(Problem problem, double lambda);

    const Problem& problem() const { return problem_; }
    double lambda() const { return lambda_; }

    /// u(r); defined for r >= 0. Throws DomainError for r < 0.
    double value(double r) const;

    /// (u, u', u'') at r > 0. Throws DomainError for r <= 0, where the
    /// derivatives of the weighted family may be singular.
    RadialEval eval(double r) const;

    /// Closed-form N-Laplacian Delta_N u at r > 0; equals minus the weighted
    /// density for exact family members.
    double nlaplacian(double r) const;

    /// r^{N alpha} e^{u(r)}, the mass density of the weighted nonlinearity.
    double weighted_density(double r) const;

    /// log of weighted_density, composed in log space so extreme radii
    /// neither overflow nor underflow.
    double log_weighted_density(double r) const;

    /// Defect of the asymptotic law u ~ -slope*log r at large radii.
    AsymptoticsDefect check_asymptotics(double r_large) const;

private:
    Problem problem_;
    double lambda_;
    double gamma_;      // N(alpha+1)/(N-1)
    double log_amp_;    // log(c_N (alpha+1)^N lambda^(N-1))
};

/// The planar (N = 2) solution family in complex notation,
///   u(z) = log[ 8 (alpha+1)^2 lambda^2 / (1 + lambda^2 |z^(alpha+1) + c|^2)^2 ],
/// valid for every alpha > -1, with the shift c restricted to c = 0 unless
/// alpha is a nonnegative integer. Powers use the principal branch; for
/// non-integer alpha only |z^(alpha+1)| enters, so the branch never affects
/// values.
class PlanarSolution {
public:
    PlanarSolution(double alpha, double lambda, std::complex<double> shift = 0.0);

    double alpha() const { return alpha_; }
    double lambda() const { return lambda_; }
    std::complex<double> shift() const { return shift_; }

    double value(std::complex<double> z) const;

    /// Wirtinger derivatives assembled from the closed form. u is real, so
    /// u_zbar = conj(u_z) and u_zbzb = conj(u_zz); u_zzbar is real.
    struct Wirtinger {
        std::complex<double> uz;
        std::complex<double> uzz;
        double uzzbar;
    };
    Wirtinger wirtinger(std::complex<double> z) const;

    /// Real first/second derivatives recovered from the Wirtinger calculus.
    Eigen::Vector2d gradient(std::complex<double> z) const;
    Eigen::Matrix2d hessian(std::complex<double> z) const;

    /// |z|^{2 alpha} e^{u(z)}.
    double weighted_density(std::complex<double> z) const;

    /// True when alpha is a nonnegative integer, the only case where a
    /// nonzero shift keeps u a solution.
    static bool integer_weight(double alpha);

private:
    // z^p with the principal branch, patched at z = 0.
    std::complex<double> zpow(std::complex<double> z, double p) const;

    double alpha_;
    double lambda_;
    std::complex<double> shift_;
};

/// Pointwise defect of the planar equation under a 5-point finite-difference
/// Laplacian, with a Richardson-extrapolated value alongside.
struct PlanarResidual {
    std::complex<double> z;
    double value;           ///< |Delta_h u + |z|^{2 alpha} e^u| at step h
    double extrapolated;    ///< same with the h, h/2 Richardson combination
    double error_estimate;  ///< |value - extrapolated|, the O(h^2) term
};

/// Throws DomainError at z = 0 or h <= 0.
PlanarResidual residual_planar(const PlanarSolution& sol, std::complex<double> z, double h);

/// Scalar fields with closed-form derivatives, for the geometry and
/// P-function layers.
ScalarField u_field(const RadialSolution& sol);
ScalarField v_field(const RadialSolution& sol);  // v = e^{-u/N}
ScalarField u_field(const PlanarSolution& sol);
ScalarField v_field(const PlanarSolution& sol);  // v = e^{-u/2}

/// v = e^{-u/N} built from an arbitrary u-field (used for perturbed,
/// non-solution profiles in negative controls).
ScalarField v_field_from_u(const ScalarField& u, int n);

}  // namespace nliouville
