#pragma once

#include <optional>
#include <span>

#include "nliouville/geometry.hpp"
#include "nliouville/solutions.hpp"

namespace nliouville {

/// Conformal profile of a solution: v = e^(-u/N) together with the metric
/// g = |x|^(2 alpha) delta, exposing the scalar
///   P = (1/v) [ (N-1) |grad_g v|_g^N + N^(1-N) ],
/// which is constant exactly on the classified solution families.
class PProfile {
public:
    /// Continuous extension of the profile at the puncture: the value v(0)
    /// and the limit of |grad_g v|_g. Attached for family members, absent for
    /// arbitrary fields.
    struct OriginExtension {
        double v0;
        double gradient_norm;
    };

    PProfile(Problem problem, ScalarField v,
             std::optional<OriginExtension> origin = std::nullopt);

    static PProfile radial(const RadialSolution& sol);
    static PProfile planar(const PlanarSolution& sol);
    /// Builds the profile of an arbitrary (typically non-solution) u-field;
    /// used as a negative control. P is then not expected to be constant.
    static PProfile from_u_field(const Problem& problem, const ScalarField& u);

    const Problem& problem() const { return problem_; }
    const ConformalMetric& metric() const { return metric_; }
    const ScalarField& v() const { return v_; }

    double v_value(const Vec& x) const;

    /// |grad_g v|_g = |x|^(-alpha) |grad v|. At x = 0 returns the continuous
    /// extension when one is attached (alpha >= 0 family members).
    double gradient_norm_g(const Vec& x) const;

    /// P at x. Throws DomainError at x = 0 unless alpha >= 0 and the profile
    /// carries its origin extension.
    double p_value(const Vec& x) const;

private:
    Problem problem_;
    ConformalMetric metric_;
    ScalarField v_;
    std::optional<OriginExtension> origin_;
};

struct ConstancyCertificate {
    double p0;       ///< mean of P over the samples
    double max_dev;  ///< max |P - p0|
};

ConstancyCertificate constancy_certificate(const PProfile& profile, std::span<const Vec> points);

/// Samples along the first coordinate axis at the grid radii.
ConstancyCertificate constancy_certificate(const PProfile& profile, const RadialGrid& grid);

/// The scale of the radial family whose P-function constant equals p0:
///   lambda = p0^(N/(N-1)) N^(N-1) (N-1) / [N(alpha+1)]^(N/(N-1)).
/// Throws DomainError if p0 <= 0.
double lambda_from_p0(const Problem& problem, double p0);

/// Two-dimensional dictionary for the planar family written with lambda^2:
/// lambda = p0 / (sqrt(2) (alpha+1)).
double planar_lambda_from_p0(double alpha, double p0);

/// Closed-form P constant of the radial family member with scale lambda:
///   p0 = c_N^(1/N) (alpha+1) lambda^((N-1)/N) / N^(N-1).
double radial_p0(const Problem& problem, double lambda);

/// The Hessian-like matrix W = |x|^(-N alpha) A(v) H_g(v), its trace-free
/// part E = W - (P/N) Id, and the norms certifying E = 0 on solutions.
struct ETensorCheck {
    Mat w_matrix;
    Mat e_matrix;
    double frob_norm_e;
    double trace_w;  ///< equals P up to evaluation error
    double p;
};

/// Assembles W from the closed-form gradient and the g-Hessian; h is the
/// finite-difference step used only when the profile carries no Hessian.
/// Throws DomainError at x = 0 and CriticalPointError when |grad v| < 1e-12.
ETensorCheck e_tensor(const PProfile& profile, const Vec& x, double h);

/// Two-dimensional subharmonicity probe: finite-difference Laplace-Beltrami
/// of P against the right-hand side 2 v^-1 |H_g(v) - (P/2)g|_g^2. Both vanish
/// on exact family members; they agree only on solutions.
struct SubharmonicityProbe {
    double laplace_g_p;
    double rhs;
};

SubharmonicityProbe subharmonicity_probe_2d(const PProfile& profile, const Vec& x, double h);

}  // namespace nliouville
