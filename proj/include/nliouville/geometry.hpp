#pragma once

#include <vector>

#include "nliouville/core.hpp"
#include "nliouville/field.hpp"

namespace nliouville {

/// Christoffel symbols at a point: symbols[i](k, j) = Gamma^i_{kj}.
using ChristoffelSymbols = std::vector<Mat>;

/// Ricci tensor of the conformal metric at a point, with the two invariants
/// that characterize it: the radial direction lies in the kernel and every
/// tangential direction carries the same eigenvalue.
struct RicciValue {
    Mat matrix;
    double tangential_eigenvalue;  ///< (N-2)(1-(alpha+1)^2)/|x|^2
};

/// The conformal-to-flat metric g = |x|^(2 alpha) delta on R^N \ {0}.
class ConformalMetric {
public:
    ConformalMetric(int n, double alpha);

    int dim() const { return n_; }
    double alpha() const { return alpha_; }

    /// |x|^(2 alpha), the conformal factor multiplying the flat metric.
    double factor(const Vec& x) const;

    Mat components(const Vec& x) const;  ///< g_ij
    Mat inverse(const Vec& x) const;     ///< g^ij

    /// Gamma^i_{kj} = alpha |x|^-2 (x^k d_ij + x^j d_ik - x^i d_kj).
    /// Throws DomainError at x = 0.
    ChristoffelSymbols christoffel(const Vec& x) const;

    /// Closed-form Ricci tensor; zero in dimension two.
    RicciValue ricci(const Vec& x) const;

    /// g-Hessian of a scalar field,
    ///   H_g(f) = D^2 f + (grad phi . grad f) I - (dphi x df + df x dphi),
    /// phi = alpha log|x|. Falls back to a finite-difference Hessian with
    /// step fd_step (default 1e-5 (1+|x|)) when the field carries none.
    Mat g_hessian(const ScalarField& f, const Vec& x, double fd_step = -1.0) const;

    /// |grad_g f|_g = |x|^(-alpha) |grad f|.
    double gradient_norm(const ScalarField& f, const Vec& x) const;

    /// Laplace-Beltrami operator: |x|^(-2 alpha) (Delta f + (N-2) grad phi . grad f).
    double laplace_beltrami(const ScalarField& f, const Vec& x, double fd_step = -1.0) const;

    /// Squared g-norm of a covariant 2-tensor, |T|_g^2 = g^ik g^jl T_ij T_kl.
    double tensor_norm_sq(const Mat& t, const Vec& x) const;

private:
    void require_off_origin(const Vec& x, const char* where) const;

    int n_;
    double alpha_;
};

}  // namespace nliouville
