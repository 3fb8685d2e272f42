#pragma once

#include <array>
#include <functional>

#include <Eigen/Dense>

namespace nliouville {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// One-dimensional radial profile evaluated together with its first two
/// derivatives: returns {f(r), f'(r), f''(r)}.
using RadialProfile = std::function<std::array<double, 3>(double)>;

/// A scalar field passed around as a value/gradient/Hessian callback triple,
/// so closed-form derivatives plug in without finite differences.
/// The Hessian callback may be empty; consumers then fall back to finite
/// differences of the gradient.
struct ScalarField {
    std::function<double(const Vec&)> value;
    std::function<Vec(const Vec&)> gradient;
    std::function<Mat(const Vec&)> hessian;

    bool has_hessian() const { return static_cast<bool>(hessian); }
};

/// Lifts a radial profile f(|x|) to a scalar field on R^N with exact
/// gradient f'(r) x/r and Hessian f'' P_r + (f'/r)(I - P_r).
ScalarField radial_scalar_field(RadialProfile profile);

/// Central-difference gradient of the field's value callback.
Vec fd_gradient(const ScalarField& f, const Vec& x, double h);

/// Central-difference Hessian, built from the gradient callback when present
/// and from second differences of the value otherwise.
Mat fd_hessian(const ScalarField& f, const Vec& x, double h);

/// Five-point (2N+1 in dimension N) central-difference Laplacian of `value`.
double fd_laplacian(const std::function<double(const Vec&)>& value, const Vec& x, double h);

}  // namespace nliouville
