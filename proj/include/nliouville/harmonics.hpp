#pragma once

#include "nliouville/core.hpp"
#include "nliouville/field.hpp"

namespace nliouville {

/// Dimension M(k) of the space of homogeneous harmonic polynomials of
/// degree k in R^N: (N+2k-2)(N+k-3)! / ((N-2)! k!), with M(0) = 1.
int harmonic_multiplicity(int n, int k);

/// A homogeneous harmonic polynomial with exact derivatives.
struct HarmonicPolynomial {
    int dim;
    int degree;
    ScalarField field;
};

/// Basis element i (0-based, i < M(k)) of the degree-k harmonics.
/// N = 2: {Re z^k, Im z^k} for any k. N = 3: tabulated solid harmonics
/// through degree 4. Throws DomainError outside this coverage.
HarmonicPolynomial harmonic_basis(int n, int k, int i);

/// Product f(|x|) Y(x) with derivatives assembled from the profile's and the
/// polynomial's closed forms.
ScalarField separated_field(RadialProfile f, const HarmonicPolynomial& y);

}  // namespace nliouville
