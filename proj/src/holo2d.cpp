#include "nliouville/holo2d.hpp"

#include <cmath>

namespace nliouville {

ComplexDiagnostic holomorphic_invariant(const PlanarSolution& sol, std::complex<double> z) {
    if (z == std::complex<double>(0.0))
        throw DomainError("holomorphic_invariant: z = 0 excluded");
    const auto d = sol.wirtinger(z);
    ComplexDiagnostic out;
    out.z = z;
    out.invariant = d.uzz - 0.5 * d.uz * d.uz - sol.alpha() * d.uz / z;
    out.method = ComplexDiagnostic::Method::analytic;
    return out;
}

ComplexDiagnostic holomorphic_invariant_fd(const PlanarSolution& sol, std::complex<double> z,
                                           double h) {
    if (z == std::complex<double>(0.0))
        throw DomainError("holomorphic_invariant_fd: z = 0 excluded");
    if (!(h > 0.0))
        throw DomainError("holomorphic_invariant_fd: step must be positive");
    const std::complex<double> ex(h, 0.0), ey(0.0, h);
    const double u0 = sol.value(z);
    const double ux = (sol.value(z + ex) - sol.value(z - ex)) / (2.0 * h);
    const double uy = (sol.value(z + ey) - sol.value(z - ey)) / (2.0 * h);
    const double uxx = (sol.value(z + ex) - 2.0 * u0 + sol.value(z - ex)) / (h * h);
    const double uyy = (sol.value(z + ey) - 2.0 * u0 + sol.value(z - ey)) / (h * h);
    const double uxy = (sol.value(z + ex + ey) - sol.value(z + ex - ey) -
                        sol.value(z - ex + ey) + sol.value(z - ex - ey)) /
                       (4.0 * h * h);

    const std::complex<double> i(0.0, 1.0);
    const std::complex<double> uz = 0.5 * (ux - i * uy);
    const std::complex<double> uzz = 0.25 * (uxx - uyy) - 0.5 * i * uxy;

    ComplexDiagnostic out;
    out.z = z;
    out.invariant = uzz - 0.5 * uz * uz - sol.alpha() * uz / z;
    out.method = ComplexDiagnostic::Method::finite_difference;
    return out;
}

double origin_gradient_decay(const PlanarSolution& sol, std::span<const double> radii) {
    if (sol.alpha() < 0.0)
        throw DomainError("origin_gradient_decay: requires alpha >= 0");
    if (radii.size() < 2)
        throw DomainError("origin_gradient_decay: need at least two radii");
    for (double r : radii)
        if (!(r > 0.0) || r > 0.1)
            throw DomainError("origin_gradient_decay: radii must lie in (0, 0.1]");

    // Worst angle at each radius; the decay bound is uniform in direction.
    constexpr int n_angles = 16;
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (double r : radii) {
        double worst = 0.0;
        for (int j = 0; j < n_angles; ++j) {
            const double theta = 2.0 * M_PI * j / n_angles + 0.1;
            const std::complex<double> z = std::polar(r, theta);
            worst = std::max(worst, 2.0 * std::abs(sol.wirtinger(z).uz));
        }
        const double lx = std::log(r);
        const double ly = std::log(worst);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double m = static_cast<double>(radii.size());
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace nliouville
