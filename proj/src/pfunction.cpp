#include "nliouville/pfunction.hpp"

#include <cmath>

namespace nliouville {

PProfile::PProfile(Problem problem, ScalarField v, std::optional<OriginExtension> origin)
    : problem_(problem),
      metric_(problem.dim(), problem.alpha()),
      v_(std::move(v)),
      origin_(origin) {}

PProfile PProfile::radial(const RadialSolution& sol) {
    // |grad_g v|_g ~ r^((alpha+1)/(N-1)) -> 0 at the center.
    const double v0 = std::exp(-sol.value(0.0) / sol.problem().dim());
    return PProfile(sol.problem(), v_field(sol), OriginExtension{v0, 0.0});
}

PProfile PProfile::planar(const PlanarSolution& sol) {
    const Problem problem(2, sol.alpha());
    const double l2 = sol.lambda() * sol.lambda();
    const double c_abs = std::abs(sol.shift());
    const double v0 = std::exp(-sol.value(0.0) / 2.0);
    const double gradient_norm =
        v0 * 2.0 * l2 * (sol.alpha() + 1.0) * c_abs / (1.0 + l2 * c_abs * c_abs);
    return PProfile(problem, v_field(sol), OriginExtension{v0, gradient_norm});
}

PProfile PProfile::from_u_field(const Problem& problem, const ScalarField& u) {
    return PProfile(problem, v_field_from_u(u, problem.dim()), std::nullopt);
}

double PProfile::v_value(const Vec& x) const {
    if (x.norm() == 0.0 && origin_)
        return origin_->v0;
    return v_.value(x);
}

double PProfile::gradient_norm_g(const Vec& x) const {
    if (x.norm() == 0.0) {
        if (problem_.alpha() >= 0.0 && origin_)
            return origin_->gradient_norm;
        throw DomainError("PProfile::gradient_norm_g: no continuous extension at the origin");
    }
    return std::pow(x.squaredNorm(), -problem_.alpha() / 2.0) * v_.gradient(x).norm();
}

double PProfile::p_value(const Vec& x) const {
    const int n = problem_.dim();
    const double g = gradient_norm_g(x);
    return ((n - 1) * std::pow(g, n) + std::pow(double(n), 1.0 - n)) / v_value(x);
}

ConstancyCertificate constancy_certificate(const PProfile& profile, std::span<const Vec> points) {
    ConstancyCertificate cert{0.0, 0.0};
    if (points.empty())
        throw DomainError("constancy_certificate: no sample points");
    std::vector<double> values;
    values.reserve(points.size());
    for (const Vec& x : points)
        values.push_back(profile.p_value(x));
    for (double p : values)
        cert.p0 += p;
    cert.p0 /= static_cast<double>(values.size());
    for (double p : values)
        cert.max_dev = std::max(cert.max_dev, std::abs(p - cert.p0));
    return cert;
}

ConstancyCertificate constancy_certificate(const PProfile& profile, const RadialGrid& grid) {
    std::vector<Vec> points;
    points.reserve(grid.points.size());
    const int n = profile.problem().dim();
    for (double r : grid.points) {
        Vec x = Vec::Zero(n);
        x[0] = r;
        points.push_back(std::move(x));
    }
    return constancy_certificate(profile, points);
}

double lambda_from_p0(const Problem& problem, double p0) {
    if (!(p0 > 0.0))
        throw DomainError("lambda_from_p0: P constant must be positive");
    const double n = problem.dim();
    const double exponent = n / (n - 1.0);
    return std::pow(p0, exponent) * std::pow(n, n - 1.0) * (n - 1.0) /
           std::pow(n * (problem.alpha() + 1.0), exponent);
}

double planar_lambda_from_p0(double alpha, double p0) {
    if (!(p0 > 0.0))
        throw DomainError("planar_lambda_from_p0: P constant must be positive");
    if (!(alpha > -1.0))
        throw DomainError("planar_lambda_from_p0: requires alpha > -1");
    return p0 / (std::sqrt(2.0) * (alpha + 1.0));
}

double radial_p0(const Problem& problem, double lambda) {
    if (!(lambda > 0.0))
        throw DomainError("radial_p0: scale must be positive");
    const double n = problem.dim();
    return std::pow(problem.constants().c_n, 1.0 / n) * (problem.alpha() + 1.0) *
           std::pow(lambda, (n - 1.0) / n) / std::pow(n, n - 1.0);
}

ETensorCheck e_tensor(const PProfile& profile, const Vec& x, double h) {
    if (x.norm() == 0.0)
        throw DomainError("e_tensor: the metric is singular at the origin");
    const int n = profile.problem().dim();
    const Vec grad = profile.v().gradient(x);
    const double gnorm = grad.norm();
    if (gnorm < 1e-12)
        throw CriticalPointError("e_tensor: |grad v| below 1e-12, coefficient matrix degenerate");

    const Mat a = std::pow(gnorm, n - 2) * Mat::Identity(n, n) +
                  (n - 2) * std::pow(gnorm, n - 4) * grad * grad.transpose();
    const Mat hg = profile.metric().g_hessian(profile.v(), x, h);
    const double weight = std::pow(x.squaredNorm(), -profile.problem().alpha() * n / 2.0);

    ETensorCheck check;
    check.p = profile.p_value(x);
    check.w_matrix = weight * a * hg;
    check.e_matrix = check.w_matrix - check.p / n * Mat::Identity(n, n);
    check.frob_norm_e = check.e_matrix.norm();
    check.trace_w = check.w_matrix.trace();
    return check;
}

SubharmonicityProbe subharmonicity_probe_2d(const PProfile& profile, const Vec& x, double h) {
    if (profile.problem().dim() != 2)
        throw DomainError("subharmonicity_probe_2d: defined for n = 2 only");
    if (x.norm() == 0.0)
        throw DomainError("subharmonicity_probe_2d: x = 0 excluded");
    if (!(h > 0.0))
        throw DomainError("subharmonicity_probe_2d: step must be positive");

    const double p = profile.p_value(x);
    const double conformal = std::pow(x.squaredNorm(), profile.problem().alpha());

    SubharmonicityProbe probe;
    probe.laplace_g_p =
        fd_laplacian([&profile](const Vec& y) { return profile.p_value(y); }, x, h) / conformal;
    const Mat hg = profile.metric().g_hessian(profile.v(), x, h);
    const Mat t = hg - p / 2.0 * profile.metric().components(x);
    probe.rhs = 2.0 / profile.v_value(x) * profile.metric().tensor_norm_sq(t, x);
    return probe;
}

}  // namespace nliouville
