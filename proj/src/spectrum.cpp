#include "nliouville/spectrum.hpp"

#include <algorithm>
#include <cmath>

namespace nliouville {

namespace {

double sphere_eigenvalue(int n, int k) {
    return static_cast<double>(k) * (n - 2 + k);
}

struct ModeCoefficients {
    double q;    // N/(N-1), power of the reduced radius
    double drift;  // N(N-2)/(N-1), coefficient of the first-order term
    double potential;  // N^3/(N-1)^2, strength of the potential term
};

ModeCoefficients coefficients(int n) {
    const double nd = n;
    return {nd / (nd - 1.0), nd * (nd - 2.0) / (nd - 1.0),
            nd * nd * nd / ((nd - 1.0) * (nd - 1.0))};
}

}  // namespace

ModeODE make_mode_ode(int n, double alpha, int k) {
    if (n < 2)
        throw DomainError("make_mode_ode: need n >= 2");
    if (!(alpha > -1.0))
        throw DomainError("make_mode_ode: need alpha > -1");
    if (k < 0)
        throw DomainError("make_mode_ode: mode index must be nonnegative");
    ModeODE mode;
    mode.n = n;
    mode.alpha = alpha;
    mode.k = k;
    mode.mu = sphere_eigenvalue(n, k);
    mode.beta = mode.mu / ((n - 1) * (alpha + 1.0) * (alpha + 1.0));
    return mode;
}

RadialProfile power_rational_profile(double a, double g, double b, double scale, double offset) {
    return [a, g, b, scale, offset](double r) {
        const double rho = std::pow(r, g);
        const double den = 1.0 + rho;
        const double h = std::pow(r, a) * std::pow(den, -b);
        const double psi = a + (a - b * g) * rho;
        const double hp = std::pow(r, a - 1.0) * std::pow(den, -b - 1.0) * psi;
        const double hpp = std::pow(r, a - 2.0) * std::pow(den, -b - 2.0) *
                           ((a - 1.0) * den * psi - (b + 1.0) * g * rho * psi +
                            (a - b * g) * g * rho * den);
        return std::array<double, 3>{offset + scale * h, scale * hp, scale * hpp};
    };
}

RadialProfile eta_bar0(int n) {
    const double q = coefficients(n).q;
    return power_rational_profile(0.0, q, 1.0, static_cast<double>(n), -1.0);
}

RadialProfile eta_bar1(int n) {
    const double q = coefficients(n).q;
    return power_rational_profile(1.0 / (n - 1.0), q, 1.0);
}

double eta_bar0_zero(int n) {
    return std::pow(n - 1.0, (n - 1.0) / n);
}

double mode_equation_residual(int n, double beta, double lam, const RadialProfile& eta,
                              double r) {
    if (!(r > 0.0))
        throw DomainError("mode_equation_residual: requires r > 0");
    const auto c = coefficients(n);
    const double rho = std::pow(r, c.q);
    const double den = 1.0 + rho;
    const auto e = eta(r);
    return e[2] + (1.0 + c.drift / den) * e[1] / r - beta * e[0] / (r * r) +
           lam * c.potential * rho / (r * r * den * den) * e[0];
}

double mode_ode_residual(int n, double beta, const RadialProfile& eta, double r) {
    return mode_equation_residual(n, beta, 1.0, eta, r);
}

double mode_ode_residual(const ModeODE& mode, const RadialProfile& eta, double r) {
    return mode_equation_residual(mode.n, mode.beta, 1.0, eta, r);
}

double indicial_root(int n, double beta) {
    const double half_drift = coefficients(n).drift / 2.0;
    return -half_drift + std::sqrt(half_drift * half_drift + beta);
}

ClosedFormEigenvalue closed_form_eigenvalue(int n, double alpha, int k) {
    const ModeODE mode = make_mode_ode(n, alpha, k);
    const double nd = n;
    const double weighted_mu = 4.0 * (nd - 1.0) * mode.mu / ((alpha + 1.0) * (alpha + 1.0));
    const double disc = std::sqrt(nd * nd * (nd - 2.0) * (nd - 2.0) + weighted_mu);
    ClosedFormEigenvalue out;
    out.a_k = (disc - nd * (nd - 2.0)) / (2.0 * (nd - 1.0));
    out.b_k = (disc + std::sqrt(weighted_mu) - nd * (nd - 2.0)) / (2.0 * nd);
    out.lambda_k = out.b_k * (nd + out.b_k - 1.0) / nd;
    return out;
}

RadialProfile closed_form_eigenfunction(int n, double alpha, int k) {
    const auto eigen = closed_form_eigenvalue(n, alpha, k);
    return power_rational_profile(eigen.a_k, coefficients(n).q, eigen.b_k);
}

SLProblem make_sl_problem(int n, double spectral_param) {
    const auto c = coefficients(n);
    const double c_n = Problem(n, 0.0).constants().c_n;
    SLProblem sl;
    sl.n = n;
    sl.spectral_param = spectral_param;
    sl.p = [n, c](double r) {
        const double rho = std::pow(r, c.q);
        const double slope = n * c.q * std::pow(r, c.q - 1.0) / (1.0 + rho);
        return std::pow(slope, n - 2) * std::pow(r, n - 1);
    };
    sl.q = [n, c_n, c](double r) {
        const double rho = std::pow(r, c.q);
        return -c_n * std::pow(r, n - 1) / ((n - 1.0) * std::pow(1.0 + rho, n));
    };
    sl.w = [sl_p = sl.p](double r) { return sl_p(r) / (r * r); };
    return sl;
}

// ---------------------------------------------------------------------------
// Shooting machinery
// ---------------------------------------------------------------------------

namespace {

// Mode equation in the log radius t = log r:
//   y'' + drift/(1+E) y' + (-beta + lam * potential * E/(1+E)^2) y = 0,  E = e^{qt}.
struct LogOde {
    double q, drift, potential;
    double beta, lam;

    void operator()(double t, const double y[2], double dy[2]) const {
        const double e_exp = q * t;
        double inv1pe, pot;
        if (e_exp > 500.0) {
            inv1pe = std::exp(-e_exp);
            pot = inv1pe;
        } else {
            const double e = std::exp(e_exp);
            inv1pe = 1.0 / (1.0 + e);
            pot = e * inv1pe * inv1pe;
        }
        dy[0] = y[1];
        dy[1] = -drift * inv1pe * y[1] - (-beta + lam * potential * pot) * y[0];
    }
};

struct IntegrationResult {
    double y[2];
    int sign_changes;
};

// Dormand-Prince 5(4) with renormalization: the mode solutions grow like
// e^{s t}, so the state is rescaled (a positive factor, harmless for
// Wronskian signs and node counts) whenever it leaves [1e-140, 1e140].
IntegrationResult integrate_mode(const LogOde& ode, double t0, double t1, const double y0[2],
                                 double rel_tol) {
    static const double a[7][6] = {
        {},
        {1.0 / 5},
        {3.0 / 40, 9.0 / 40},
        {44.0 / 45, -56.0 / 15, 32.0 / 9},
        {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
        {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
        {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}};
    static const double c[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
    static const double e[7] = {35.0 / 384 - 5179.0 / 57600,
                                0.0,
                                500.0 / 1113 - 7571.0 / 16695,
                                125.0 / 192 - 393.0 / 640,
                                -2187.0 / 6784 + 92097.0 / 339200,
                                11.0 / 84 - 187.0 / 2100,
                                -1.0 / 40};

    IntegrationResult res;
    res.y[0] = y0[0];
    res.y[1] = y0[1];
    res.sign_changes = 0;

    const double dir = t1 > t0 ? 1.0 : -1.0;
    double t = t0;
    double h = dir * 1e-4;
    double last_sign = res.y[0] > 0 ? 1.0 : (res.y[0] < 0 ? -1.0 : 0.0);
    int steps = 0;
    const int max_steps = 20'000'000;

    while ((t1 - t) * dir > 0.0) {
        if (++steps > max_steps)
            throw ConvergenceError("integrate_mode: step budget exhausted",
                                   {res.y[0], res.y[1], t});
        if ((t + h - t1) * dir > 0.0)
            h = t1 - t;

        double k[7][2];
        ode(t, res.y, k[0]);
        double ytmp[2];
        for (int stage = 1; stage < 7; ++stage) {
            ytmp[0] = res.y[0];
            ytmp[1] = res.y[1];
            for (int j = 0; j < stage; ++j) {
                ytmp[0] += h * a[stage][j] * k[j][0];
                ytmp[1] += h * a[stage][j] * k[j][1];
            }
            ode(t + c[stage] * h, ytmp, k[stage]);
        }
        // stage 6 state is the 5th-order solution
        double ynew[2] = {ytmp[0], ytmp[1]};
        double err[2] = {0.0, 0.0};
        for (int j = 0; j < 7; ++j) {
            err[0] += e[j] * k[j][0];
            err[1] += e[j] * k[j][1];
        }
        err[0] *= h;
        err[1] *= h;
        const double scale =
            rel_tol * std::max({std::abs(res.y[0]), std::abs(res.y[1]), std::abs(ynew[0]),
                                std::abs(ynew[1]), 1e-290});
        const double err_norm = std::max(std::abs(err[0]), std::abs(err[1])) / scale;

        if (err_norm <= 1.0) {
            t += h;
            res.y[0] = ynew[0];
            res.y[1] = ynew[1];
            const double sign = res.y[0] > 0 ? 1.0 : (res.y[0] < 0 ? -1.0 : 0.0);
            if (sign != 0.0 && last_sign != 0.0 && sign != last_sign)
                ++res.sign_changes;
            if (sign != 0.0)
                last_sign = sign;
            const double mag = std::max(std::abs(res.y[0]), std::abs(res.y[1]));
            if (mag > 1e140 || (mag > 0.0 && mag < 1e-140)) {
                res.y[0] /= mag;
                res.y[1] /= mag;
            }
        }
        const double factor =
            std::clamp(0.9 * std::pow(std::max(err_norm, 1e-10), -0.2), 0.2, 5.0);
        h *= factor;
        if (std::abs(h) < 1e-14)
            h = dir * 1e-14;
    }
    return res;
}

struct ShotPair {
    IntegrationResult left;
    IntegrationResult right;
};

ShotPair shoot_both(int n, double beta, double lam, const ShootingOptions& opt) {
    const auto c = coefficients(n);
    LogOde ode{c.q, c.drift, c.potential, beta, lam};

    // Frobenius start at r_min: eta = r^s (1 + a1 rho + a2 rho^2), rho = r^q.
    // The exponent is clamped real so the mismatch stays continuous when a
    // bracket dips below the indicial threshold.
    const double half_drift = c.drift / 2.0;
    const double s = -half_drift + std::sqrt(std::max(half_drift * half_drift + beta, 0.0));
    const auto indicial = [&](double m) { return m * m + c.drift * m - beta; };
    const double a1 = (c.drift * s - lam * c.potential) / indicial(s + c.q);
    const double a2 = -(a1 * (lam * c.potential - c.drift * (s + c.q)) +
                        (c.drift * s - 2.0 * lam * c.potential)) /
                      indicial(s + 2.0 * c.q);
    const double rho0 = std::pow(opt.r_min, c.q);
    double yl[2];
    yl[0] = 1.0 + a1 * rho0 + a2 * rho0 * rho0;
    yl[1] = s * yl[0] + c.q * (a1 * rho0 + 2.0 * a2 * rho0 * rho0);

    // Decay start at r_max: eta = r^{-sqrt(beta)} (1 + d1 rho^{-1}).
    const double tail = -std::sqrt(std::max(beta, 0.0));
    const double d1 =
        -(c.drift * tail + lam * c.potential) / ((tail - c.q) * (tail - c.q) - beta);
    const double inv_rho1 = std::pow(opt.r_max, -c.q);
    double yr[2];
    yr[0] = 1.0 + d1 * inv_rho1;
    yr[1] = tail * yr[0] - c.q * d1 * inv_rho1;

    ShotPair pair;
    pair.left = integrate_mode(ode, std::log(opt.r_min), std::log(opt.r_match), yl,
                               opt.ode_rel_tol);
    pair.right = integrate_mode(ode, std::log(opt.r_max), std::log(opt.r_match), yr,
                                opt.ode_rel_tol);
    return pair;
}

double mismatch_of(const ShotPair& pair) {
    const double wronskian =
        pair.left.y[0] * pair.right.y[1] - pair.left.y[1] * pair.right.y[0];
    const double norm = std::hypot(pair.left.y[0], pair.left.y[1]) *
                        std::hypot(pair.right.y[0], pair.right.y[1]);
    return wronskian / norm;
}

// Brent's method with a validated bracket.
template <class F>
double brent_root(F f, double a, double b, double fa, double fb, double tol, int max_iter) {
    if (fa == 0.0)
        return a;
    if (fb == 0.0)
        return b;
    if (fa * fb > 0.0)
        throw BracketError("brent_root: no sign change in bracket");
    double cc = a, fc = fa, d = b - a, ee = d;
    for (int iter = 0; iter < max_iter; ++iter) {
        if (fb * fc > 0.0) {
            cc = a;
            fc = fa;
            d = b - a;
            ee = d;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b;
            b = cc;
            cc = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol1 = 2.0 * 1e-16 * std::abs(b) + 0.5 * tol;
        const double xm = 0.5 * (cc - b);
        if (std::abs(xm) <= tol1 || fb == 0.0)
            return b;
        if (std::abs(ee) >= tol1 && std::abs(fa) > std::abs(fb)) {
            double p, qd;
            const double sd = fb / fa;
            if (a == cc) {
                p = 2.0 * xm * sd;
                qd = 1.0 - sd;
            } else {
                const double qq = fa / fc, rr = fb / fc;
                p = sd * (2.0 * xm * qq * (qq - rr) - (b - a) * (rr - 1.0));
                qd = (qq - 1.0) * (rr - 1.0) * (sd - 1.0);
            }
            if (p > 0.0)
                qd = -qd;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * qd - std::abs(tol1 * qd), std::abs(ee * qd))) {
                ee = d;
                d = p / qd;
            } else {
                d = xm;
                ee = d;
            }
        } else {
            d = xm;
            ee = d;
        }
        a = b;
        fa = fb;
        b += std::abs(d) > tol1 ? d : (xm > 0 ? tol1 : -tol1);
        fb = f(b);
    }
    throw ConvergenceError("brent_root: iteration budget exhausted", {a, b, fb});
}

}  // namespace

double shooting_mismatch(int n, double beta, double lam, const ShootingOptions& opt) {
    return mismatch_of(shoot_both(n, beta, lam, opt));
}

double sl_solve_beta(int n, std::pair<double, double> bracket, double tol,
                     const ShootingOptions& opt) {
    if (!(tol > 0.0))
        throw DomainError("sl_solve_beta: tolerance must be positive");
    // For beta < 0 every solution oscillates boundedly at both ends and no
    // principal branch exists, so the raw Wronskian carries no information
    // there. The mismatch is continued oddly across zero: brackets straddling
    // the boundary converge to the genuine eigenvalue beta = 0, and brackets
    // strictly inside beta < 0 keep one sign.
    const auto f = [&](double beta) {
        return beta >= 0.0 ? shooting_mismatch(n, beta, 1.0, opt)
                           : -shooting_mismatch(n, -beta, 1.0, opt);
    };
    const double fa = f(bracket.first);
    const double fb = f(bracket.second);
    if (fa * fb > 0.0)
        throw BracketError("sl_solve_beta: mismatch keeps one sign on the bracket");
    return brent_root(f, bracket.first, bracket.second, fa, fb, tol, 200);
}

double sl_solve_lambda(int n, double alpha, int k, int index, double tol,
                       const ShootingOptions& opt) {
    if (index != 0)
        throw DomainError("sl_solve_lambda: only the ground state (index 0) is supported");
    if (!(tol > 0.0))
        throw DomainError("sl_solve_lambda: tolerance must be positive");
    const ModeODE mode = make_mode_ode(n, alpha, k);
    const auto f = [&](double lam) { return shooting_mismatch(n, mode.beta, lam, opt); };

    const double lambda_cap = 500.0;
    double step = 0.25;
    for (int attempt = 0; attempt < 5; ++attempt) {
        double lo = -0.25;
        double flo = f(lo);
        bool found = false;
        while (lo < lambda_cap) {
            const double hi = lo + step;
            const double fhi = f(hi);
            if (flo == 0.0 || fhi == 0.0 || flo * fhi < 0.0) {
                const double root = brent_root(f, lo, hi, flo, fhi, tol, 200);
                const ShotPair pair = shoot_both(n, mode.beta, root, opt);
                if (pair.left.sign_changes + pair.right.sign_changes == 0)
                    return root;
                found = true;  // landed on an excited state: rescan finer
                break;
            }
            lo = hi;
            flo = fhi;
        }
        if (!found && lo >= lambda_cap)
            throw ConvergenceError("sl_solve_lambda: no spectral point below the scan cap",
                                   {lo, flo, step});
        step *= 0.5;
    }
    throw ConvergenceError("sl_solve_lambda: ground state not isolated by the scan",
                           {step, 0.0, 0.0});
}

// ---------------------------------------------------------------------------
// Degeneracy catalog and Morse data
// ---------------------------------------------------------------------------

double degeneracy_alpha(int n, int k) {
    return std::sqrt(sphere_eigenvalue(n, k) / (n - 1.0)) - 1.0;
}

double morse_threshold(int n, double alpha) {
    const double nd = n;
    return (2.0 - nd +
            std::sqrt((nd - 2.0) * (nd - 2.0) + 4.0 * (nd - 1.0) * (alpha + 1.0) * (alpha + 1.0))) /
           2.0;
}

MorseCount morse_count(int n, double alpha) {
    if (!(alpha > -1.0))
        throw DomainError("morse_count: need alpha > -1");
    MorseCount out;
    out.s_threshold = morse_threshold(n, alpha);
    out.total = 0;
    // strict k < S; the 1e-12 guard keeps the boundary modes excluded when S
    // lands on an integer up to rounding (weights at a degeneracy value)
    for (int k = 0; k + 1e-12 < out.s_threshold; ++k)
        out.total += harmonic_multiplicity(n, k);
    return out;
}

SpectralReport degeneracy_catalog(int n, double alpha, int k_max) {
    if (k_max < 1)
        throw DomainError("degeneracy_catalog: need k_max >= 1");
    const Problem problem(n, alpha);  // validates (n, alpha)
    SpectralReport report;
    report.n = n;
    report.alpha = alpha;
    report.s_threshold = morse_threshold(n, alpha);
    report.morse_total = morse_count(n, alpha).total;

    report.kernel_dim = 1;
    for (int k = 1;; ++k) {
        const double ak = degeneracy_alpha(n, k);
        if (ak > alpha + 1.0)
            break;
        // ties within 1e-12 are classified as degenerate for deterministic reporting
        if (std::abs(ak - alpha) <= 1e-12) {
            report.kernel_dim = 1 + harmonic_multiplicity(n, k);
            break;
        }
    }

    for (int k = 1; k <= k_max; ++k) {
        DegenerateMode mode;
        mode.k = k;
        mode.alpha_k = degeneracy_alpha(n, k);
        mode.multiplicity = harmonic_multiplicity(n, k);
        mode.kernel_dim = 1 + mode.multiplicity;
        mode.translation_modes = (k == 1);
        mode.within_range = mode.alpha_k <= alpha + 1e-12;
        report.modes.push_back(mode);
    }
    for (int k = 0; k <= k_max; ++k)
        report.lambda_k.push_back(closed_form_eigenvalue(n, alpha, k).lambda_k);
    return report;
}

// ---------------------------------------------------------------------------
// Kernel functions of the linearized operator
// ---------------------------------------------------------------------------

KernelFunction::KernelFunction(Kind kind, int n, double alpha, int k, int index)
    : kind_(kind), n_(n), alpha_(alpha), k_(k), index_(index) {}

KernelFunction KernelFunction::scaling(int n, double alpha) {
    Problem(n, alpha);  // validates
    return KernelFunction(Kind::scaling, n, alpha, 0, 0);
}

KernelFunction KernelFunction::translation(int n, int axis) {
    if (axis < 0 || axis >= n)
        throw DomainError("KernelFunction::translation: axis out of range");
    return KernelFunction(Kind::translation, n, 0.0, 1, axis);
}

KernelFunction KernelFunction::harmonic(int n, double alpha, int k, int index) {
    Problem(n, alpha);
    if (k < 1)
        throw DomainError("KernelFunction::harmonic: mode index must be >= 1");
    if (index < 0 || index >= harmonic_multiplicity(n, k))
        throw DomainError("KernelFunction::harmonic: harmonic index out of range");
    return KernelFunction(Kind::harmonic, n, alpha, k, index);
}

ScalarField KernelFunction::field() const {
    const double nd = n_;
    const double profile_power = nd * (alpha_ + 1.0) / (nd - 1.0);
    switch (kind_) {
        case Kind::scaling:
            return radial_scalar_field(
                power_rational_profile(0.0, profile_power, 1.0, nd, -1.0));
        case Kind::translation:
            return separated_field(
                power_rational_profile(1.0 / (nd - 1.0) - 1.0, nd / (nd - 1.0), 1.0,
                                       nd * nd / (nd - 1.0)),
                harmonic_basis(n_, 1, index_));
        case Kind::harmonic:
            return separated_field(
                power_rational_profile((alpha_ + 1.0) / (nd - 1.0) - k_, profile_power, 1.0),
                harmonic_basis(n_, k_, index_));
    }
    throw std::logic_error("KernelFunction::field: unreachable");
}

double KernelFunction::origin_limit() const {
    return kind_ == Kind::scaling ? n_ - 1.0 : 0.0;
}

double linearized_defect(int n, double alpha, const ScalarField& phi, const Vec& x) {
    const double r2 = x.squaredNorm();
    if (r2 == 0.0)
        throw DomainError("linearized_defect: x = 0 excluded");
    const double nd = n;
    const double rho = std::pow(std::sqrt(r2), nd * (alpha + 1.0) / (nd - 1.0));
    const double den = 1.0 + rho;
    const Vec grad = phi.gradient(x);
    const Mat hess = phi.hessian(x);
    const double val = phi.value(x);
    return r2 * hess.trace() + nd * (nd - 2.0) * (alpha + 1.0) * x.dot(grad) / den +
           (nd - 2.0) * x.dot(hess * x) +
           nd * nd * nd * (alpha + 1.0) * (alpha + 1.0) / (nd - 1.0) * rho * val / (den * den);
}

double kernel_residual(int n, double alpha, const ScalarField& phi,
                       std::span<const Vec> points) {
    if (n > 3)
        throw DomainError(
            "kernel_residual: full-space residuals cover n in {2, 3}; use the mode equation "
            "for higher dimensions");
    double worst = 0.0;
    for (const Vec& x : points)
        worst = std::max(worst, std::abs(linearized_defect(n, alpha, phi, x)));
    return worst;
}

double kernel_residual(int n, double alpha, const KernelFunction& fn,
                       std::span<const Vec> points) {
    return kernel_residual(n, alpha, fn.field(), points);
}

}  // namespace nliouville
