#include "nliouville/verify.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "nliouville/holo2d.hpp"
#include "nliouville/parallel.hpp"
#include "nliouville/pfunction.hpp"
#include "nliouville/quantization.hpp"
#include "nliouville/spectrum.hpp"

namespace nliouville {
namespace verify {

namespace {

std::string label(int n, double alpha, double lambda) {
    std::ostringstream out;
    out << "N=" << n << " alpha=" << alpha << " lambda=" << lambda;
    return out.str();
}

CheckRow row(std::string name, double value, double reference, double discrepancy,
             double tolerance) {
    CheckRow r;
    r.name = std::move(name);
    r.value = value;
    r.reference = reference;
    r.discrepancy = discrepancy;
    r.tolerance = tolerance;
    r.pass = discrepancy <= tolerance;
    return r;
}

CheckRow failed_row(std::string name, double tolerance, const std::string& why) {
    CheckRow r;
    r.name = std::move(name) + " [" + why + "]";
    r.value = std::nan("");
    r.reference = std::nan("");
    r.discrepancy = std::nan("");
    r.tolerance = tolerance;
    r.pass = false;
    return r;
}

/// Runs one check body per index in parallel, collecting rows by slot so the
/// report order is deterministic.
std::vector<CheckRow> sweep(std::size_t count,
                            const std::function<std::vector<CheckRow>(std::size_t)>& body) {
    std::vector<std::vector<CheckRow>> slots(count);
    parallel_for(count, [&](std::size_t i) { slots[i] = body(i); });
    std::vector<CheckRow> rows;
    for (auto& slot : slots)
        for (auto& r : slot)
            rows.push_back(std::move(r));
    return rows;
}

Vec random_direction(int n, std::mt19937& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vec dir(n);
    for (;;) {
        for (int i = 0; i < n; ++i)
            dir[i] = gauss(rng);
        const double norm = dir.norm();
        if (norm > 1e-3)
            return Vec(dir / norm);
    }
}

std::vector<Vec> annulus_points(int n, double r_lo, double r_hi, int count, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> unif(std::log(r_lo), std::log(r_hi));
    std::vector<Vec> points;
    points.reserve(count);
    for (int i = 0; i < count; ++i)
        points.push_back(Vec(std::exp(unif(rng)) * random_direction(n, rng)));
    return points;
}

std::complex<double> as_complex(const Vec& x) {
    return {x[0], x[1]};
}

}  // namespace

const std::vector<LatticePoint>& standard_lattice() {
    static const std::vector<LatticePoint> lattice = [] {
        std::vector<LatticePoint> out;
        for (int n : {2, 3, 4})
            for (double alpha : {-0.9, -0.5, 0.0, 0.5, 2.0})
                for (double lambda : {0.5, 1.0, 3.0})
                    out.push_back({n, alpha, lambda});
        return out;
    }();
    return lattice;
}

const std::vector<PlanarPoint>& planar_lattice() {
    static const std::vector<PlanarPoint> lattice = [] {
        std::vector<PlanarPoint> out;
        for (double alpha : {0.0, 0.5, 1.0, 1.5, 2.0})
            for (double lambda : {0.5, 1.0, 3.0}) {
                out.push_back({alpha, lambda, 0.0, 0.0});
                if (PlanarSolution::integer_weight(alpha))
                    out.push_back({alpha, lambda, 1.0, 0.5});
            }
        return out;
    }();
    return lattice;
}

// ---------------------------------------------------------------------------
// Criterion 1: quantization
// ---------------------------------------------------------------------------

std::vector<CheckRow> quantization_suite() {
    const auto& lattice = standard_lattice();
    std::vector<CheckRow> rows = sweep(lattice.size(), [&](std::size_t i) {
        const auto& pt = lattice[i];
        const std::string name = "mass " + label(pt.n, pt.alpha, pt.lambda);
        std::vector<CheckRow> out;
        try {
            const RadialSolution sol(Problem(pt.n, pt.alpha), pt.lambda);
            const MassResult m = mass(sol, 1.0);
            out.push_back(row(name, m.numeric, m.exact, m.rel_err, 1e-8));
        } catch (const std::exception& e) {
            out.push_back(failed_row(name, 1e-8, e.what()));
        }
        return out;
    });

    // pinned regular two-dimensional case
    const MassResult m = mass(RadialSolution(Problem(2, 0.0), 1.0), 1.0);
    const double eight_pi = 8.0 * M_PI;
    rows.push_back(row("mass N=2 alpha=0 equals 8*pi", m.numeric, eight_pi,
                       std::abs(m.numeric - eight_pi) / eight_pi, 1e-8));

    // independent raw-variable quadrature route
    for (int n : {2, 3, 4})
        for (double alpha : {-0.9, 0.0}) {
            const std::string name = "mass raw-route " + label(n, alpha, 1.0);
            try {
                const MassResult raw =
                    mass_raw_quadrature(RadialSolution(Problem(n, alpha), 1.0), 1.0);
                rows.push_back(row(name, raw.numeric, raw.exact, raw.rel_err, 1e-8));
            } catch (const std::exception& e) {
                rows.push_back(failed_row(name, 1e-8, e.what()));
            }
        }

    // lambda independence of the numeric mass
    for (int n : {2, 3, 4}) {
        const std::vector<double> lambdas = {0.1, 0.5, 2.0, 10.0};
        const double spread = mass_independent_of_lambda(Problem(n, 0.5), lambdas, 1.0);
        rows.push_back(row("mass lambda-independence N=" + std::to_string(n), spread, 0.0,
                           spread, 1e-8));
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Criterion 2: exact-solution residuals
// ---------------------------------------------------------------------------

std::vector<CheckRow> residual_suite() {
    const auto& lattice = standard_lattice();
    const RadialGrid grid = log_grid(1e-3, 1e3, 200);

    std::vector<CheckRow> rows = sweep(lattice.size(), [&](std::size_t i) {
        const auto& pt = lattice[i];
        const RadialSolution sol(Problem(pt.n, pt.alpha), pt.lambda);
        double worst = 0.0;
        for (double r : grid.points) {
            const double w = sol.weighted_density(r);
            const double rel = std::abs(sol.nlaplacian(r) + w) / (1.0 + w);
            worst = std::max(worst, rel);
        }
        return std::vector<CheckRow>{
            row("radial residual " + label(pt.n, pt.alpha, pt.lambda), worst, 0.0, worst, 1e-9)};
    });

    // planar finite-difference residuals, Richardson extrapolated
    for (double alpha : {0.0, 1.0, 2.0}) {
        const PlanarSolution sol(alpha, 1.0, {1.0, 0.5});
        const auto points = annulus_points(2, 0.3, 2.0, 20, 811u + static_cast<unsigned>(alpha));
        double worst = 0.0;
        for (const Vec& x : points)
            worst = std::max(worst, residual_planar(sol, as_complex(x), 2e-3).extrapolated);
        std::ostringstream name;
        name << "planar residual alpha=" << alpha << " c=1+0.5i";
        rows.push_back(row(name.str(), worst, 0.0, worst, 1e-8));
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Criterion 3: P-function constancy and the lambda <-> P0 dictionary
// ---------------------------------------------------------------------------

std::vector<CheckRow> pfunction_suite() {
    const auto& lattice = standard_lattice();
    const RadialGrid grid = default_grid();

    std::vector<CheckRow> rows = sweep(lattice.size(), [&](std::size_t i) {
        const auto& pt = lattice[i];
        const Problem problem(pt.n, pt.alpha);
        const RadialSolution sol(problem, pt.lambda);
        const PProfile profile = PProfile::radial(sol);
        const auto cert = constancy_certificate(profile, grid);
        std::vector<CheckRow> out;
        out.push_back(row("P constancy " + label(pt.n, pt.alpha, pt.lambda), cert.max_dev,
                          0.0, cert.max_dev / cert.p0, 1e-9));
        const double recovered = lambda_from_p0(problem, cert.p0);
        out.push_back(row("P dictionary " + label(pt.n, pt.alpha, pt.lambda), recovered,
                          pt.lambda, std::abs(recovered - pt.lambda) / pt.lambda, 1e-8));
        return out;
    });

    // non-radial planar members on random annulus clouds
    unsigned seed = 2025u;
    for (double alpha : {0.0, 1.0, 2.0})
        for (double lambda : {0.5, 1.0, 3.0}) {
            const PlanarSolution sol(alpha, lambda, {1.0, 0.5});
            const PProfile profile = PProfile::planar(sol);
            const auto points = annulus_points(2, 0.1, 10.0, 100, seed++);
            const auto cert = constancy_certificate(profile, points);
            std::ostringstream name;
            name << "P constancy planar alpha=" << alpha << " lambda=" << lambda << " c=1+0.5i";
            rows.push_back(
                row(name.str(), cert.max_dev, 0.0, cert.max_dev / cert.p0, 1e-9));
            const double recovered = planar_lambda_from_p0(alpha, cert.p0);
            std::ostringstream dict;
            dict << "P dictionary planar alpha=" << alpha << " lambda=" << lambda;
            rows.push_back(row(dict.str(), recovered, lambda,
                               std::abs(recovered - lambda) / lambda, 1e-8));
        }

    // non-integer weight exercises the shift-free branch
    {
        const PlanarSolution sol(0.5, 1.0);
        const auto cert =
            constancy_certificate(PProfile::planar(sol), annulus_points(2, 0.1, 10.0, 100, 77u));
        rows.push_back(row("P constancy planar alpha=0.5 c=0", cert.max_dev, 0.0,
                           cert.max_dev / cert.p0, 1e-9));
    }

    // pinned closed-form constant of the regular planar case
    {
        const auto cert = constancy_certificate(
            PProfile::radial(RadialSolution(Problem(2, 0.0), 1.0)), grid);
        rows.push_back(row("P0 N=2 alpha=0 lambda=1 equals sqrt(2)", cert.p0, std::sqrt(2.0),
                           std::abs(cert.p0 - std::sqrt(2.0)), 1e-12));
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Criterion 4: E-tensor vanishing
// ---------------------------------------------------------------------------

std::vector<CheckRow> etensor_suite() {
    const auto& lattice = standard_lattice();
    std::vector<CheckRow> rows = sweep(lattice.size(), [&](std::size_t i) {
        const auto& pt = lattice[i];
        const PProfile profile = PProfile::radial(RadialSolution(Problem(pt.n, pt.alpha), pt.lambda));
        const auto points = annulus_points(pt.n, 0.1, 10.0, 30, 31u + static_cast<unsigned>(i));
        double worst_e = 0.0, worst_trace = 0.0;
        for (const Vec& x : points) {
            const auto check = e_tensor(profile, x, 1e-5 * (1.0 + x.norm()));
            worst_e = std::max(worst_e, check.frob_norm_e);
            worst_trace = std::max(worst_trace, std::abs(check.trace_w - check.p));
        }
        std::vector<CheckRow> out;
        out.push_back(row("E-tensor " + label(pt.n, pt.alpha, pt.lambda), worst_e, 0.0,
                          worst_e, 1e-6));
        out.push_back(row("trace(W)=P " + label(pt.n, pt.alpha, pt.lambda), worst_trace, 0.0,
                          worst_trace, 1e-7));
        return out;
    });

    // planar members with a genuine shift
    for (double alpha : {1.0, 2.0}) {
        const PProfile profile = PProfile::planar(PlanarSolution(alpha, 1.0, {1.0, 0.5}));
        const auto points = annulus_points(2, 0.3, 5.0, 30, 97u + static_cast<unsigned>(alpha));
        double worst = 0.0;
        for (const Vec& x : points)
            worst = std::max(worst, e_tensor(profile, x, 1e-5 * (1.0 + x.norm())).frob_norm_e);
        std::ostringstream name;
        name << "E-tensor planar alpha=" << alpha << " c=1+0.5i";
        rows.push_back(row(name.str(), worst, 0.0, worst, 1e-6));
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Criterion 5: mode ODE closed forms and the coupling eigenvalues
// ---------------------------------------------------------------------------

std::vector<CheckRow> mode_solution_suite() {
    std::vector<CheckRow> rows;
    const RadialGrid grid = log_grid(1e-3, 1e3, 200);

    for (int n : {2, 3, 4}) {
        double worst0 = 0.0, worst1 = 0.0;
        const auto bar0 = eta_bar0(n);
        const auto bar1 = eta_bar1(n);
        for (double r : grid.points) {
            worst0 = std::max(worst0, std::abs(mode_ode_residual(n, 0.0, bar0, r)));
            worst1 = std::max(worst1, std::abs(mode_ode_residual(n, 1.0, bar1, r)));
        }
        rows.push_back(
            row("mode residual eta0 N=" + std::to_string(n), worst0, 0.0, worst0, 1e-10));
        rows.push_back(
            row("mode residual eta1 N=" + std::to_string(n), worst1, 0.0, worst1, 1e-10));

        const double beta0 = sl_solve_beta(n, {-0.5, 0.5}, 1e-9);
        rows.push_back(row("shooting coupling 0 N=" + std::to_string(n), beta0, 0.0,
                           std::abs(beta0), 1e-6));
        const double beta1 = sl_solve_beta(n, {0.5, 1.5}, 1e-9);
        rows.push_back(row("shooting coupling 1 N=" + std::to_string(n), beta1, 1.0,
                           std::abs(beta1 - 1.0), 1e-6));

        // mismatch keeps one sign strictly inside (0, 1)
        int sign_changes = 0;
        double prev = shooting_mismatch(n, 0.1, 1.0);
        for (double beta = 0.15; beta < 0.901; beta += 0.05) {
            const double cur = shooting_mismatch(n, beta, 1.0);
            if (prev * cur < 0.0)
                ++sign_changes;
            prev = cur;
        }
        rows.push_back(row("no interior coupling eigenvalue N=" + std::to_string(n),
                           static_cast<double>(sign_changes), 0.0,
                           static_cast<double>(sign_changes), 0.0));
        bool bracket_rejected = false;
        try {
            sl_solve_beta(n, {0.1, 0.9}, 1e-9);
        } catch (const BracketError&) {
            bracket_rejected = true;
        }
        rows.push_back(row("bracket (0.1,0.9) rejected N=" + std::to_string(n),
                           bracket_rejected ? 1.0 : 0.0, 1.0, bracket_rejected ? 0.0 : 1.0,
                           0.0));

        // unique zero of the scaling-mode profile, bisected independently
        const auto bar0_value = [&bar0](double r) { return bar0(r)[0]; };
        double lo = 1e-2, hi = 1e2;
        for (int iter = 0; iter < 200; ++iter) {
            const double mid = 0.5 * (lo + hi);
            (bar0_value(lo) * bar0_value(mid) <= 0.0 ? hi : lo) = mid;
        }
        const double root = 0.5 * (lo + hi);
        rows.push_back(row("eta0 zero N=" + std::to_string(n), root, eta_bar0_zero(n),
                           std::abs(root - eta_bar0_zero(n)), 1e-10));
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Criterion 6: eigenvalue cross-validation
// ---------------------------------------------------------------------------

std::vector<CheckRow> eigenvalue_suite() {
    struct Combo {
        int n;
        double alpha;
        int k;
    };
    std::vector<Combo> combos;
    for (int n : {2, 3, 4})
        for (double alpha : {-0.5, 0.0, 0.5, 1.0})
            for (int k = 0; k <= 5; ++k)
                combos.push_back({n, alpha, k});

    std::vector<CheckRow> rows = sweep(combos.size(), [&](std::size_t i) {
        const auto& c = combos[i];
        const double closed = closed_form_eigenvalue(c.n, c.alpha, c.k).lambda_k;
        std::ostringstream name;
        name << "Lambda shooting vs closed N=" << c.n << " alpha=" << c.alpha << " k=" << c.k;
        std::vector<CheckRow> out;
        try {
            const double shot = sl_solve_lambda(c.n, c.alpha, c.k, 0, 1e-9);
            out.push_back(row(name.str(), shot, closed, std::abs(shot - closed), 1e-6));
        } catch (const std::exception& e) {
            out.push_back(failed_row(name.str(), 1e-6, e.what()));
        }
        return out;
    });

    // Lambda = 1 exactly at the degeneracy weights
    struct DegCombo {
        int n;
        int k;
    };
    std::vector<DegCombo> degs;
    for (int n : {2, 3})
        for (int k : {1, 2, 3})
            degs.push_back({n, k});
    auto deg_rows = sweep(degs.size(), [&](std::size_t i) {
        const auto [n, k] = degs[i];
        const double alpha_k = degeneracy_alpha(n, k);
        const double closed = closed_form_eigenvalue(n, alpha_k, k).lambda_k;
        std::vector<CheckRow> out;
        std::ostringstream cname;
        cname << "Lambda=1 at alpha_k closed N=" << n << " k=" << k;
        out.push_back(row(cname.str(), closed, 1.0, std::abs(closed - 1.0), 1e-12));
        std::ostringstream sname;
        sname << "Lambda=1 at alpha_k shooting N=" << n << " k=" << k;
        try {
            const double shot = sl_solve_lambda(n, alpha_k, k, 0, 1e-10);
            out.push_back(row(sname.str(), shot, 1.0, std::abs(shot - 1.0), 1e-8));
        } catch (const std::exception& e) {
            out.push_back(failed_row(sname.str(), 1e-8, e.what()));
        }
        return out;
    });
    rows.insert(rows.end(), deg_rows.begin(), deg_rows.end());

    // pinned regular planar values {0, 1, 3}
    const double expected[3] = {0.0, 1.0, 3.0};
    for (int k = 0; k <= 2; ++k) {
        const double closed = closed_form_eigenvalue(2, 0.0, k).lambda_k;
        rows.push_back(row("Lambda closed N=2 alpha=0 k=" + std::to_string(k), closed,
                           expected[k], std::abs(closed - expected[k]), 1e-12));
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Criterion 7: degeneracy catalog and kernel residuals
// ---------------------------------------------------------------------------

std::vector<CheckRow> degeneracy_suite() {
    std::vector<CheckRow> rows;

    for (int k = 1; k <= 5; ++k) {
        const double ak = degeneracy_alpha(2, k);
        rows.push_back(row("alpha_k N=2 k=" + std::to_string(k), ak, k - 1.0,
                           std::abs(ak - (k - 1.0)), 1e-12));
        const int mult = harmonic_multiplicity(2, k);
        rows.push_back(row("M(k) N=2 k=" + std::to_string(k), mult, 2.0,
                           std::abs(mult - 2.0), 0.0));
    }
    rows.push_back(row("alpha_2 N=3", degeneracy_alpha(3, 2), std::sqrt(3.0) - 1.0,
                       std::abs(degeneracy_alpha(3, 2) - (std::sqrt(3.0) - 1.0)), 1e-12));
    for (int k = 1; k <= 4; ++k) {
        const int mult = harmonic_multiplicity(3, k);
        rows.push_back(row("M(k) N=3 k=" + std::to_string(k), mult, 2.0 * k + 1.0,
                           std::abs(mult - (2.0 * k + 1.0)), 0.0));
    }
    {
        const auto report = degeneracy_catalog(3, 0.0, 3);
        rows.push_back(row("kernel dim N=3 alpha=0", report.kernel_dim, 4.0,
                           std::abs(report.kernel_dim - 4.0), 0.0));
    }

    // kernel members against the strong-form linearized equation
    const auto probe = [&rows](const std::string& name, int n, double alpha,
                               const KernelFunction& fn, unsigned seed) {
        const auto points = annulus_points(n, 0.2, 5.0, 12, seed);
        const double res = kernel_residual(n, alpha, fn, points);
        rows.push_back(row(name, res, 0.0, res, 1e-8));
    };

    unsigned seed = 300u;
    for (int n : {2, 3})
        for (double alpha : {-0.3, 0.0, 0.7})
            probe("kernel scaling N=" + std::to_string(n) + " alpha=" + std::to_string(alpha),
                  n, alpha, KernelFunction::scaling(n, alpha), seed++);
    for (int n : {2, 3})
        for (int axis = 0; axis < n; ++axis)
            probe("kernel translation N=" + std::to_string(n) + " axis=" + std::to_string(axis),
                  n, 0.0, KernelFunction::translation(n, axis), seed++);
    for (int n : {2, 3})
        for (int k : {1, 2}) {
            const double alpha_k = degeneracy_alpha(n, k);
            for (int i = 0; i < harmonic_multiplicity(n, k); ++i)
                probe("kernel harmonic N=" + std::to_string(n) + " k=" + std::to_string(k) +
                          " i=" + std::to_string(i),
                      n, alpha_k, KernelFunction::harmonic(n, alpha_k, k, i), seed++);
        }

    // translation modes coincide with the k = 1 harmonics up to N^2/(N-1)
    for (int n : {2, 3}) {
        const auto translation = KernelFunction::translation(n, 0).field();
        const auto harmonic = KernelFunction::harmonic(n, 0.0, 1, 0).field();
        const double factor = n * n / (n - 1.0);
        double worst = 0.0;
        for (const Vec& x : annulus_points(n, 0.2, 5.0, 12, 555u + n))
            worst = std::max(worst,
                             std::abs(translation.value(x) - factor * harmonic.value(x)));
        rows.push_back(row("translation equals scaled k=1 harmonic N=" + std::to_string(n),
                           worst, 0.0, worst, 1e-12));
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Criterion 8: Morse count
// ---------------------------------------------------------------------------

std::vector<CheckRow> morse_suite() {
    std::vector<CheckRow> rows;
    for (int n : {2, 3, 4, 5, 6}) {
        const auto count = morse_count(n, 0.0);
        rows.push_back(row("Morse total N=" + std::to_string(n) + " alpha=0",
                           count.total, 1.0, std::abs(count.total - 1.0), 0.0));
        rows.push_back(row("Morse threshold N=" + std::to_string(n) + " alpha=0",
                           count.s_threshold, 1.0, std::abs(count.s_threshold - 1.0), 1e-12));
    }

    for (int n : {2, 3})
        for (int k : {1, 2}) {
            const double alpha_k = degeneracy_alpha(n, k);
            const int jump = harmonic_multiplicity(n, k);
            bool pattern = true;
            int pre = morse_count(n, alpha_k - 0.05).total;
            int jumps_seen = 0;
            for (int j = -4; j <= 5; ++j) {
                const double alpha = alpha_k + 0.01 * j;
                const int total = morse_count(n, alpha).total;
                if (total != pre) {
                    ++jumps_seen;
                    if (total - pre != jump || alpha <= alpha_k)
                        pattern = false;
                    pre = total;
                }
            }
            if (jumps_seen != 1)
                pattern = false;
            std::ostringstream name;
            name << "Morse jump by M(" << k << ")=" << jump << " across alpha_" << k
                 << " N=" << n;
            rows.push_back(row(name.str(), pattern ? 1.0 : 0.0, 1.0, pattern ? 0.0 : 1.0, 0.0));
        }
    return rows;
}

// ---------------------------------------------------------------------------
// Criterion 9: holomorphic invariant and origin gradient decay
// ---------------------------------------------------------------------------

std::vector<CheckRow> holomorphic_suite() {
    const auto& lattice = planar_lattice();
    std::vector<CheckRow> rows = sweep(lattice.size(), [&](std::size_t i) {
        const auto& pt = lattice[i];
        const PlanarSolution sol(pt.alpha, pt.lambda, {pt.c_re, pt.c_im});
        const auto points = annulus_points(2, 0.2, 5.0, 50, 1200u + static_cast<unsigned>(i));
        double worst = 0.0;
        for (const Vec& x : points)
            worst = std::max(worst, std::abs(holomorphic_invariant(sol, as_complex(x)).invariant));
        std::ostringstream name;
        name << "holomorphic invariant alpha=" << pt.alpha << " lambda=" << pt.lambda;
        if (pt.c_re != 0.0 || pt.c_im != 0.0)
            name << " c=" << pt.c_re << "+" << pt.c_im << "i";
        std::vector<CheckRow> out;
        out.push_back(row(name.str(), worst, 0.0, worst, 1e-7));

        std::vector<double> radii;
        for (int j = 0; j < 12; ++j)
            radii.push_back(std::pow(10.0, -1.0 - 1.5 * j / 11.0));
        const double exponent = origin_gradient_decay(sol, radii);
        std::ostringstream decay;
        decay << "gradient decay alpha=" << pt.alpha << " lambda=" << pt.lambda;
        if (pt.c_re != 0.0 || pt.c_im != 0.0)
            decay << " c=" << pt.c_re << "+" << pt.c_im << "i";
        // one-sided bound: the fitted exponent must not undershoot alpha - 0.05
        const double shortfall = std::max(0.0, (pt.alpha - 0.05) - exponent);
        out.push_back(row(decay.str(), exponent, pt.alpha, shortfall, 0.0));
        return out;
    });
    return rows;
}

// ---------------------------------------------------------------------------
// Criterion 10: radial asymptotics
// ---------------------------------------------------------------------------

std::vector<CheckRow> asymptotics_suite() {
    const auto& lattice = standard_lattice();
    return sweep(lattice.size(), [&](std::size_t i) {
        const auto& pt = lattice[i];
        const RadialSolution sol(Problem(pt.n, pt.alpha), pt.lambda);
        const auto defect = sol.check_asymptotics(1e6);
        return std::vector<CheckRow>{row("slope defect at r=1e6 " +
                                             label(pt.n, pt.alpha, pt.lambda),
                                         defect.slope_defect, 0.0, defect.slope_defect, 1e-10)};
    });
}

const std::vector<CriterionSuite>& acceptance_criteria() {
    static const std::vector<CriterionSuite> suites = {
        {1, "quantization of the weighted mass", quantization_suite},
        {2, "exact-solution residuals", residual_suite},
        {3, "P-function constancy and scale dictionary", pfunction_suite},
        {4, "E-tensor vanishing", etensor_suite},
        {5, "mode ODE closed forms and coupling eigenvalues", mode_solution_suite},
        {6, "eigenvalue cross-validation", eigenvalue_suite},
        {7, "degeneracy catalog and kernel residuals", degeneracy_suite},
        {8, "Morse count", morse_suite},
        {9, "holomorphic invariant and gradient decay", holomorphic_suite},
        {10, "radial asymptotics", asymptotics_suite},
    };
    return suites;
}

}  // namespace verify
}  // namespace nliouville
