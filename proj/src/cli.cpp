#include "nliouville/cli.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "nliouville/holo2d.hpp"
#include "nliouville/pfunction.hpp"
#include "nliouville/quantization.hpp"
#include "nliouville/spectrum.hpp"
#include "nliouville/verify.hpp"

namespace nliouville {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

bool has_shift(const RunConfig& c) {
    return c.c_re != 0.0 || c.c_im != 0.0;
}

void validate(const RunConfig& c) {
    make_problem(c.n, c.alpha);  // throws DomainError when out of range
    if (!(c.lambda > 0.0))
        throw DomainError("lambda must be positive");
    if (has_shift(c)) {
        if (c.n != 2)
            throw DomainError("a shift c is only meaningful in dimension two");
        if (!PlanarSolution::integer_weight(c.alpha))
            throw DomainError("a nonzero shift requires alpha to be a nonnegative integer");
    }
    if (c.k_max < 1)
        throw DomainError("k-max must be at least 1");
    log_grid(c.r_min, c.r_max, c.grid_points);  // validates the grid request
}

void write_checks(const RunConfig& c, const std::vector<CheckRow>& rows, std::ostream& out) {
    if (c.output_path.empty())
        emit_checks(rows, c.format, out);
    else
        emit_checks(rows, c.format, c.output_path);
}

void write_profile(const RunConfig& c, const std::vector<std::string>& names,
                   const std::vector<std::vector<double>>& columns, std::ostream& out) {
    if (c.output_path.empty())
        emit_profile(names, columns, c.format, out);
    else
        emit_profile(names, columns, c.format, c.output_path);
}

int run_eval(const RunConfig& c, std::ostream& out) {
    const RadialGrid grid = log_grid(c.r_min, c.r_max, c.grid_points);
    if (c.n == 2 && has_shift(c)) {
        const PlanarSolution sol(c.alpha, c.lambda, {c.c_re, c.c_im});
        const PProfile profile = PProfile::planar(sol);
        std::vector<double> r_col, u_col, p_col;
        for (double r : grid.points) {
            Vec x(2);
            x << r, 0.0;
            r_col.push_back(r);
            u_col.push_back(sol.value({r, 0.0}));
            p_col.push_back(profile.p_value(x));
        }
        write_profile(c, {"r", "u", "P"}, {r_col, u_col, p_col}, out);
        return kExitOk;
    }
    const RadialSolution sol(Problem(c.n, c.alpha), c.lambda);
    const PProfile profile = PProfile::radial(sol);
    std::vector<double> r_col, u_col, du_col, d2u_col, v_col, p_col;
    for (double r : grid.points) {
        const auto e = sol.eval(r);
        Vec x = Vec::Zero(c.n);
        x[0] = r;
        r_col.push_back(r);
        u_col.push_back(e.u);
        du_col.push_back(e.du);
        d2u_col.push_back(e.d2u);
        v_col.push_back(std::exp(-e.u / c.n));
        p_col.push_back(profile.p_value(x));
    }
    write_profile(c, {"r", "u", "du", "d2u", "v", "P"},
                  {r_col, u_col, du_col, d2u_col, v_col, p_col}, out);
    return kExitOk;
}

int run_residual(const RunConfig& c, std::ostream& out) {
    std::vector<CheckRow> rows;
    const RadialSolution sol(Problem(c.n, c.alpha), c.lambda);
    const RadialGrid grid = log_grid(std::max(c.r_min, 1e-3), std::min(c.r_max, 1e3), 200);
    double worst = 0.0;
    for (double r : grid.points) {
        const double w = sol.weighted_density(r);
        worst = std::max(worst, std::abs(sol.nlaplacian(r) + w) / (1.0 + w));
    }
    CheckRow radial;
    radial.name = "radial residual (relative, grid max)";
    radial.value = worst;
    radial.reference = 0.0;
    radial.discrepancy = worst;
    radial.tolerance = 1e-9;
    radial.pass = worst <= 1e-9;
    rows.push_back(radial);

    if (c.n == 2) {
        const PlanarSolution planar(c.alpha, c.lambda, {c.c_re, c.c_im});
        double worst_planar = 0.0;
        for (double r : {0.4, 0.9, 1.7}) {
            for (double angle : {0.3, 2.1, 4.0}) {
                const auto res =
                    residual_planar(planar, std::polar(r, angle), 2e-3).extrapolated;
                worst_planar = std::max(worst_planar, res);
            }
        }
        CheckRow planar_row;
        planar_row.name = "planar residual (Richardson, sample max)";
        planar_row.value = worst_planar;
        planar_row.reference = 0.0;
        planar_row.discrepancy = worst_planar;
        planar_row.tolerance = 1e-8;
        planar_row.pass = worst_planar <= 1e-8;
        rows.push_back(planar_row);
    }
    write_checks(c, rows, out);
    return all_pass(rows) ? kExitOk : kExitCheckFailed;
}

int run_mass(const RunConfig& c, std::ostream& out) {
    std::vector<CheckRow> rows;
    const Problem problem(c.n, c.alpha);
    const RadialSolution sol(problem, c.lambda);
    for (bool raw : {false, true}) {
        CheckRow row;
        row.name = raw ? "mass (raw-variable quadrature)" : "mass (substituted quadrature)";
        row.tolerance = 1e-8;
        try {
            const MassResult m = raw ? mass_raw_quadrature(sol, 1.0) : mass(sol, 1.0);
            row.value = m.numeric;
            row.reference = m.exact;
            row.discrepancy = m.rel_err;
            row.pass = m.rel_err <= row.tolerance;
        } catch (const ConvergenceError& e) {
            row.value = std::nan("");
            row.reference = mass_closed_form(problem);
            row.discrepancy = std::nan("");
            row.pass = false;
            row.name += std::string(" [") + e.what() + "]";
        }
        rows.push_back(row);
    }
    write_checks(c, rows, out);
    return all_pass(rows) ? kExitOk : kExitCheckFailed;
}

int run_pfun(const RunConfig& c, std::ostream& out) {
    std::vector<CheckRow> rows;
    const Problem problem(c.n, c.alpha);
    const RadialGrid grid = log_grid(c.r_min, c.r_max, c.grid_points);

    const bool planar = c.n == 2 && has_shift(c);
    ConstancyCertificate cert;
    double lambda_expected = c.lambda;
    double lambda_recovered = 0.0;
    if (planar) {
        const PlanarSolution sol(c.alpha, c.lambda, {c.c_re, c.c_im});
        const PProfile profile = PProfile::planar(sol);
        std::vector<Vec> points;
        for (double r : grid.points) {
            Vec x(2);
            x << r * 0.6, r * 0.8;
            points.push_back(std::move(x));
        }
        cert = constancy_certificate(profile, points);
        lambda_recovered = planar_lambda_from_p0(c.alpha, cert.p0);
    } else {
        const RadialSolution sol(problem, c.lambda);
        cert = constancy_certificate(PProfile::radial(sol), grid);
        lambda_recovered = lambda_from_p0(problem, cert.p0);
    }

    CheckRow constancy;
    constancy.name = "P constancy (max deviation / P0)";
    constancy.value = cert.p0;
    constancy.reference = cert.p0;
    constancy.discrepancy = cert.max_dev / cert.p0;
    constancy.tolerance = 1e-9;
    constancy.pass = constancy.discrepancy <= constancy.tolerance;
    rows.push_back(constancy);

    CheckRow dict;
    dict.name = "scale recovered from P0";
    dict.value = lambda_recovered;
    dict.reference = lambda_expected;
    dict.discrepancy = std::abs(lambda_recovered - lambda_expected) / lambda_expected;
    dict.tolerance = 1e-8;
    dict.pass = dict.discrepancy <= dict.tolerance;
    rows.push_back(dict);

    write_checks(c, rows, out);
    return all_pass(rows) ? kExitOk : kExitCheckFailed;
}

int run_spectrum(const RunConfig& c, std::ostream& out) {
    const SpectralReport report = degeneracy_catalog(c.n, c.alpha, c.k_max);
    std::vector<double> k_col, ak_col, mult_col, dim_col, lam_col;
    for (const auto& mode : report.modes) {
        k_col.push_back(mode.k);
        ak_col.push_back(mode.alpha_k);
        mult_col.push_back(mode.multiplicity);
        dim_col.push_back(mode.kernel_dim);
        lam_col.push_back(report.lambda_k[mode.k]);
    }
    write_profile(c, {"k", "alpha_k", "multiplicity", "kernel_dim", "lambda_k"},
                  {k_col, ak_col, mult_col, dim_col, lam_col}, out);
    if (c.output_path.empty()) {
        out << "# kernel dimension at alpha=" << c.alpha << ": " << report.kernel_dim << "\n";
        out << "# Morse threshold: " << format_float(report.s_threshold)
            << ", count: " << report.morse_total << "\n";
    }
    return kExitOk;
}

int run_morse(const RunConfig& c, std::ostream& out) {
    const auto count = morse_count(c.n, c.alpha);
    std::vector<double> k_col, ak_col, mult_col, counted_col;
    for (int k = 0; k <= c.k_max; ++k) {
        k_col.push_back(k);
        ak_col.push_back(k == 0 ? -1.0 : degeneracy_alpha(c.n, k));
        mult_col.push_back(harmonic_multiplicity(c.n, k));
        counted_col.push_back(k + 1e-12 < count.s_threshold ? 1.0 : 0.0);
    }
    write_profile(c, {"k", "alpha_k", "multiplicity", "below_threshold"},
                  {k_col, ak_col, mult_col, counted_col}, out);
    if (c.output_path.empty())
        out << "# threshold S = " << format_float(count.s_threshold)
            << ", Morse count = " << count.total << "\n";
    return kExitOk;
}

int run_holo(const RunConfig& c, std::ostream& out) {
    if (c.n != 2)
        throw DomainError("holo: the complex-analytic checks require n = 2");
    const PlanarSolution sol(c.alpha, c.lambda, {c.c_re, c.c_im});
    std::vector<CheckRow> rows;

    double worst = 0.0;
    for (double r : {0.3, 0.8, 1.5, 3.0})
        for (int j = 0; j < 8; ++j) {
            const auto diag = holomorphic_invariant(sol, std::polar(r, 0.2 + j * 0.7853981633974483));
            worst = std::max(worst, std::abs(diag.invariant));
        }
    CheckRow invariant;
    invariant.name = "holomorphic invariant (sample max)";
    invariant.value = worst;
    invariant.reference = 0.0;
    invariant.discrepancy = worst;
    invariant.tolerance = 1e-7;
    invariant.pass = worst <= invariant.tolerance;
    rows.push_back(invariant);

    if (c.alpha >= 0.0) {
        std::vector<double> radii;
        for (int j = 0; j < 12; ++j)
            radii.push_back(std::pow(10.0, -1.0 - 1.5 * j / 11.0));
        const double exponent = origin_gradient_decay(sol, radii);
        CheckRow decay;
        decay.name = "origin gradient-decay exponent";
        decay.value = exponent;
        decay.reference = c.alpha;
        decay.discrepancy = std::max(0.0, (c.alpha - 0.05) - exponent);
        decay.tolerance = 0.0;
        decay.pass = decay.discrepancy <= decay.tolerance;
        rows.push_back(decay);
    }
    write_checks(c, rows, out);
    return all_pass(rows) ? kExitOk : kExitCheckFailed;
}

int run_verify_all(const RunConfig& c, std::ostream& out) {
    std::vector<CheckRow> rows;
    bool ok = true;
    for (const auto& suite : verify::acceptance_criteria()) {
        const auto suite_rows = suite.run();
        ok = ok && all_pass(suite_rows);
        for (const auto& r : suite_rows) {
            CheckRow tagged = r;
            tagged.name = "criterion " + std::to_string(suite.id) + ": " + r.name;
            rows.push_back(std::move(tagged));
        }
    }
    write_checks(c, rows, out);
    return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        validate(config);
    } catch (const DomainError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
    try {
        switch (config.command) {
            case Command::eval:
                return run_eval(config, out);
            case Command::residual:
                return run_residual(config, out);
            case Command::mass:
                return run_mass(config, out);
            case Command::pfun:
                return run_pfun(config, out);
            case Command::spectrum:
                return run_spectrum(config, out);
            case Command::morse:
                return run_morse(config, out);
            case Command::holo:
                return run_holo(config, out);
            case Command::verify_all:
                return run_verify_all(config, out);
        }
        err << "usage error: unknown command\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}

}  // namespace nliouville
