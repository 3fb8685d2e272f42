// Command-line front end: verification suites for the weighted N-Laplacian
// Liouville equation and its explicit solution families.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "nliouville/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "nliouville: numerical certificates for the weighted N-Laplacian Liouville "
        "equation -Delta_N u = |x|^(N a) e^u (solution families, mass quantization, "
        "P-function rigidity, linearized spectrum)"};
    app.require_subcommand(0, 1);

    nliouville::RunConfig config;
    std::string format = "table";

    // shared options live on the root; subcommands fall through to them, so
    // both `nliouville mass --n 3` and flat config-file keys resolve here
    app.set_config("--config", "", "key=value file overriding the defaults");
    app.add_option("--n", config.n, "dimension N >= 2");
    app.add_option("--alpha", config.alpha, "weight exponent alpha > -1");
    app.add_option("--lambda", config.lambda, "family scale lambda > 0");
    app.add_option("--c-re", config.c_re, "real part of the planar shift c (n=2 only)");
    app.add_option("--c-im", config.c_im, "imaginary part of the planar shift c");
    app.add_option("--k-max", config.k_max, "largest spherical mode index");
    app.add_option("--r-min", config.r_min, "grid lower radius");
    app.add_option("--r-max", config.r_max, "grid upper radius");
    app.add_option("--grid-points", config.grid_points, "grid size");
    app.add_option("--format", format, "output format: table, csv, json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    app.add_option("--output", config.output_path, "write the report to this path");

    const std::map<std::string, std::pair<nliouville::Command, std::string>> commands = {
        {"eval", {nliouville::Command::eval, "tabulate a solution profile (r, u, derivatives, v, P)"}},
        {"residual", {nliouville::Command::residual, "equation residuals of the closed-form families"}},
        {"mass", {nliouville::Command::mass, "weighted total mass against the quantized value"}},
        {"pfun", {nliouville::Command::pfun, "P-function constancy and the scale dictionary"}},
        {"spectrum", {nliouville::Command::spectrum, "degeneracy catalog of the linearized operator"}},
        {"morse", {nliouville::Command::morse, "eigenvalue-count threshold and Morse count"}},
        {"holo", {nliouville::Command::holo, "planar holomorphic invariant and gradient decay"}},
        {"verify-all", {nliouville::Command::verify_all, "run every acceptance suite (deterministic)"}},
    };

    for (const auto& [name, entry] : commands) {
        CLI::App* sub = app.add_subcommand(name, entry.second);
        sub->fallthrough();
        sub->callback([&config, command = entry.first] { config.command = command; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    if (app.get_subcommands().empty()) {
        std::cerr << app.help();
        return 2;
    }

    if (format == "csv")
        config.format = nliouville::OutputFormat::csv;
    else if (format == "json")
        config.format = nliouville::OutputFormat::json;
    else
        config.format = nliouville::OutputFormat::table;

    return nliouville::run(config, std::cout, std::cerr);
}
