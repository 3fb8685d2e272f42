#pragma once

#include <iosfwd>
#include <string>

#include "nliouville/report.hpp"

namespace nliouville {

enum class Command { eval, residual, mass, pfun, spectrum, morse, holo, verify_all };

/// Parsed command-line configuration. Parameter validity is delegated to
/// make_problem; a shift is accepted only in dimension two.
struct RunConfig {
    Command command = Command::verify_all;
    int n = 2;
    double alpha = 0.0;
    double lambda = 1.0;
    double c_re = 0.0;
    double c_im = 0.0;
    int k_max = 5;
    double r_min = 1e-4;
    double r_max = 1e4;
    int grid_points = 400;
    OutputFormat format = OutputFormat::table;
    std::string output_path;  ///< empty writes to `out`
};

/// Executes one command. Returns 0 on success with the report written,
/// 1 when any numeric check fails (or an internal computation errors out),
/// 2 on a usage error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace nliouville
