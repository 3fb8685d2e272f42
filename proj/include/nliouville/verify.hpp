#pragma once

#include <functional>
#include <string>
#include <vector>

#include "nliouville/report.hpp"

namespace nliouville {
namespace verify {

/// One member of the standard test lattice
/// N in {2,3,4} x alpha in {-0.9,-0.5,0,0.5,2} x lambda in {0.5,1,3}.
struct LatticePoint {
    int n;
    double alpha;
    double lambda;
};

const std::vector<LatticePoint>& standard_lattice();

/// Planar sweep: alpha in {0, 0.5, 1, 1.5, 2} x lambda in {0.5, 1, 3} with
/// zero shift, plus a nonzero shift for the integer weights.
struct PlanarPoint {
    double alpha;
    double lambda;
    double c_re;
    double c_im;
};

const std::vector<PlanarPoint>& planar_lattice();

std::vector<CheckRow> quantization_suite();    // criterion 1
std::vector<CheckRow> residual_suite();        // criterion 2
std::vector<CheckRow> pfunction_suite();       // criterion 3
std::vector<CheckRow> etensor_suite();         // criterion 4
std::vector<CheckRow> mode_solution_suite();   // criterion 5
std::vector<CheckRow> eigenvalue_suite();      // criterion 6
std::vector<CheckRow> degeneracy_suite();      // criterion 7
std::vector<CheckRow> morse_suite();           // criterion 8
std::vector<CheckRow> holomorphic_suite();     // criterion 9
std::vector<CheckRow> asymptotics_suite();     // criterion 10

struct CriterionSuite {
    int id;
    std::string title;
    std::function<std::vector<CheckRow>()> run;
};

/// The ten acceptance suites in order.
const std::vector<CriterionSuite>& acceptance_criteria();

}  // namespace verify
}  // namespace nliouville
