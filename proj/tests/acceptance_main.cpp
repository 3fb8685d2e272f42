// Acceptance suite: runs the quantitative criteria end to end and prints one
// pass/fail line per criterion. Exit code 0 only if every selected criterion
// holds at its stated tolerance.

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "nliouville/report.hpp"
#include "nliouville/verify.hpp"

int main(int argc, char** argv) {
    int selected = 0;  // 0 runs everything
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            selected = std::atoi(argv[i + 1]);
            ++i;
        } else if (std::strcmp(argv[i], "--help") == 0) {
            std::printf("usage: acceptance [--criterion N]\n");
            return 0;
        } else {
            std::fprintf(stderr, "unknown argument: %s\n", argv[i]);
            return 2;
        }
    }

    bool all_ok = true;
    for (const auto& suite : nliouville::verify::acceptance_criteria()) {
        if (selected != 0 && suite.id != selected)
            continue;
        std::vector<nliouville::CheckRow> rows;
        try {
            rows = suite.run();
        } catch (const std::exception& e) {
            std::printf("criterion %2d: FAIL  %s [aborted: %s]\n", suite.id,
                        suite.title.c_str(), e.what());
            all_ok = false;
            continue;
        }
        std::size_t passed = 0;
        for (const auto& r : rows)
            passed += r.pass ? 1 : 0;
        const bool ok = passed == rows.size();
        std::printf("criterion %2d: %s  %s (%zu/%zu checks)\n", suite.id,
                    ok ? "PASS" : "FAIL", suite.title.c_str(), passed, rows.size());
        if (!ok) {
            for (const auto& r : rows)
                if (!r.pass)
                    std::printf("    failed: %s  value=%s ref=%s err=%s tol=%s\n",
                                r.name.c_str(), nliouville::format_float(r.value).c_str(),
                                nliouville::format_float(r.reference).c_str(),
                                nliouville::format_float(r.discrepancy).c_str(),
                                nliouville::format_float(r.tolerance).c_str());
        }
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
