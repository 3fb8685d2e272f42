#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "nliouville/cli.hpp"
#include "nliouville/core.hpp"
#include "nliouville/parallel.hpp"
#include "nliouville/report.hpp"

using namespace nliouville;

namespace {

int run_quiet(const RunConfig& config, std::string* out_text = nullptr) {
    std::ostringstream out, err;
    const int code = run(config, out, err);
    if (out_text)
        *out_text = out.str();
    return code;
}

}  // namespace

TEST_SUITE("report_cli") {

TEST_CASE("float formatting round-trips") {
    for (double v : {0.1, -3.14159, 1e-300, 8.0 * 3.141592653589793, 25.132741228718345}) {
        const std::string text = format_float(v);
        CHECK(std::stod(text) == v);
    }
}

TEST_CASE("csv quoting follows the quoting rules") {
    CHECK(csv_escape("plain") == "plain");
    CHECK(csv_escape("with,comma") == "\"with,comma\"");
    CHECK(csv_escape("with\"quote") == "\"with\"\"quote\"");
    CHECK(csv_escape("line\nbreak") == "\"line\nbreak\"");
}

TEST_CASE("profile emission shapes") {
    std::vector<std::string> names = {"r", "u", "P"};
    std::vector<std::vector<double>> cols(3, std::vector<double>(400, 1.5));

    std::ostringstream csv;
    emit_profile(names, cols, OutputFormat::csv, csv);
    int lines = 0;
    for (char c : csv.str())
        if (c == '\n')
            ++lines;
    CHECK(lines == 401);  // header plus one line per grid point

    std::ostringstream json;
    emit_profile(names, cols, OutputFormat::json, json);
    CHECK(json.str().find("\"columns\"") != std::string::npos);
    CHECK(json.str().find("\"rows\"") != std::string::npos);

    CHECK_THROWS_AS(emit_profile({}, {}, OutputFormat::csv, csv), DomainError);
    std::vector<std::vector<double>> ragged = {{1.0, 2.0}, {1.0}};
    CHECK_THROWS_AS(emit_profile({"a", "b"}, ragged, OutputFormat::csv, csv), DomainError);
}

TEST_CASE("file emission reports the path on failure") {
    bool raised = false;
    try {
        emit_profile({"a"}, {{1.0}}, OutputFormat::csv, "/nonexistent-dir/out.csv");
    } catch (const std::runtime_error& e) {
        raised = true;
        CHECK(std::string(e.what()).find("/nonexistent-dir/out.csv") != std::string::npos);
    }
    CHECK(raised);
}

TEST_CASE("check emission carries pass and fail states") {
    CheckRow good{"good", 1.0, 1.0, 0.0, 1e-8, true};
    CheckRow bad{"bad", 2.0, 1.0, 1.0, 1e-8, false};
    CHECK(all_pass({good}));
    CHECK_FALSE(all_pass({good, bad}));

    std::ostringstream table;
    emit_checks({good, bad}, OutputFormat::table, table);
    CHECK(table.str().find("[PASS] good") != std::string::npos);
    CHECK(table.str().find("[FAIL] bad") != std::string::npos);

    std::ostringstream json;
    emit_checks({good, bad}, OutputFormat::json, json);
    CHECK(json.str().find("\"passed\": false") != std::string::npos);

    std::ostringstream csv;
    emit_checks({good, bad}, OutputFormat::csv, csv);
    CHECK(csv.str().rfind("name,value,reference,discrepancy,tolerance,pass\r\n", 0) == 0);
    CHECK(csv.str().find("bad,2,1,1,1e-08,false") != std::string::npos);
}

TEST_CASE("usage errors exit with code two") {
    RunConfig config;
    config.command = Command::eval;
    config.n = 2;
    config.alpha = 0.5;
    config.c_re = 1.0;  // shift with a non-integer weight
    CHECK(run_quiet(config) == 2);

    RunConfig bad_dim;
    bad_dim.command = Command::mass;
    bad_dim.n = 1;
    CHECK(run_quiet(bad_dim) == 2);

    RunConfig bad_alpha;
    bad_alpha.command = Command::mass;
    bad_alpha.alpha = -1.0;
    CHECK(run_quiet(bad_alpha) == 2);

    RunConfig shifted_3d;
    shifted_3d.command = Command::mass;
    shifted_3d.n = 3;
    shifted_3d.c_re = 1.0;
    CHECK(run_quiet(shifted_3d) == 2);

    RunConfig holo_3d;
    holo_3d.command = Command::holo;
    holo_3d.n = 3;
    CHECK(run_quiet(holo_3d) == 2);

    RunConfig bad_grid;
    bad_grid.command = Command::eval;
    bad_grid.r_min = 2.0;
    bad_grid.r_max = 1.0;
    CHECK(run_quiet(bad_grid) == 2);
}

TEST_CASE("passing commands exit with zero") {
    for (Command command : {Command::mass, Command::residual, Command::pfun, Command::morse,
                            Command::spectrum, Command::eval}) {
        RunConfig config;
        config.command = command;
        config.n = 2;
        config.alpha = 0.0;
        CHECK(run_quiet(config) == 0);
    }

    RunConfig holo;
    holo.command = Command::holo;
    holo.n = 2;
    holo.alpha = 1.0;
    holo.c_re = 1.0;
    CHECK(run_quiet(holo) == 0);
}

TEST_CASE("eval output is deterministic") {
    RunConfig config;
    config.command = Command::eval;
    config.format = OutputFormat::json;
    config.grid_points = 50;
    std::string first, second;
    CHECK(run_quiet(config, &first) == 0);
    CHECK(run_quiet(config, &second) == 0);
    CHECK(first == second);
    CHECK(!first.empty());
}

TEST_CASE("spectrum command reproduces the catalog example") {
    RunConfig config;
    config.command = Command::spectrum;
    config.n = 3;
    config.k_max = 3;
    config.format = OutputFormat::csv;
    std::string text;
    CHECK(run_quiet(config, &text) == 0);
    CHECK(text.find("alpha_k") != std::string::npos);
    CHECK(text.find("0.73205080756887") != std::string::npos);
}

TEST_CASE("worker pool respects the environment override") {
    // values below one fall back to serial execution
    setenv("NLIOUVILLE_WORKERS", "1", 1);
    CHECK(worker_count() == 1);
    std::vector<int> hits(64, 0);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
    for (int h : hits)
        CHECK(h == 1);
    unsetenv("NLIOUVILLE_WORKERS");

    // exceptions from workers surface to the caller
    CHECK_THROWS_AS(parallel_for(8, [](std::size_t i) {
                        if (i == 3)
                            throw DomainError("boom");
                    }),
                    DomainError);
}

TEST_CASE("profile files are written where requested") {
    RunConfig config;
    config.command = Command::eval;
    config.format = OutputFormat::csv;
    config.grid_points = 10;
    config.output_path = "/tmp/nliouville_test_profile.csv";
    CHECK(run_quiet(config) == 0);
    std::ifstream in(config.output_path);
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    CHECK(header.find("r,u") != std::string::npos);
    std::remove(config.output_path.c_str());
}

}  // TEST_SUITE
