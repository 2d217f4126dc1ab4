#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include <frack/solution_table.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

std::string cli_path() {
    const char* p = std::getenv("FRACK_CLI_PATH");
    return p ? p : "";
}

// Runs a shell command, capturing stdout (and stderr when the caller
// appends a redirect).  Returns the process exit code.
RunResult run_shell(const std::string& cmd) {
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.output.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

RunResult run_cli(const std::string& args) {
    return run_shell(cli_path() + " " + args);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << text;
}

} // namespace

#define REQUIRE_CLI()                                    \
    do {                                                 \
        if (cli_path().empty()) SKIP("FRACK_CLI_PATH not set"); \
    } while (0)

TEST_CASE("single-point evaluation prints an exact table", "[cli]") {
    REQUIRE_CLI();
    const RunResult r =
        run_cli("ml --alpha 1 --beta 1 --gamma 1 --z -1 -1 --steps 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "z,value\r\n-1,0.36787944117144233\r\n");
}

TEST_CASE("argument faults exit with code 2", "[cli]") {
    REQUIRE_CLI();
    CHECK(run_cli("ml --alpha 0 --z -1 1 2>/dev/null").exit_code == 2);
    CHECK(run_cli("kinetic --nu 0.5 --t-max 1 --forcing power:rho=-1 2>/dev/null")
              .exit_code == 2);
    CHECK(run_cli("kinetic --nu 0.5 --t-max 1 --forcing sine 2>/dev/null")
              .exit_code == 2);
    CHECK(run_cli("diffusion --nu 2.5 --t 1 --x -5 5 2>/dev/null").exit_code ==
          2);
    CHECK(run_cli("2>/dev/null").exit_code == 2);          // missing subcommand
    CHECK(run_cli("ml --bogus 2>/dev/null").exit_code == 2); // unknown flag
}

TEST_CASE("ingestion faults exit with code 3", "[cli]") {
    REQUIRE_CLI();
    CHECK(run_cli("kinetic --nu 0.8 --t-max 1 --forcing csv:/tmp/frack_no_such_file.csv 2>/dev/null")
              .exit_code == 3);

    write_file("/tmp/frack_cli_bad_nan.csv", "t,f\n0,1\n0.5,nan\n1,2\n");
    CHECK(run_cli("kinetic --nu 0.8 --t-max 1 --forcing csv:/tmp/frack_cli_bad_nan.csv 2>/dev/null")
              .exit_code == 3);

    write_file("/tmp/frack_cli_bad_order.csv", "t,f\n0,1\n0.5,2\n0.25,3\n");
    CHECK(run_cli("kinetic --nu 0.8 --t-max 0.2 --forcing csv:/tmp/frack_cli_bad_order.csv 2>/dev/null")
              .exit_code == 3);
    std::remove("/tmp/frack_cli_bad_nan.csv");
    std::remove("/tmp/frack_cli_bad_order.csv");
}

TEST_CASE("verification subcommand reports and exits by outcome", "[cli]") {
    REQUIRE_CLI();
    const RunResult ok = run_cli("verify --suite ml");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("PASS  ml/") != std::string::npos);
    CHECK(ok.output.find("0 failed") != std::string::npos);
}

TEST_CASE("tolerance override drives verification outcome", "[cli]") {
    REQUIRE_CLI();
    const RunResult fail =
        run_shell("FRACK_TOL=1e-18 " + cli_path() + " verify --suite hfun");
    CHECK(fail.exit_code == 1);
    CHECK(fail.output.find("FAIL") != std::string::npos);

    const RunResult warn =
        run_shell("FRACK_TOL=abc " + cli_path() + " verify --suite ml 2>&1");
    CHECK(warn.exit_code == 0);
    CHECK(warn.output.find("warning") != std::string::npos);
}

TEST_CASE("csv output round-trips bit exactly", "[cli]") {
    REQUIRE_CLI();
    const std::string path = "/tmp/frack_cli_roundtrip.csv";
    const RunResult r = run_cli("ml --alpha 0.7 --beta 1.1 --gamma 1.4 --z "
                                "-4.5 4.5 --steps 33 --output " +
                                path);
    REQUIRE(r.exit_code == 0);
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    const std::string text((std::istreambuf_iterator<char>(in)),
                           std::istreambuf_iterator<char>());
    const frack::SolutionTable table = frack::parse_table_csv(text, 1);
    CHECK(frack::to_csv(table) == text);
    CHECK(table.rows.size() == 33);
    std::remove(path.c_str());
}

TEST_CASE("json output mirrors the table fields", "[cli]") {
    REQUIRE_CLI();
    const RunResult r = run_cli("ml --alpha 1 --z 0 1 --steps 2 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"axis_names\"") != std::string::npos);
    CHECK(r.output.find("\"metadata\"") != std::string::npos);
    CHECK(r.output.find("2.7182818284590451") != std::string::npos);
}

TEST_CASE("kinetic oracle columns expose the cross-check", "[cli]") {
    REQUIRE_CLI();
    const RunResult r = run_cli(
        "kinetic --nu 1 --c 2 --n0 3 --forcing const --t-max 1 --steps 4 "
        "--with-oracle");
    REQUIRE(r.exit_code == 0);
    const frack::SolutionTable table = frack::parse_table_csv(r.output, 1);
    REQUIRE(table.value_names.size() == 3);
    CHECK(table.value_names[2] == "abs_diff");
    for (const frack::SolutionRow& row : table.rows)
        CHECK(row.values[2] < 1e-5);
}

TEST_CASE("diffusion output matches the Gaussian on the classical order",
          "[cli]") {
    REQUIRE_CLI();
    const RunResult r =
        run_cli("diffusion --nu 1 --c 1 --t 1 --x -5 5 --steps 41");
    REQUIRE(r.exit_code == 0);
    const frack::SolutionTable table = frack::parse_table_csv(r.output, 1);
    double worst = 0.0;
    for (const frack::SolutionRow& row : table.rows) {
        const double x = row.coordinates[0];
        const double want =
            std::exp(-x * x / 4.0) / std::sqrt(4.0 * M_PI);
        worst = std::max(worst, std::fabs(row.values[0] - want));
    }
    CHECK(worst < 1e-8);
}
