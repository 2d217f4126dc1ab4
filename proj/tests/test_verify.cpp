#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <string>

#include <frack/errors.hpp>
#include <frack/verify.hpp>

using namespace frack;

namespace {
struct EnvGuard {
    explicit EnvGuard(const char* value) {
        if (value) setenv("FRACK_TOL", value, 1);
        else unsetenv("FRACK_TOL");
    }
    ~EnvGuard() { unsetenv("FRACK_TOL"); }
};
} // namespace

TEST_CASE("tolerance scale from the environment", "[verify]") {
    {
        EnvGuard g(nullptr);
        std::string warning;
        CHECK(verify_tolerance_scale(&warning) == 1.0);
        CHECK(warning.empty());
    }
    {
        EnvGuard g("2.5");
        CHECK(verify_tolerance_scale() == 2.5);
    }
    {
        EnvGuard g("1e-3");
        CHECK(verify_tolerance_scale() == 1e-3);
    }
    for (const char* bad : {"abc", "-1", "0", "1.5x"}) {
        EnvGuard g(bad);
        std::string warning;
        CHECK(verify_tolerance_scale(&warning) == 1.0);
        CHECK(!warning.empty());
    }
}

TEST_CASE("suites pass under default tolerances", "[verify]") {
    for (const char* suite : {"ml", "hfun", "transforms"}) {
        const VerifyReport report = run_verification(suite);
        CHECK(report.all_passed());
        CHECK(!report.checks.empty());
        for (const VerifyCheck& c : report.checks) {
            CHECK(c.suite == suite);
            CHECK(c.passed);
            CHECK(c.deviation <= c.tolerance);
        }
    }
}

TEST_CASE("impossible tolerances are reported as failures, not throws",
          "[verify]") {
    const VerifyReport report = run_verification("hfun", 1e-18);
    CHECK(!report.all_passed());
    bool saw_failure = false;
    for (const VerifyCheck& c : report.checks)
        if (!c.passed) saw_failure = true;
    CHECK(saw_failure);
}

TEST_CASE("unknown suite name is rejected", "[verify]") {
    CHECK_THROWS_AS(run_verification("nope"), InvalidParameters);
    CHECK_THROWS_AS(run_verification("ml", -1.0), InvalidParameters);
}

TEST_CASE("check lines carry the report fields", "[verify]") {
    VerifyCheck c;
    c.suite = "ml";
    c.name = "demo";
    c.deviation = 1.5e-10;
    c.tolerance = 1e-9;
    c.passed = true;
    const std::string line = format_check_line(c);
    CHECK(line.find("PASS") != std::string::npos);
    CHECK(line.find("ml/demo") != std::string::npos);
    CHECK(line.find("1.500e-10") != std::string::npos);

    c.passed = false;
    c.note = "exploded";
    const std::string fail_line = format_check_line(c);
    CHECK(fail_line.find("FAIL") != std::string::npos);
    CHECK(fail_line.find("exploded") != std::string::npos);
}

TEST_CASE("aggregate run covers every suite", "[verify]") {
    // tolerance scale loosened so this is a composition test, not a rerun of
    // the numerics; every suite must still contribute checks
    const VerifyReport report = run_verification("all", 1e6);
    bool ml = false, hfun = false, kinetic = false, diffusion = false,
         transforms = false;
    for (const VerifyCheck& c : report.checks) {
        ml = ml || c.suite == "ml";
        hfun = hfun || c.suite == "hfun";
        kinetic = kinetic || c.suite == "kinetic";
        diffusion = diffusion || c.suite == "diffusion";
        transforms = transforms || c.suite == "transforms";
    }
    CHECK(ml);
    CHECK(hfun);
    CHECK(kinetic);
    CHECK(diffusion);
    CHECK(transforms);
}
