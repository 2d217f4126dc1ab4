// Dev driver: run every verification suite and print per-check lines with
// wall-clock timing per suite.
#include <chrono>
#include <cstdio>

#include "frack/frack.hpp"

int main(int argc, char** argv) {
    std::setvbuf(stdout, nullptr, _IONBF, 0);
    const std::string suite = argc > 1 ? argv[1] : "all";
    std::string warn;
    const double scale = frack::verify_tolerance_scale(&warn);
    if (!warn.empty()) std::printf("warning: %s\n", warn.c_str());

    const char* suites[] = {"ml", "hfun", "kinetic", "diffusion", "transforms"};
    int total = 0, failed = 0;
    for (const char* s : suites) {
        if (suite != "all" && suite != s) continue;
        const auto t0 = std::chrono::steady_clock::now();
        const frack::VerifyReport rep = frack::run_verification(s, scale);
        const auto t1 = std::chrono::steady_clock::now();
        const double secs =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
                .count() /
            1000.0;
        for (const frack::VerifyCheck& c : rep.checks) {
            std::printf("%s\n", frack::format_check_line(c).c_str());
            ++total;
            if (!c.passed) ++failed;
        }
        std::printf("-- suite %-10s %.2f s\n", s, secs);
    }
    std::printf("%d checks, %d failed -> %s\n", total, failed,
                failed == 0 ? "DEV PASS" : "DEV FAIL");
    return failed == 0 ? 0 : 1;
}
