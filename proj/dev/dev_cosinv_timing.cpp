// Timing probe: per-point cost of cosine_inversion_check.
#include <chrono>
#include <cmath>
#include <cstdio>

#include "frack/diffusion.hpp"

using namespace frack;

int main() {
    struct Pt { double nu, x, t; };
    const Pt pts[] = {{0.5, 0.5, 1.0}, {0.5, 2.0, 1.0},  {0.75, 1.0, 0.5},
                      {0.9, 3.0, 2.0}, {1.0, 1.0, 1.0},  {1.1, 2.0, 1.5},
                      {1.25, 1.5, 1.0}, {1.5, 1.0, 1.0}};
    for (const Pt& p : pts) {
        const auto t0 = std::chrono::steady_clock::now();
        const CosineInversionReport rep =
            cosine_inversion_check(p.nu, 1.0, p.x, p.t);
        const double ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
        std::printf("nu=%.2f x=%.1f t=%.1f dev=%.3g  %8.0f ms\n", p.nu, p.x,
                    p.t, rep.deviation, ms);
    }
    return 0;
}
