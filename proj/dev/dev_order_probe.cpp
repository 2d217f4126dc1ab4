#include <chrono>
#include <cmath>
#include <cstdio>
#include <frack/frack.hpp>

using namespace frack;

int main() {
    const double nus[] = {0.5, 0.75, 1.0, 1.25};
    struct F { const char* name; ForcingTerm f; };
    const F forcings[] = {
        {"const", ForcingTerm::constant()},
        {"power2", ForcingTerm::power_law(2.0)},
        {"prabhakar", ForcingTerm::prabhakar(1.2, 1.5)},
    };
    const auto t0 = std::chrono::steady_clock::now();
    for (double nu : nus) {
        for (const F& fo : forcings) {
            KineticProblem p;
            p.nu = nu; p.c = 1.0; p.n0 = 1.0; p.forcing = fo.f;
            const double g4 = detail::kinetic_oracle_gap(p, 4096, 5.0);
            const double g2 = detail::kinetic_oracle_gap(p, 2048, 5.0);
            const double order = std::log2(g2 / g4);
            std::printf("nu=%-5g %-10s gap4096=%-11.3e gap2048=%-11.3e order=%.2f\n",
                        nu, fo.name, g4, g2, order);
        }
    }
    const auto t1 = std::chrono::steady_clock::now();
    std::printf("elapsed %.2f s\n",
                std::chrono::duration<double>(t1 - t0).count());
    return 0;
}
