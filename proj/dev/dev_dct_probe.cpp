#include <chrono>
#include <cmath>
#include <cstdio>
#include <frack/frack.hpp>

using namespace frack;
using clk = std::chrono::steady_clock;

int main() {
    auto t0 = clk::now();
    double worst = 0.0;
    for (double nu : {0.5, 0.8, 1.2}) {
        for (double k : {0.0, 1.0, 2.0, 3.0, 4.0}) {
            const double dct = cosine_transform_of_green(nu, 1.0, 1.0, k, 1024);
            const double mode = fourier_mode(nu, 1.0, k, 1.0);
            worst = std::max(worst, std::fabs(dct - mode));
        }
    }
    auto t1 = clk::now();
    std::printf("dct worst=%.3e elapsed=%.2f s\n", worst,
                std::chrono::duration<double>(t1 - t0).count());

    struct Pt { double nu, x, t, rtol; };
    const Pt pts[] = {
        {0.5, 0.5, 1.0, 1e-7},  {0.5, 1.0, 1.3, 1e-7},
        {0.8, 0.3, 0.7, 1e-7},  {0.8, 1.0, 1.0, 1e-7},
        {0.8, 2.0, 1.5, 1e-7},  {1.0, 1.3, 1.0, 1e-9},
        {1.0, 0.5, 2.0, 1e-9},  {1.25, 0.8, 1.0, 1e-7},
    };
    double wi = 0.0;
    for (const Pt& p : pts) {
        auto a = clk::now();
        const auto rep = cosine_inversion_check(p.nu, 1.0, p.x, p.t, p.rtol);
        auto b = clk::now();
        std::printf("  inv nu=%-5g x=%-4g t=%-4g dev=%-10.3e %.2f s\n", p.nu,
                    p.x, p.t, rep.deviation,
                    std::chrono::duration<double>(b - a).count());
        wi = std::max(wi, rep.deviation);
    }
    auto t2 = clk::now();
    std::printf("inversion worst=%.3e total elapsed=%.2f s\n", wi,
                std::chrono::duration<double>(t2 - t1).count());

    // normalization block
    double wn = 0.0;
    for (double nu : {0.5, 0.8, 1.0, 1.5})
        wn = std::max(wn, std::fabs(normalization_check(nu, 1.0, 1.0) - 1.0));
    auto t3 = clk::now();
    std::printf("norm worst=%.3e elapsed=%.2f s\n", wn,
                std::chrono::duration<double>(t3 - t2).count());
    return 0;
}
