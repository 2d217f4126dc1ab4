#include <cstdio>
#include <complex>

#include "frack/contour.hpp"
#include "frack/gamma.hpp"

using cplx = std::complex<double>;

int main() {
    struct Case { double a, b, g, x; };
    const Case cases[] = {
        {0.9, 1.0, 1.0, 10.0},
        {1.2, 1.0, 1.0, 49.0},
        {1.2, 1.0, 1.0, 50.0},
        {0.5, 1.0, 1.0, 10.0},
        {1.5, 1.0, 1.0, 10.0},
    };
    for (const auto& cs : cases) {
        const double c = -0.5 * (cs.g < 1.0 ? cs.g : 1.0);
        const double lx = std::log(cs.x);
        auto f = [&](cplx xi) {
            const cplx L = frack::detail::log_gamma(-xi) +
                           frack::detail::log_gamma(cs.g + xi) -
                           frack::detail::log_gamma(cs.b + cs.a * xi) +
                           xi * lx;
            return std::exp(L);
        };
        // manual: report T, then trapezoid values at successive halvings
        double peak = 0.0, t_peak = 0.0, T = 0.0;
        for (double t = 0.0;; t += 0.5) {
            const double mag = std::abs(f(cplx(c, t)));
            if (mag > peak) { peak = mag; t_peak = t; }
            if (t >= 8.0 && t >= 4.0 * t_peak && peak > 0.0 &&
                mag <= 1e-18 * peak) { T = t; break; }
        }
        std::printf("a=%.2f x=%.0f  c=%.2f peak=%.3e t_peak=%.1f T=%.1f\n",
                    cs.a, cs.x, c, peak, t_peak, T);
        for (int k = 0; k < 10; ++k) {
            const double h0 = (T / 64.0 > 0.5 ? 0.5 : T / 64.0);
            const double h = h0 / (1 << k);
            double s = 0.5 * f(cplx(c, 0.0)).real();
            long n = 1;
            for (double t = h; t <= T; t += h) {
                s += f(cplx(c, t)).real();
                ++n;
            }
            std::printf("  h=%-12.6g n=%-8ld I/pi/Gamma(g)=%.16e\n", h, n,
                        s * h / M_PI * frack::reciprocal_gamma(cs.g));
        }
        const auto li = frack::detail::integrate_vertical_line(f, c, 1e-12);
        std::printf("  lib: val=%.16e delta=%.3e evals=%zu\n",
                    li.value * frack::reciprocal_gamma(cs.g),
                    li.error_estimate, li.evaluations);
    }
    return 0;
}
