// Three-way probe at the nu=1.3 mismatch point: residue series vs Wright
// series vs vertical-line contour for the propagator H spec.
#include <cmath>
#include <complex>
#include <cstdio>

#include "frack/diffusion.hpp"

using namespace frack;

int main() {
    const double nu = 1.3, chi = 4.0;
    const double y = 0.25 * chi * chi;
    const HFunctionSpec spec = green_h_spec(nu);

    const double wright = 0.5 * wright_m(0.5 * nu, chi) * std::sqrt(4.0 * M_PI);
    std::printf("wright : %.16e\n", wright);

    try {
        const double res = evaluate_residue_series(spec, y, 1e-9);
        std::printf("residue: %.16e  rel vs wright %.3g\n", res,
                    std::fabs(res - wright) / std::fabs(wright));
    } catch (const Error& e) {
        std::printf("residue: threw %s\n", e.what());
    }

    for (double rt : {1e-9, 1e-11, 1e-13}) {
        try {
            const HLogValue lv = evaluate_contour_log(spec, y, rt);
            const double v = lv.sign * std::exp(lv.log_abs);
            std::printf("contour(rt=%.0e): %.16e  rel vs wright %.3g\n", rt, v,
                        std::fabs(v - wright) / std::fabs(wright));
        } catch (const Error& e) {
            std::printf("contour(rt=%.0e): threw %s\n", rt, e.what());
        }
    }

    // Manual vertical line at several abscissae with very fine fixed h, to
    // see where the automatic version differs.
    const double lz = std::log(y);
    auto logf = [&](std::complex<double> xi) {
        return frack::detail::log_gamma(0.0 + xi) + frack::detail::log_gamma(0.5 + xi) -
               frack::detail::log_gamma((1.0 - 0.5 * nu) + nu * xi) - xi * lz;
    };
    for (double c : {0.3, 0.6, 1.0, 1.5}) {
        for (double T : {30.0, 60.0, 120.0}) {
            const double h = 0.002;
            long double acc = 0.5L * std::exp(logf({c, 0.0})).real();
            for (double t = h; t <= T; t += h)
                acc += std::exp(logf({c, t})).real();
            const double v = static_cast<double>(acc) * h / M_PI;
            std::printf("manual c=%.1f T=%5.0f: %.16e  rel vs wright %.3g\n",
                        c, T, v, std::fabs(v - wright) / std::fabs(wright));
        }
    }
    return 0;
}
