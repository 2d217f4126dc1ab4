// Probe: per corpus spec, scan arguments and report the measured residue
// cancellation margin vs the contour value.
#include <cmath>
#include <cstdio>

#include "frack/frack.hpp"

int main() {
    std::setvbuf(stdout, nullptr, _IONBF, 0);
    using namespace frack;
    for (const auto& e : detail::h_function_corpus()) {
        std::printf("== %s  range [%g, %g]\n", e.name, e.z_lo, e.z_hi);
        for (double z : detail::log_spaced(e.z_lo, 2.0 * e.z_hi, 9)) {
            double series = 0.0, contour = 0.0;
            const char* status = "ok";
            try {
                series = evaluate_residue_series(e.spec, z, 1e-9);
            } catch (const Error& err) {
                status = err.what();
            }
            try {
                contour = evaluate_contour(e.spec, z);
            } catch (const Error& err) {
                std::printf("  z=%-8.3g CONTOUR FAIL: %s\n", z, err.what());
                continue;
            }
            if (status[0] == 'o') {
                const double rel = std::fabs(series - contour) /
                                   std::max(std::fabs(contour), 1e-300);
                std::printf("  z=%-8.3g rel=%.3e  (series %.9e contour %.9e)\n",
                            z, rel, series, contour);
            } else {
                std::printf("  z=%-8.3g series throws: %s\n", z, status);
            }
        }
    }
    return 0;
}
