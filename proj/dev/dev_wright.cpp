#include <cmath>
#include <cstdio>

#include "frack/mittag_leffler.hpp"
#include "frack/wright.hpp"

static int fails = 0;
static void chk(const char* name, double got, double want, double tol) {
    const double rel = std::fabs(got - want) / (std::fabs(want) + 1e-300);
    if (!(rel <= tol)) {
        std::printf("FAIL %-28s got=%.16e want=%.16e rel=%.2e\n", name, got,
                    want, rel);
        ++fails;
    } else {
        std::printf("ok   %-28s rel=%.2e\n", name, rel);
    }
}

int main() {
    using namespace frack;

    // M_{1/2}(x) = exp(-x^2/4)/sqrt(pi)
    for (double x : {0.0, 0.3, 1.0, 2.5, 4.0}) {
        chk("M_half", wright_m(0.5, x),
            std::exp(-x * x / 4) / std::sqrt(M_PI), 1e-12);
    }
    // M_{1/3}(x) = 3^{2/3} Ai(x/3^{1/3}); at x=1 this is 0.39623947970650259
    chk("M_third_x1", wright_m(1.0 / 3.0, 1.0), 0.39623947970650259, 1e-12);

    // 1Psi1[(g,1);(b,a); z] = Gamma(g) E^g_{a,b}(z)
    for (double z : {2.0, -2.0, 0.7}) {
        WrightSpec s;
        s.upper = {{2.2, 1.0}};
        s.lower = {{1.3, 0.7}};
        chk("psi11_vs_ml", wright_psi(s, z),
            gamma_fn(2.2) * mittag_leffler(MLParams{0.7, 1.3, 2.2}, z),
            1e-11);
    }

    // 0Psi1[;(1,1); z] = I_0(2 sqrt z):  I_0(2) = 2.2795853023360673
    {
        WrightSpec s;
        s.lower = {{1.0, 1.0}};
        chk("psi01_bessel", wright_psi(s, 1.0), 2.2795853023360673, 1e-13);
    }

    // 1Psi1[(1,1);(0,1); z] = z e^z  (n = 0 term killed by the pole of
    // 1/Gamma at 0)
    {
        WrightSpec s;
        s.upper = {{1.0, 1.0}};
        s.lower = {{0.0, 1.0}};
        chk("psi11_pole_skip", wright_psi(s, 1.5), 1.5 * std::exp(1.5),
            1e-13);
    }

    // delta = 0: 2Psi1[(1,1),(1,1);(1,1); z] = 1/(1-z), radius 1
    {
        WrightSpec s;
        s.upper = {{1.0, 1.0}, {1.0, 1.0}};
        s.lower = {{1.0, 1.0}};
        chk("geometric_half", wright_psi(s, 0.5), 2.0, 1e-13);
        chk("geometric_neg", wright_psi(s, -0.5), 2.0 / 3.0, 1e-13);
        bool threw = false;
        try {
            wright_psi(s, 1.0);
        } catch (const DivergentParameters&) {
            threw = true;
        }
        std::printf("%s  geometric_radius_throw\n", threw ? "ok  " : "FAIL");
        if (!threw) ++fails;
    }

    // delta < 0 rejected outright
    {
        WrightSpec s;
        s.upper = {{1.0, 2.0}};
        bool threw = false;
        try {
            wright_psi(s, 0.1);
        } catch (const DivergentParameters&) {
            threw = true;
        }
        std::printf("%s  divergent_throw\n", threw ? "ok  " : "FAIL");
        if (!threw) ++fails;
    }

    // numerator pole -> DegeneratePoles
    {
        WrightSpec s;
        s.upper = {{0.0, 1.0}};
        bool threw = false;
        try {
            wright_psi(s, 0.5);
        } catch (const DegeneratePoles&) {
            threw = true;
        }
        std::printf("%s  numerator_pole_throw\n", threw ? "ok  " : "FAIL");
        if (!threw) ++fails;
    }

    // heavy cancellation rejected (M function far out on the axis)
    {
        bool threw = false;
        try {
            wright_m(0.5, 14.0);
        } catch (const NonConvergence&) {
            threw = true;
        }
        std::printf("%s  cancellation_throw\n", threw ? "ok  " : "FAIL");
        if (!threw) ++fails;
    }

    std::printf("fails=%d\n", fails);
    return fails != 0;
}
