#pragma once

#include <cmath>
#include <complex>
#include <cstddef>

#include "frack/errors.hpp"

// Trapezoid quadrature along a vertical line in the complex plane, the
// workhorse behind every Mellin-Barnes evaluation in the library.
//
// For an integrand analytic in a strip around the line and decaying
// exponentially along it, the trapezoid rule converges geometrically in the
// reciprocal step size, so an adaptive step-halving loop reaches near
// machine accuracy with a modest number of samples.

namespace frack {
namespace detail {

struct LineIntegral {
    double value = 0.0;          // (1/(2*pi)) * integral over the full line
    double error_estimate = 0.0; // last refinement delta
    std::size_t evaluations = 0;
};

// Computes (1/(2*pi*i)) * Int_{c-i inf}^{c+i inf} f(xi) d(xi) for an
// integrand with conjugate symmetry f(conj(xi)) = conj(f(xi)), i.e.
// (1/pi) * Int_0^inf Re f(c + i t) dt.
template <typename F>
LineIntegral integrate_vertical_line(F&& f, double c, double rel_tol,
                                     double t_cap = 2.0e5) {
    LineIntegral out;

    // Truncation scan: walk outward until the integrand magnitude falls
    // eighteen decades below its running peak.  The peak need not sit at
    // t = 0 (wide-saddle cases), so keep scanning at least past 4x the
    // peak location.
    double peak = 0.0, t_peak = 0.0;
    double T = 0.0;
    const double scan_step = 0.5;
    for (double t = 0.0;; t += scan_step) {
        const double mag = std::abs(f(std::complex<double>(c, t)));
        ++out.evaluations;
        if (mag > peak) {
            peak = mag;
            t_peak = t;
        }
        if (t >= 8.0 && t >= 4.0 * t_peak && peak > 0.0 &&
            mag <= 1e-18 * peak) {
            T = t;
            break;
        }
        if (t > t_cap)
            throw ContourFailure("vertical-line integrand decays too slowly");
    }
    if (peak == 0.0) return out;

    // Composite trapezoid on [0, T] of Re f, halving h until stable.  The
    // running sums are kept in extended precision: when the line integrand
    // oscillates, the integral can sit many decades below the peak, and the
    // achievable accuracy is set by per-evaluation noise, not by h.
    auto trapezoid_full = [&](double h) -> long double {
        long double s = 0.5L * f(std::complex<double>(c, 0.0)).real();
        ++out.evaluations;
        for (double t = h; t <= T; t += h) {
            s += f(std::complex<double>(c, t)).real();
            ++out.evaluations;
        }
        return s * h;
    };
    auto trapezoid_refine = [&](long double prev_sum_times_h,
                                double h) -> long double {
        // prev computed at step 2h; add odd multiples of h.
        long double add = 0.0L;
        for (double t = h; t <= T; t += 2.0 * h) {
            add += f(std::complex<double>(c, t)).real();
            ++out.evaluations;
        }
        return 0.5L * prev_sum_times_h + add * h;
    };

    double h = T / 64.0;
    if (h > 0.5) h = 0.5;
    long double I = trapezoid_full(h);
    // Per-evaluation roundoff in f performs a random walk of length ~T/h;
    // its contribution to the integral is ~eps * peak * sqrt(T).
    const double t_scale = T < 100.0 ? (T > 1.0 ? T : 1.0) : 100.0;
    const double abs_floor = 2e-16 * peak * std::sqrt(t_scale);
    for (int level = 0; level < 14; ++level) {
        h *= 0.5;
        const long double I2 = trapezoid_refine(I, h);
        const double delta = static_cast<double>(
            I2 > I ? I2 - I : I - I2);
        I = I2;
        out.error_estimate = delta;
        const double ival = static_cast<double>(I2);
        if (level >= 1 &&
            delta <= (rel_tol * std::fabs(ival) > abs_floor
                          ? rel_tol * std::fabs(ival)
                          : abs_floor)) {
            out.value = ival / M_PI;
            return out;
        }
        if (out.evaluations > 4.0e6)
            throw ContourFailure("vertical-line quadrature budget exhausted");
    }
    throw ContourFailure("vertical-line quadrature did not stabilize");
}

} // namespace detail
} // namespace frack
