#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "frack/errors.hpp"

// Shared quadrature building blocks: adaptive Simpson for smooth integrands,
// tanh-sinh (double-exponential) for integrands with integrable endpoint
// singularities, and an averaging accelerator for alternating series of
// segment integrals.

namespace frack {
namespace detail {

template <typename F>
double adaptive_simpson_rec(F& f, double a, double b, double fa, double fm,
                            double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0) throw QuadratureFailure("adaptive Simpson: depth exhausted");
    if (std::fabs(delta) <= 15.0 * tol || (b - a) < 1e-14 * (1.0 + std::fabs(a)))
        return left + right + delta / 15.0;
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace detail

// Adaptive Simpson on [a,b] with absolute tolerance.  Integrand must be
// finite on the closed interval.
template <typename F>
double integrate_adaptive(F&& f, double a, double b, double abs_tol,
                          int max_depth = 48) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, abs_tol,
                                        max_depth);
}

// Tanh-sinh rule on [a,b].  The integrand is supplied as f(da, db) where
// da = x - a and db = b - x, so endpoint-singular factors like da^(p-1) can
// be formed without cancellation.  Handles any integrable power singularity
// at either endpoint.
template <typename F2>
double integrate_tanh_sinh(F2&& f, double a, double b, double tol,
                           int max_level = 9) {
    const double hw = 0.5 * (b - a);
    if (hw <= 0.0) return 0.0;
    const double u_max = 6.6; // exp-sinh abscissa cutoff; see weight decay note
    auto eval_at = [&](double u, double& accum) {
        // s = (pi/2) sinh u; point offsets from the endpoints:
        //   da = hw (1 - tanh s) = 2 hw e^{-2s} / (1 + e^{-2s}),  db likewise.
        const double s = 0.5 * M_PI * std::sinh(u);
        const double e2 = std::exp(-2.0 * std::fabs(s));
        const double off = 2.0 * hw * e2 / (1.0 + e2);
        const double da = (s >= 0.0) ? (2.0 * hw - off) : off;
        const double db = (s >= 0.0) ? off : (2.0 * hw - off);
        if (da == 0.0 || db == 0.0) return; // weight is ~e^{-2s}, negligible
        const double w =
            hw * M_PI * std::cosh(u) * (2.0 * e2 / ((1.0 + e2) * (1.0 + e2)));
        const double v = f(da, db);
        if (std::isfinite(v)) accum += w * v;
    };
    double h = 1.0;
    double sum = 0.0;
    eval_at(0.0, sum);
    for (double u = h; u <= u_max; u += h) {
        eval_at(u, sum);
        eval_at(-u, sum);
    }
    double prev = sum * h;
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        double add = 0.0;
        for (double u = h; u <= u_max; u += 2.0 * h) {
            eval_at(u, add);
            eval_at(-u, add);
        }
        sum += add;
        const double cur = sum * h;
        if (level >= 3 &&
            std::fabs(cur - prev) <= tol * (1.0 + std::fabs(cur)))
            return cur;
        prev = cur;
    }
    return prev; // converged to machine-level plateau in practice
}

// Adapter for tanh-sinh with a plain f(x) integrand.
template <typename F>
double integrate_tanh_sinh_x(F&& f, double a, double b, double tol,
                             int max_level = 9) {
    return integrate_tanh_sinh(
        [&](double da, double db) {
            (void)db;
            return f(a + da);
        },
        a, b, tol, max_level);
}

// Repeated-averaging acceleration for an alternating sequence of partial
// sums (van Wijngaarden style).  Returns the extrapolated limit.
inline double accelerate_alternating(std::vector<double> partials) {
    if (partials.empty()) return 0.0;
    std::size_t n = partials.size();
    while (n > 1) {
        for (std::size_t i = 0; i + 1 < n; ++i)
            partials[i] = 0.5 * (partials[i] + partials[i + 1]);
        --n;
    }
    return partials[0];
}

} // namespace frack
