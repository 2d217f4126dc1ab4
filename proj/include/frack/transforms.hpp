#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "frack/errors.hpp"
#include "frack/quadrature.hpp"

// Numeric Laplace transform and inversion plus an infinite-range cosine
// quadrature.  These are the verification-side tools: every identity check
// that compares a closed-form solution against an independently computed
// transform goes through this header.

namespace frack {

// Probe points used by verification drivers: Laplace abscissae s > 0 and
// Fourier wavenumbers k >= 0, with the acceptance tolerance they are judged
// against.
struct TransformProbe {
    std::vector<double> s_values;
    std::vector<double> k_values;
    double tolerance = 1e-6;
};

inline void validate(const TransformProbe& p) {
    if (!(p.tolerance > 0.0) || !std::isfinite(p.tolerance))
        throw InvalidParameters("TransformProbe: tolerance must be positive");
    for (double s : p.s_values)
        if (!(s > 0.0) || !std::isfinite(s))
            throw InvalidParameters("TransformProbe: s values must be positive");
    for (double k : p.k_values)
        if (!(k >= 0.0) || !std::isfinite(k))
            throw InvalidParameters("TransformProbe: k values must be >= 0");
}

// integral_0^inf e^{-st} f(t) dt for s > 0.  The domain is truncated where
// e^{-st} < 1e-18 (or at t_max if the caller knows f vanishes beyond it) and
// split into geometrically growing panels so the mass near t = 0 is resolved;
// each panel uses tanh-sinh, which also absorbs an integrable power
// singularity of f at t = 0.
template <typename F>
double laplace_numeric(F&& f, double s, double t_max =
                           std::numeric_limits<double>::infinity()) {
    if (!(s > 0.0) || !std::isfinite(s))
        throw InvalidParameters("laplace_numeric: s must be positive");
    const double T = std::min(41.446531673892822 / s, t_max); // -ln(1e-18)/s
    if (!(T > 0.0)) return 0.0;
    double total = 0.0;
    double left = 0.0;
    double right = T / 64.0;
    for (int panel = 0; panel < 7; ++panel) {
        const double a = left;
        total += integrate_tanh_sinh(
            [&](double da, double db) {
                (void)db;
                const double t = a + da;
                return std::exp(-s * t) * f(t);
            },
            left, right, 1e-13);
        left = right;
        right = (panel == 5) ? T : right * 2.0;
    }
    if (!std::isfinite(total))
        throw QuadratureFailure("laplace_numeric: integral did not evaluate finitely");
    return total;
}

// Inverse Laplace transform from samples of F on the positive real axis:
// Gaver functionals accelerated by Wynn's rho algorithm, carried in long
// double because the accelerated differences cancel ~10 digits at order 16.
// F is only ever called at the real points i * ln2 / t, i = 1..2*order.
template <typename F>
double laplace_invert_numeric(F&& transform, double t, int order = 16) {
    if (!(t > 0.0) || !std::isfinite(t))
        throw InvalidParameters("laplace_invert_numeric: t must be positive");
    if (order < 4) order = 4;
    if (order > 24) order = 24;
    if (order % 2 != 0) ++order;
    const int M = order;

    const long double ln2 = 0.6931471805599453094172321214581766L;
    const long double a = ln2 / static_cast<long double>(t);

    std::vector<long double> fv(static_cast<std::size_t>(2 * M + 1));
    for (int i = 1; i <= 2 * M; ++i) {
        const double v = transform(static_cast<double>(static_cast<long double>(i) * a));
        if (!std::isfinite(v))
            throw InversionUnstable("laplace_invert_numeric: transform not finite on the rule's abscissae");
        fv[static_cast<std::size_t>(i)] = v;
    }

    // Gaver functionals G_n = n a C(2n,n) sum_k (-1)^k C(n,k) F((n+k) a).
    std::vector<long double> g(static_cast<std::size_t>(M));
    long double central = 1.0L; // C(2n, n), exact in long double for n <= 24
    for (int n = 1; n <= M; ++n) {
        central = central * 2.0L * (2.0L * n - 1.0L) / static_cast<long double>(n);
        long double binom = 1.0L; // C(n, k)
        long double sum = 0.0L;
        long double sign = 1.0L;
        for (int k = 0; k <= n; ++k) {
            sum += sign * binom * fv[static_cast<std::size_t>(n + k)];
            binom = binom * static_cast<long double>(n - k) /
                    static_cast<long double>(k + 1);
            sign = -sign;
        }
        g[static_cast<std::size_t>(n - 1)] = static_cast<long double>(n) * a * central * sum;
    }

    // Wynn's rho table over the Gaver sequence; only even-index columns
    // approximate the limit.
    std::vector<long double> prev2(static_cast<std::size_t>(M + 1), 0.0L);
    std::vector<long double> prev1 = g;
    std::vector<long double> evens;
    evens.push_back(g[0]);
    for (int k = 1; k < M; ++k) {
        std::vector<long double> cur(static_cast<std::size_t>(M - k));
        for (int n = 0; n < M - k; ++n) {
            const long double d = prev1[static_cast<std::size_t>(n + 1)] -
                                  prev1[static_cast<std::size_t>(n)];
            if (d == 0.0L) {
                cur[static_cast<std::size_t>(n)] = prev2[static_cast<std::size_t>(n + 1)];
                continue;
            }
            cur[static_cast<std::size_t>(n)] =
                prev2[static_cast<std::size_t>(n + 1)] + static_cast<long double>(k) / d;
        }
        prev2.swap(prev1);
        prev1.swap(cur);
        if (k % 2 == 0 && !prev1.empty()) evens.push_back(prev1[0]);
    }

    // The even columns first converge, then diverge once roundoff in the
    // accelerated differences takes over; take the value at the plateau.
    std::size_t best = 1;
    long double best_delta = std::numeric_limits<long double>::infinity();
    for (std::size_t i = 1; i < evens.size(); ++i) {
        const long double d = std::fabs(evens[i] - evens[i - 1]);
        if (d < best_delta) {
            best_delta = d;
            best = i;
        }
    }
    const long double value = evens[best];
    if (!std::isfinite(static_cast<double>(value)) ||
        best_delta > 1e-3L * std::max(std::fabs(value), 1e-2L))
        throw InversionUnstable("laplace_invert_numeric: accelerated columns failed to stabilize");
    return static_cast<double>(value);
}

namespace detail {

// integral_0^inf g(k) dk for eventually power-law or faster decaying g,
// by octave doubling with a decay-order tail bound.
template <typename G>
double integral_halfline(G&& g, double rel_tol) {
    double total = integrate_tanh_sinh_x(g, 0.0, 8.0, 1e-13);
    double K = 8.0;
    for (int iter = 0; iter < 40; ++iter) {
        const double gk = g(K);
        if (gk == 0.0 || std::fabs(gk) < 1e-300) return total;
        const double gprev = g(0.5 * K);
        if (gprev != 0.0 && std::fabs(gk) < std::fabs(gprev)) {
            const double p = std::log2(std::fabs(gprev / gk));
            if (p > 1.001) {
                const double tail = std::fabs(gk) * K / (p - 1.0);
                if (tail <= rel_tol * (std::fabs(total) + 1e-6)) return total;
            }
        }
        total += integrate_tanh_sinh_x(g, K, 2.0 * K, 1e-13);
        K *= 2.0;
    }
    throw QuadratureFailure("integral_halfline: tail did not come under the bound");
}

} // namespace detail

// (1/pi) integral_0^inf g(k) cos(kx) dk for absolutely integrable, eventually
// monotone g.  For x > 0 the axis is cut at the cosine zeros and the
// alternating segment sums are extrapolated by repeated averaging, which
// copes with the algebraic decay of Mittag-Leffler-type integrands; at x = 0
// it reduces to a half-line integral with a power-law tail bound.
template <typename G>
double cosine_quadrature(G&& g, double x, double rel_tol = 1e-9) {
    x = std::fabs(x);
    if (x < 1e-12)
        return detail::integral_halfline(g, std::max(1e-8, 0.1 * rel_tol)) /
               M_PI;

    const double z0 = 0.5 * M_PI / x;
    auto integrand = [&](double k) { return g(k) * std::cos(k * x); };
    const double seg_tol =
        (rel_tol * 1e-5) * (1.0 + std::fabs(g(0.0))) * std::min(z0, 1e3);

    double sum = integrate_adaptive(integrand, 0.0, z0, seg_tol);
    std::vector<double> partials;
    partials.push_back(sum);
    double prev_accel = sum;
    int stable = 0;
    double lo = z0;
    for (int m = 1; m <= 400; ++m) {
        const double hi = z0 + m * M_PI / x;
        const double piece = integrate_adaptive(integrand, lo, hi, seg_tol);
        lo = hi;
        sum += piece;
        partials.push_back(sum);
        if (partials.size() > 16) partials.erase(partials.begin());
        if (std::fabs(piece) <= 1e-16 * (std::fabs(sum) + 1e-300) && m >= 4)
            return sum / M_PI;
        if (m >= 6) {
            const double accel = accelerate_alternating(partials);
            if (std::fabs(accel - prev_accel) <=
                rel_tol * (std::fabs(accel) + 1e-12)) {
                if (++stable >= 2) return accel / M_PI;
            } else {
                stable = 0;
            }
            prev_accel = accel;
        }
    }
    throw QuadratureFailure("cosine_quadrature: segment sums failed to stabilize");
}

} // namespace frack
