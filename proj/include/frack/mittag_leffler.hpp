#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "frack/contour.hpp"
#include "frack/errors.hpp"
#include "frack/gamma.hpp"

// Three-parameter (Prabhakar) Mittag-Leffler function
//
//   E^gamma_{alpha,beta}(z) = sum_n (gamma)_n z^n / (Gamma(alpha n + beta) n!)
//
// and the confluent hypergeometric function expressed through it.  The
// evaluator picks between three methods:
//
//   * the defining power series, accumulated in long double with a
//     cancellation guard (always used for z >= 0; used for small |z| on the
//     negative axis when the guard admits it);
//   * a Mellin-Barnes integral along a vertical line for moderate and large
//     negative z, valid for alpha < 2;
//   * the algebraic expansion in 1/z on the far negative axis for
//     alpha <= 1, truncated at its smallest term.
//
// For alpha in (1,2) the far-negative-axis expansion would miss the damped
// oscillatory contribution, so the contour is used there instead.  alpha = 1
// reduces to a confluent hypergeometric function; a Kummer-type
// transformation turns it into a positive-term series, which sidesteps the
// catastrophic cancellation of the raw series for large negative z.

namespace frack {

struct MLParams {
    double alpha = 1.0;
    double beta = 1.0;
    double gamma = 1.0;
};

namespace detail {

inline constexpr int kSeriesMaxTerms = 10000;

struct MlSeriesResult {
    double value = 0.0;
    bool converged = false;
    double cancellation = 0.0; // max|term| * eps / |sum|
};

// Defining series for z > 0 with the term carried in log space, so huge
// coefficient / tiny reciprocal-gamma pairs (small alpha, moderate z) never
// overflow separately.  All terms are positive, so no cancellation arises;
// the only cost is ~|log term| * eps relative error from the exp calls.
inline MlSeriesResult ml_series_positive(double alpha, double beta,
                                         double gamma, double z) {
    MlSeriesResult r;
    const double lz = std::log(z);
    long double sum = 0.0L;
    double log_coeff = 0.0; // log[(gamma)_n z^n / n!]
    int small_streak = 0;
    for (int n = 0; n < 200000; ++n) {
        const double arg = alpha * n + beta;
        const double lt = log_coeff - log_abs_gamma(arg);
        if (lt > 709.0) { // term alone exceeds double range
            r.value = std::numeric_limits<double>::infinity();
            r.converged = true;
            return r;
        }
        const long double term = std::exp(static_cast<long double>(lt));
        sum += term;
        if (sum > 1.8e308L) {
            r.value = std::numeric_limits<double>::infinity();
            r.converged = true;
            return r;
        }
        if (n >= 4 && term <= 1e-19L * (sum + 1e-300L)) {
            if (++small_streak >= 2) {
                r.value = static_cast<double>(sum);
                r.converged = true;
                return r;
            }
        } else {
            small_streak = 0;
        }
        log_coeff += lz + std::log(gamma + n) - std::log(n + 1.0);
    }
    return r;
}

// Defining series, long double accumulation, direct term recurrence.  Used
// on the negative axis; the caller decides whether the reported cancellation
// level is acceptable.
inline MlSeriesResult ml_series(double alpha, double beta, double gamma,
                                double z) {
    MlSeriesResult r;
    long double sum = 0.0L, coeff = 1.0L; // coeff = (gamma)_n z^n / n!
    long double max_mag = 0.0L;
    int small_streak = 0;
    for (int n = 0; n < kSeriesMaxTerms; ++n) {
        const double arg = alpha * n + beta;
        const double rg = reciprocal_gamma(arg);
        if (rg == 0.0 && n > 0) return r; // 1/Gamma underflowed: cannot finish
        const long double term = coeff * static_cast<long double>(rg);
        sum += term;
        const long double mag = term < 0.0L ? -term : term;
        if (mag > max_mag) max_mag = mag;
        if (sum > 1.8e308L) { // monotone overflow (z > 0)
            r.value = std::numeric_limits<double>::infinity();
            r.converged = true;
            return r;
        }
        const long double scale = (sum < 0.0L ? -sum : sum) + 1e-300L;
        if (n >= 4 && mag <= 1e-19L * scale) {
            if (++small_streak >= 2) {
                r.value = static_cast<double>(sum);
                r.converged = true;
                // The reciprocal-gamma factors carry double-precision
                // relative error, so that is the epsilon that matters when
                // terms cancel, not the long-double accumulator's.
                r.cancellation =
                    static_cast<double>(max_mag * 2.2e-16L / scale);
                return r;
            }
        } else {
            small_streak = 0;
        }
        coeff *= static_cast<long double>(z) *
                 (static_cast<long double>(gamma) + n) / (n + 1);
        if (coeff != coeff || coeff > 1e4920L || coeff < -1e4920L)
            break; // term recurrence left the representable range
    }
    r.value = static_cast<double>(sum);
    return r;
}

// alpha == 1, z < 0: E^g_{1,b}(z) = e^z * sum_n (b-g)_n (-z)^n/(Gamma(n+b) n!).
// All series terms are eventually positive, so no cancellation occurs.
inline double ml_alpha_one_negative(double beta, double gamma, double z) {
    const double x = -z;
    long double sum = 0.0L, coeff = 1.0L; // (beta-gamma)_n x^n / n!
    int small_streak = 0;
    for (int n = 0; n < kSeriesMaxTerms; ++n) {
        const long double term =
            coeff * static_cast<long double>(reciprocal_gamma(beta + n));
        sum += term;
        const long double mag = term < 0.0L ? -term : term;
        const long double scale = (sum < 0.0L ? -sum : sum) + 1e-300L;
        if (n >= 4 && mag <= 1e-19L * scale) {
            if (++small_streak >= 2)
                return static_cast<double>(
                    std::exp(static_cast<long double>(z)) * sum);
        } else {
            small_streak = 0;
        }
        coeff *= static_cast<long double>(x) *
                 (static_cast<long double>(beta - gamma) + n) / (n + 1);
    }
    throw NonConvergence("Mittag-Leffler alpha=1 series did not converge");
}

// Algebraic expansion in 1/z on the negative axis (z = -x, x large):
//   E = x^{-gamma} sum_k (gamma)_k / k! * (-1)^k / Gamma(beta - alpha(gamma+k))
//       * x^{-k},
// truncated at the smallest term.  Valid as an asymptotic series; for
// alpha <= 1 the omitted exponential contributions are recessive.
inline double ml_asymptotic_negative(double alpha, double beta, double gamma,
                                     double z, double* tail_rel = nullptr) {
    const double x = -z;
    const double lx = std::log(x);
    long double sum = 0.0L;
    double log_coeff = 0.0; // log[(gamma)_k / k!]
    double last_nonzero = std::numeric_limits<double>::infinity();
    double smallest = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 400; ++k) {
        const double rg = reciprocal_gamma(beta - alpha * (gamma + k));
        if (rg != 0.0) {
            const double mag =
                std::exp(log_coeff - k * lx) * std::fabs(rg);
            if (mag > last_nonzero) break; // smallest term reached
            const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
            sum += static_cast<long double>(
                sgn * std::exp(log_coeff - k * lx) * rg);
            last_nonzero = mag;
            if (mag < smallest) smallest = mag;
            const long double scale = (sum < 0.0L ? -sum : sum) + 1e-300L;
            if (mag <= 1e-18 * static_cast<double>(scale)) break;
        }
        log_coeff += std::log((gamma + k) / (k + 1.0));
    }
    const double s = static_cast<double>(sum);
    if (tail_rel) {
        *tail_rel = (s != 0.0) ? smallest / std::fabs(s)
                               : std::numeric_limits<double>::infinity();
    }
    return std::exp(-gamma * lx) * s;
}

// Mellin-Barnes integral for z < 0, alpha < 2:
//   E = (1/Gamma(gamma)) (1/(2 pi i)) Int Gamma(-xi)Gamma(gamma+xi)
//        / Gamma(beta+alpha xi) * x^xi d(xi),    x = -z,
// along Re(xi) = c with -min(gamma,1)/2 separating the two pole families.
inline double ml_contour_negative(double alpha, double beta, double gamma,
                                  double z) {
    const double x = -z;
    const double c = -0.5 * (gamma < 1.0 ? gamma : 1.0);
    const double lx = std::log(x);
    auto f = [&](std::complex<double> xi) {
        const std::complex<double> L = log_gamma(-xi) + log_gamma(gamma + xi) -
                                       log_gamma(beta + alpha * xi) + xi * lx;
        return std::exp(L);
    };
    const auto line = integrate_vertical_line(f, c, 1e-12);
    return line.value * reciprocal_gamma(gamma);
}

} // namespace detail

inline void validate(const MLParams& p) {
    if (!(p.alpha > 0.0) || p.alpha > 2.0)
        throw InvalidParameters("Mittag-Leffler: alpha must lie in (0,2]");
    if (!(p.beta > 0.0))
        throw InvalidParameters("Mittag-Leffler: beta must be positive");
    if (!(p.gamma > 0.0))
        throw InvalidParameters("Mittag-Leffler: gamma must be positive");
}

// E^gamma_{alpha,beta}(z) for real z.  gamma = 0 is admitted and gives the
// constant 1/Gamma(beta) (empty product in every term beyond n = 0).
inline double mittag_leffler(const MLParams& p, double z) {
    const double alpha = p.alpha, beta = p.beta, gamma = p.gamma;
    if (!(alpha > 0.0) || alpha > 2.0)
        throw InvalidParameters("Mittag-Leffler: alpha must lie in (0,2]");
    if (!(beta > 0.0))
        throw InvalidParameters("Mittag-Leffler: beta must be positive");
    if (gamma < 0.0)
        throw InvalidParameters("Mittag-Leffler: gamma must be nonnegative");
    if (z == 0.0 || gamma == 0.0) return reciprocal_gamma(beta);

    constexpr double kSeriesEdge = 5.0;
    constexpr double kFarEdge = 50.0;
    constexpr double kCancelAccept = 1e-12;

    if (z > 0.0) {
        const auto r = detail::ml_series_positive(alpha, beta, gamma, z);
        if (r.converged) return r.value;
        throw NonConvergence(
            "Mittag-Leffler series did not converge for z = " +
            std::to_string(z));
    }

    // z < 0 from here on.
    if (alpha == 1.0) return detail::ml_alpha_one_negative(beta, gamma, z);

    const double x = -z;
    if (x <= kSeriesEdge || alpha == 2.0) {
        const auto r = detail::ml_series(alpha, beta, gamma, z);
        if (r.converged && r.cancellation <= kCancelAccept) return r.value;
        if (alpha == 2.0) {
            if (r.converged && r.cancellation <= 1e-7) return r.value;
            throw NonConvergence(
                "Mittag-Leffler alpha=2 series lost too much precision");
        }
        // fall through to the contour
    } else if (x >= kFarEdge && alpha <= 1.0) {
        double tail = 0.0;
        const double v =
            detail::ml_asymptotic_negative(alpha, beta, gamma, z, &tail);
        if (tail <= 1e-11) return v;
        // fall through to the contour when the asymptotic truncation is weak
    }
    return detail::ml_contour_negative(alpha, beta, gamma, z);
}

inline double mittag_leffler(double alpha, double beta, double z) {
    return mittag_leffler(MLParams{alpha, beta, 1.0}, z);
}

inline double mittag_leffler(double alpha, double z) {
    return mittag_leffler(MLParams{alpha, 1.0, 1.0}, z);
}

// Kummer confluent hypergeometric Phi(a, c; z) = Gamma(c) E^a_{1,c}(z).
inline double kummer_phi(double a, double c, double z) {
    if (c <= 0.0 && detail::is_nonpositive_integer(c))
        throw InvalidParameters("kummer_phi: c must not be a nonpositive integer");
    if (!(c > 0.0))
        throw InvalidParameters("kummer_phi: c must be positive here");
    if (!(a >= 0.0))
        throw InvalidParameters("kummer_phi: a must be nonnegative here");
    return gamma_fn(c) * mittag_leffler(MLParams{1.0, c, a}, z);
}

} // namespace frack
