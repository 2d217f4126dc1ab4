#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "frack/errors.hpp"
#include "frack/gamma.hpp"

// Generalized Wright function
//
//   pPsiq[(a1,A1)..(ap,Ap); (b1,B1)..(bq,Bq); z]
//     = sum_n  prod_j Gamma(a_j + A_j n) / prod_k Gamma(b_k + B_k n)
//              * z^n / n!
//
// evaluated by direct summation with log-magnitude/sign term assembly, so
// individual gamma factors may overflow or underflow without harming the
// term itself.  The weight sum
//
//   delta = 1 + sum_k B_k - sum_j A_j
//
// governs convergence: delta > 0 gives an entire function, delta = 0 a
// finite radius, delta < 0 a divergent (formal) series.
//
// The auxiliary M function of order mu in (0,1) is the special case
//   M_mu(x) = sum_n (-x)^n / (n! Gamma(1 - mu - mu n)),
// a probability density on x >= 0 for these orders.

namespace frack {

struct WrightPair {
    double a = 1.0; // additive parameter
    double A = 1.0; // coefficient of the series index
};

struct WrightSpec {
    std::vector<WrightPair> upper; // numerator gamma parameters, A > 0
    std::vector<WrightPair> lower; // denominator gamma parameters, B != 0 any sign
};

namespace detail {

inline double wright_weight_sum(const WrightSpec& s) {
    double d = 1.0;
    for (const auto& p : s.upper) d -= p.A;
    for (const auto& p : s.lower) d += p.A;
    return d;
}

inline double wright_radius(const WrightSpec& s) {
    double le = 0.0;
    for (const auto& p : s.upper) le -= p.A * std::log(p.A);
    for (const auto& p : s.lower) le += p.A * std::log(std::fabs(p.A));
    return std::exp(le);
}

} // namespace detail

inline void validate(const WrightSpec& s) {
    for (const auto& p : s.upper) {
        if (!(p.A > 0.0))
            throw InvalidParameters(
                "Wright: upper coefficients must be positive");
        if (!std::isfinite(p.a) || !std::isfinite(p.A))
            throw InvalidParameters("Wright: non-finite upper parameter");
    }
    for (const auto& p : s.lower) {
        if (p.A == 0.0 || !std::isfinite(p.A) || !std::isfinite(p.a))
            throw InvalidParameters(
                "Wright: lower coefficients must be finite and nonzero");
    }
    if (detail::wright_weight_sum(s) < 0.0)
        throw DivergentParameters(
            "Wright: weight sum below zero, series diverges everywhere");
}

inline double wright_psi(const WrightSpec& s, double z) {
    validate(s);
    const double delta = detail::wright_weight_sum(s);
    if (delta == 0.0 && std::fabs(z) >= detail::wright_radius(s))
        throw DivergentParameters(
            "Wright: argument outside the radius of convergence");

    // Term logs are carried in extended precision: the alternating sum can
    // cancel ~1e6 of its largest term, and double-precision log-gamma noise
    // (~1e-14 per term) would surface multiplied by that ratio.
    const long double lz =
        (z == 0.0) ? 0.0L : std::log(std::fabs(static_cast<long double>(z)));
    const double zsign = (z < 0.0) ? -1.0 : 1.0;
    long double sum = 0.0L, max_mag = 0.0L;
    int small_streak = 0;
    for (int n = 0; n < 10000; ++n) {
        long double lt =
            -std::lgamma(static_cast<long double>(n) + 1.0L) + n * lz;
        double sign = (n % 2 == 1 && zsign < 0.0) ? -1.0 : 1.0;
        bool zero_term = (z == 0.0 && n > 0);
        // Gamma arguments are formed in extended precision as well: close to
        // a pole, digamma (or, right at a near-pole, the reciprocal of the
        // pole distance) amplifies double-rounding of a + A*n far above the
        // log-gamma evaluation error.  Denominator gammas an ulp away from a
        // pole are evaluated honestly -- their small finite terms keep the
        // sum smooth in the parameters -- while a numerator gamma that close
        // is hopeless and throws.
        for (const auto& p : s.upper) {
            const long double arg =
                static_cast<long double>(p.a) +
                static_cast<long double>(p.A) * n;
            if (detail::near_gamma_pole(static_cast<double>(arg)))
                throw DegeneratePoles(
                    "Wright: numerator gamma hits a pole at term " +
                    std::to_string(n));
            sign *= detail::gamma_sign_l(arg);
            lt += std::lgamma(arg);
        }
        for (const auto& p : s.lower) {
            const long double arg =
                static_cast<long double>(p.a) +
                static_cast<long double>(p.A) * n;
            if (detail::is_gamma_pole_l(arg)) {
                zero_term = true; // reciprocal gamma vanishes
                break;
            }
            sign *= detail::gamma_sign_l(arg);
            lt -= std::lgamma(arg);
        }
        long double term = 0.0L;
        if (!zero_term) {
            if (lt > 11300.0L)
                throw NonConvergence("Wright: series term overflows");
            term = sign * std::exp(lt);
        }
        sum += term;
        const long double mag = term < 0.0L ? -term : term;
        if (mag > max_mag) max_mag = mag;
        const long double scale = (sum < 0.0L ? -sum : sum) + 1e-300L;
        if (n >= 4 && mag <= 1e-19L * scale) {
            if (++small_streak >= 2) {
                const double cancel =
                    static_cast<double>(max_mag * 2.2e-16L / scale);
                if (cancel > 1e-9)
                    throw NonConvergence(
                        "Wright: series cancellation leaves too few digits");
                return static_cast<double>(sum);
            }
        } else {
            small_streak = 0;
        }
    }
    throw NonConvergence("Wright: series did not converge in 10000 terms");
}

// M function of order mu in (0,1) at x (any real; even reflection is NOT
// applied -- callers pass x >= 0).
inline double wright_m(double mu, double x) {
    if (!(mu > 0.0) || !(mu < 1.0))
        throw InvalidParameters("wright_m: order must lie in (0,1)");
    WrightSpec s;
    s.lower.push_back(WrightPair{1.0 - mu, -mu});
    return wright_psi(s, -x);
}

} // namespace frack
