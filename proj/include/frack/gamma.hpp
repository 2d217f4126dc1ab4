#pragma once

#include <cmath>
#include <complex>
#include <limits>

#include "frack/errors.hpp"

// Gamma-function machinery shared by every evaluator in the library.
//
// The core is a Lanczos approximation (g = 607/128, 15 coefficients) good to
// ~15 significant digits for Re(z) >= 0.5, extended to the rest of the plane
// by the reflection formula.  The reciprocal gamma returns exactly zero at
// nonpositive integers, which is what lets residue series and asymptotic
// series drop vanishing terms without special-casing.

namespace frack {
namespace detail {

inline constexpr double kLanczosG = 607.0 / 128.0; // 4.7421875

inline constexpr double kLanczosC[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

inline constexpr double kHalfLogTwoPi = 0.91893853320467274178; // ln(2*pi)/2
inline constexpr double kLogPi = 1.1447298858494001741;         // ln(pi)

// sin(pi*x) with argument reduction performed on x itself, so it stays
// accurate for large |x| where sin(M_PI*x) would lose all digits.
inline double sin_pi(double x) {
    const double n = std::nearbyint(x);
    const double r = x - n; // in [-0.5, 0.5]
    const double s = std::sin(M_PI * r);
    // nearbyint of a large double is even-exactly representable; parity test
    // via fmod is safe because n is an exact integer value.
    const bool odd = std::fmod(std::fabs(n), 2.0) == 1.0;
    return odd ? -s : s;
}

inline bool is_nonpositive_integer(double x, double tol = 0.0) {
    if (x > tol) return false;
    return std::fabs(x - std::nearbyint(x)) <= tol;
}

// Lanczos sum A_g(z) = c0 + sum_k c_k/(z+k-1), valid for Re(z) > 0.
template <typename T>
inline T lanczos_sum(const T& z) {
    T s = T(kLanczosC[0]);
    for (int k = 1; k < 15; ++k) s += kLanczosC[k] / (z + T(k - 1));
    return s;
}

// log Gamma for real x > 0.
inline double log_gamma_pos(double x) {
    if (x <= 0.0) return std::numeric_limits<double>::quiet_NaN();
    if (x < 0.5) {
        // One recurrence step keeps the Lanczos core in its sweet spot.
        return log_gamma_pos(x + 1.0) - std::log(x);
    }
    const double t = x + kLanczosG - 0.5;
    return kHalfLogTwoPi + (x - 0.5) * std::log(t) - t + std::log(lanczos_sum(x));
}

// log|sin(pi*z)| stable for large |Im z|; requires Im(z) >= 0.
inline std::complex<double> log_sin_pi_upper(std::complex<double> z) {
    if (z.imag() == 0.0) {
        const double s = sin_pi(z.real());
        return {std::log(std::fabs(s)), s >= 0.0 ? 0.0 : M_PI};
    }
    // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z}), |e^{2 i pi z}| <= 1.
    const std::complex<double> i(0.0, 1.0);
    const std::complex<double> w = std::exp(2.0 * i * M_PI * z);
    return std::log(0.5) + i * (M_PI / 2.0) - i * M_PI * z + std::log(1.0 - w);
}

// Complex log Gamma.  Branch jumps of 2*pi*i are possible across calls; the
// library only ever exponentiates sums of these values, so that is harmless.
inline std::complex<double> log_gamma(std::complex<double> z) {
    if (z.imag() < 0.0) return std::conj(log_gamma(std::conj(z)));
    if (z.real() >= 0.5) {
        const std::complex<double> t = z + (kLanczosG - 0.5);
        return kHalfLogTwoPi + (z - 0.5) * std::log(t) - t + std::log(lanczos_sum(z));
    }
    // Reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1-z).
    return kLogPi - log_sin_pi_upper(z) - log_gamma(1.0 - z);
}

// True when x lies within 1e-12 (absolute-plus-relative) of a nonpositive
// integer, i.e. of a Gamma pole.  Used where a *numerator* gamma this close
// to a pole makes the enclosing computation hopeless (nearly-degenerate
// residue structure): the huge near-pole value is then known only as well
// as the tiny pole distance, so evaluators bail out instead.
inline bool near_gamma_pole(double x) {
    if (x > 0.5) return false;
    const double r = std::round(x);
    return std::fabs(x - r) <= 1e-12 * (1.0 + std::fabs(x));
}

// Extended-precision pole test and Gamma sign.  Reciprocal (denominator)
// gammas near a pole must NOT be rounded to zero: for parameters that hit a
// pole exactly in decimal arithmetic but miss by an ulp in binary, the
// resulting small finite term is exactly the compensation that keeps the
// series value smooth in the parameters; only an exact pole annihilates it.
inline bool is_gamma_pole_l(long double x) {
    return x <= 0.0L && x == std::nearbyint(x);
}

inline int gamma_sign_l(long double x) {
    if (x > 0.0L) return 1;
    if (x == std::nearbyint(x)) return 0;
    const long long fl = static_cast<long long>(std::floor(x));
    return (fl % 2 == 0) ? 1 : -1;
}

} // namespace detail

// log|Gamma(x)| for real non-pole x (any sign).
inline double log_abs_gamma(double x) {
    if (x >= 0.5) return detail::log_gamma_pos(x);
    if (detail::is_nonpositive_integer(x))
        return std::numeric_limits<double>::infinity();
    return detail::kLogPi - std::log(std::fabs(detail::sin_pi(x))) -
           detail::log_gamma_pos(1.0 - x);
}

// Sign of Gamma(x); 0 at the poles.
inline int gamma_sign(double x) {
    if (x > 0.0) return 1;
    if (detail::is_nonpositive_integer(x)) return 0;
    return detail::sin_pi(x) > 0.0 ? 1 : -1;
}

// Gamma(x).  NaN at nonpositive integers, +inf on overflow.
inline double gamma_fn(double x) {
    if (x >= 0.5) {
        if (x > 200.0) return std::numeric_limits<double>::infinity();
        return std::exp(detail::log_gamma_pos(x));
    }
    if (detail::is_nonpositive_integer(x))
        return std::numeric_limits<double>::quiet_NaN();
    // Reflection keeps the Lanczos core on positive arguments.
    const double s = detail::sin_pi(x);
    const double lg = detail::log_gamma_pos(1.0 - x);
    if (lg > 700.0) return (s > 0.0 ? 0.0 : -0.0); // |Gamma(x)| underflows
    return M_PI / (s * std::exp(lg));
}

// 1/Gamma(x): entire, exactly zero at nonpositive integers.
inline double reciprocal_gamma(double x) {
    if (x >= 0.5) {
        const double lg = detail::log_gamma_pos(x);
        return lg > 709.0 ? 0.0 : std::exp(-lg);
    }
    if (detail::is_nonpositive_integer(x)) return 0.0;
    // 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi; overflow to +-inf is the
    // correct limit behaviour for very negative non-integer x.
    const double lg = detail::log_gamma_pos(1.0 - x);
    const double s = detail::sin_pi(x);
    if (lg > 709.0)
        return s > 0.0 ? std::numeric_limits<double>::infinity()
                       : -std::numeric_limits<double>::infinity();
    return s * std::exp(lg) / M_PI;
}

// Rising factorial (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1.
// (0)_k vanishes for k >= 1, which the series evaluators rely on.
inline double pochhammer(double a, unsigned k) {
    double p = 1.0;
    for (unsigned i = 0; i < k; ++i) p *= a + static_cast<double>(i);
    return p;
}

} // namespace frack
