#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "frack/contour.hpp"
#include "frack/errors.hpp"
#include "frack/gamma.hpp"

// Fox H function of a positive real argument,
//
//   H^{m,n}_{p,q}[ z | (a1,A1)..(ap,Ap) ; (b1,B1)..(bq,Bq) ]
//     = (1/(2 pi i)) Int Theta(xi) z^{-xi} d(xi),
//
//   Theta(xi) = prod_{j<=m} Gamma(b_j + B_j xi)
//             * prod_{i<=n} Gamma(1 - a_i - A_i xi)
//             / prod_{j>m}  Gamma(1 - b_j - B_j xi)
//             / prod_{i>n}  Gamma(a_i + A_i xi),
//
// with the contour separating the "left" poles xi = -(b_j + k)/B_j (j <= m)
// from the "right" poles xi = (1 - a_i + k)/A_i (i <= n).
//
// Two evaluation methods are provided and cross-checked by the test suite:
//
//   * the residue series over the left poles, valid when the power weight
//     Delta = sum B - sum A is positive, or when Delta = 0 and z lies inside
//     the convergence radius;
//   * direct quadrature of the Mellin-Barnes integral along a vertical
//     line, valid when the decay exponent theta is positive.  When n = 0
//     there is no right pole family and the abscissa is chosen at the
//     saddle of the real-axis integrand, which keeps the quadrature free of
//     cancellation even deep in an exponential tail.  A log-scale variant
//     returns log |H| for values far outside double range.

namespace frack {

struct HPair {
    double a = 0.0; // additive parameter
    double A = 1.0; // positive coefficient of the integration variable

    bool operator==(const HPair&) const = default;
};

struct HFunctionSpec {
    int m = 0;
    int n = 0;
    std::vector<HPair> upper; // size p, first n form the numerator group
    std::vector<HPair> lower; // size q, first m form the numerator group
};

struct HLogValue {
    double log_abs = 0.0;
    double sign = 0.0;
};

// theta > 0 means the line integrand decays like exp(-pi*theta*|t|/2).
inline double theta_exponent(const HFunctionSpec& s) {
    double th = 0.0;
    for (int i = 0; i < static_cast<int>(s.upper.size()); ++i)
        th += (i < s.n) ? s.upper[i].A : -s.upper[i].A;
    for (int j = 0; j < static_cast<int>(s.lower.size()); ++j)
        th += (j < s.m) ? s.lower[j].A : -s.lower[j].A;
    return th;
}

// Delta > 0 makes the residue series converge for every z > 0.
inline double delta_power(const HFunctionSpec& s) {
    double d = 0.0;
    for (const auto& p : s.upper) d -= p.A;
    for (const auto& p : s.lower) d += p.A;
    return d;
}

// Radius of convergence of the residue series when delta_power == 0.
inline double series_radius(const HFunctionSpec& s) {
    double le = 0.0;
    for (const auto& p : s.upper) le -= p.A * std::log(p.A);
    for (const auto& p : s.lower) le += p.A * std::log(p.A);
    return std::exp(le);
}

inline void validate(const HFunctionSpec& s) {
    const int p = static_cast<int>(s.upper.size());
    const int q = static_cast<int>(s.lower.size());
    if (s.n < 0 || s.n > p)
        throw InvalidParameters("H function: need 0 <= n <= p");
    if (s.m < 1 || s.m > q)
        throw InvalidParameters("H function: need 1 <= m <= q");
    for (const auto& pr : s.upper)
        if (!(pr.A > 0.0) || !std::isfinite(pr.a))
            throw InvalidParameters("H function: bad upper pair");
    for (const auto& pr : s.lower)
        if (!(pr.A > 0.0) || !std::isfinite(pr.a))
            throw InvalidParameters("H function: bad lower pair");

    // The left and right pole families must not intersect, otherwise no
    // separating contour exists and the function is undefined.
    for (int j = 0; j < s.m; ++j) {
        for (int i = 0; i < s.n; ++i) {
            const double Bj = s.lower[j].A, bj = s.lower[j].a;
            const double Ai = s.upper[i].A, ai = s.upper[i].a;
            for (int k = 0; k < 200; ++k) {
                const double xi_left = -(bj + k) / Bj;
                const double l = Ai * xi_left - (1.0 - ai);
                if (l > -1e-9 &&
                    std::fabs(l - std::nearbyint(l)) < 1e-9 * (1.0 + l))
                    throw DegeneratePoles(
                        "H function: left and right pole families "
                        "intersect");
            }
        }
    }
}

namespace detail {

// log Theta(xi) - xi log z for complex xi (branch jumps of 2 pi i are
// harmless under exp).
inline std::complex<double> h_log_integrand(const HFunctionSpec& s,
                                            double log_z,
                                            std::complex<double> xi) {
    std::complex<double> L = -xi * log_z;
    const int p = static_cast<int>(s.upper.size());
    const int q = static_cast<int>(s.lower.size());
    for (int j = 0; j < q; ++j) {
        const auto& pr = s.lower[j];
        if (j < s.m)
            L += log_gamma(pr.a + pr.A * xi);
        else
            L -= log_gamma(1.0 - pr.a - pr.A * xi);
    }
    for (int i = 0; i < p; ++i) {
        const auto& pr = s.upper[i];
        if (i < s.n)
            L += log_gamma(1.0 - pr.a - pr.A * xi);
        else
            L -= log_gamma(pr.a + pr.A * xi);
    }
    return L;
}

// Real-axis log |integrand| used for the saddle search (n == 0 case).
inline double h_log_integrand_real(const HFunctionSpec& s, double log_z,
                                   double c) {
    double L = -c * log_z;
    const int p = static_cast<int>(s.upper.size());
    const int q = static_cast<int>(s.lower.size());
    for (int j = 0; j < q; ++j) {
        const auto& pr = s.lower[j];
        if (j < s.m)
            L += log_abs_gamma(pr.a + pr.A * c);
        else
            L -= log_abs_gamma(1.0 - pr.a - pr.A * c);
    }
    for (int i = 0; i < p; ++i) {
        const auto& pr = s.upper[i];
        if (i < s.n)
            L += log_abs_gamma(1.0 - pr.a - pr.A * c);
        else
            L -= log_abs_gamma(pr.a + pr.A * c);
    }
    return L;
}

inline double h_max_left_pole(const HFunctionSpec& s) {
    double lo = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < s.m; ++j)
        lo = std::max(lo, -s.lower[j].a / s.lower[j].A);
    return lo;
}

inline double h_min_right_pole(const HFunctionSpec& s) {
    double hi = std::numeric_limits<double>::infinity();
    for (int i = 0; i < s.n; ++i)
        hi = std::min(hi, (1.0 - s.upper[i].a) / s.upper[i].A);
    return hi;
}

// Pick the abscissa: midpoint of the pole gap when both families exist,
// otherwise the saddle (minimum of the real-axis integrand) right of the
// left poles.
inline double h_contour_abscissa(const HFunctionSpec& s, double log_z) {
    const double lo = h_max_left_pole(s);
    if (s.n > 0) {
        const double hi = h_min_right_pole(s);
        if (!(hi > lo + 1e-12))
            throw ContourFailure(
                "H function: no vertical line separates the pole families");
        return 0.5 * (lo + hi);
    }
    // Bracket a minimum of g(c) on (lo, inf); lo is finite because m >= 1.
    auto g = [&](double c) { return h_log_integrand_real(s, log_z, c); };
    double x1 = lo + 0.25, x2 = lo + 0.5, x3 = lo + 1.0;
    double g1 = g(x1), g2 = g(x2), g3 = g(x3);
    int guard = 0;
    while (!(g2 <= g1 && g2 <= g3)) {
        if (g1 < g2) { // walk left toward lo (poles repel, g -> +inf)
            x3 = x2;
            g3 = g2;
            x2 = x1;
            g2 = g1;
            x1 = 0.5 * (lo + x1);
            g1 = g(x1);
        } else { // walk right
            x1 = x2;
            g1 = g2;
            x2 = x3;
            g2 = g3;
            x3 = x3 + 2.0 * (x3 - x1);
            g3 = g(x3);
        }
        if (++guard > 200)
            throw ContourFailure(
                "H function: saddle bracketing did not terminate");
    }
    // Golden-section refinement.
    const double gr = 0.6180339887498949;
    double a = x1, b = x3;
    double c1 = b - gr * (b - a), c2 = a + gr * (b - a);
    double f1 = g(c1), f2 = g(c2);
    for (int it = 0; it < 90 && (b - a) > 1e-10 * (1.0 + std::fabs(a));
         ++it) {
        if (f1 <= f2) {
            b = c2;
            c2 = c1;
            f2 = f1;
            c1 = b - gr * (b - a);
            f1 = g(c1);
        } else {
            a = c1;
            c1 = c2;
            f1 = f2;
            c2 = a + gr * (b - a);
            f2 = g(c2);
        }
    }
    return 0.5 * (a + b);
}

} // namespace detail

// Residue series over the left poles.  Throws DegeneratePoles when a pole
// is not simple (coincident exponents or a numerator gamma at a pole) and
// NonConvergence when the series cannot reach the requested accuracy.
inline double evaluate_residue_series(const HFunctionSpec& s, double z,
                                      double rel_tol = 1e-11) {
    validate(s);
    if (!(z > 0.0))
        throw InvalidParameters("H function: argument must be positive");
    const double delta = delta_power(s);
    double radius_factor = 1.0; // (1 - r) safety for delta == 0
    if (delta < 0.0)
        throw DivergentParameters(
            "H function: residue series diverges (negative power weight)");
    if (delta == 0.0) {
        const double r = z / series_radius(s);
        if (r >= 1.0 - 1e-9)
            throw NonConvergence(
                "H function: argument at or beyond the series radius");
        radius_factor = 1.0 - r;
    }

    const int p = static_cast<int>(s.upper.size());
    const int q = static_cast<int>(s.lower.size());
    const long double lz = std::log(static_cast<long double>(z));
    std::vector<int> k(s.m, 0);
    long double sum = 0.0L, max_mag = 0.0L;
    int small_streak = 0;
    const int need_streak = 2 * s.m + 2;
    const long double small_frac = 1e-18L * radius_factor;

    for (long iter = 0; iter < 200000; ++iter) {
        // next pole: smallest exponent e = (b_j + k_j)/B_j
        int jbest = -1;
        double ebest = std::numeric_limits<double>::infinity();
        for (int j = 0; j < s.m; ++j) {
            const double e = (s.lower[j].a + k[j]) / s.lower[j].A;
            if (e < ebest) {
                ebest = e;
                jbest = j;
            }
        }
        for (int j = 0; j < s.m; ++j) {
            if (j == jbest) continue;
            const double e = (s.lower[j].a + k[j]) / s.lower[j].A;
            if (std::fabs(e - ebest) <= 1e-9 * (1.0 + std::fabs(ebest)))
                throw DegeneratePoles(
                    "H function: coincident left poles need higher-order "
                    "residues");
        }
        const int kk = k[jbest];
        const double Bj = s.lower[jbest].A;
        k[jbest] += 1;
        // Exponent and gamma arguments are carried in extended precision;
        // near a pole, digamma (or the reciprocal pole distance) amplifies
        // double-rounding of a - A*e far above the log-gamma evaluation
        // error.
        const long double e =
            (static_cast<long double>(s.lower[jbest].a) + kk) / Bj;

        long double lt = -std::lgamma(static_cast<long double>(kk) + 1.0L) -
                         std::log(static_cast<long double>(Bj)) + e * lz;
        double sign = (kk % 2 == 0) ? 1.0 : -1.0;
        bool zero_term = false;
        auto absorb = [&](long double arg, bool numerator) {
            if (numerator) {
                // a numerator gamma this close to a pole means a nearly
                // degenerate residue structure; its huge value is known only
                // as well as the tiny pole distance, so bail out (callers
                // fall back to the contour)
                if (detail::near_gamma_pole(static_cast<double>(arg)))
                    throw DegeneratePoles(
                        "H function: numerator gamma at a pole inside the "
                        "residue series");
            } else if (detail::is_gamma_pole_l(arg)) {
                zero_term = true; // reciprocal gamma vanishes exactly
                return;
            }
            sign *= detail::gamma_sign_l(arg);
            lt += numerator ? std::lgamma(arg) : -std::lgamma(arg);
        };
        for (int j = 0; j < q && !zero_term; ++j) {
            if (j == jbest) continue;
            const auto& pr = s.lower[j];
            if (j < s.m)
                absorb(pr.a - pr.A * e, true);
            else
                absorb(1.0L - pr.a + pr.A * e, false);
        }
        for (int i = 0; i < p && !zero_term; ++i) {
            const auto& pr = s.upper[i];
            if (i < s.n)
                absorb(1.0L - pr.a + pr.A * e, true);
            else
                absorb(pr.a - pr.A * e, false);
        }

        long double term = 0.0L;
        if (!zero_term) {
            if (lt > 11300.0L)
                throw NonConvergence("H function: residue term overflows");
            term = sign * std::exp(lt);
        }
        sum += term;
        const long double mag = term < 0.0L ? -term : term;
        if (mag > max_mag) max_mag = mag;
        const long double scale = (sum < 0.0L ? -sum : sum) + 1e-300L;
        if (iter >= 4 && mag <= small_frac * scale) {
            if (++small_streak >= need_streak) {
                const double cancel =
                    static_cast<double>(max_mag * 2.2e-16L / scale);
                if (cancel > rel_tol)
                    throw NonConvergence(
                        "H function: residue series cancellation exceeds "
                        "the requested tolerance");
                return static_cast<double>(sum);
            }
        } else {
            small_streak = 0;
        }
    }
    throw NonConvergence("H function: residue series did not converge");
}

// Mellin-Barnes quadrature along a separating vertical line.
inline double evaluate_contour(const HFunctionSpec& s, double z,
                               double rel_tol = 1e-11) {
    validate(s);
    if (!(z > 0.0))
        throw InvalidParameters("H function: argument must be positive");
    if (!(theta_exponent(s) > 0.0))
        throw ContourFailure(
            "H function: line integrand does not decay (theta <= 0)");
    const double lz = std::log(z);
    const double c = detail::h_contour_abscissa(s, lz);
    const double L0 = detail::h_log_integrand_real(s, lz, c);
    auto f = [&](std::complex<double> xi) {
        return std::exp(detail::h_log_integrand(s, lz, xi) - L0);
    };
    const auto line = detail::integrate_vertical_line(f, c, rel_tol);
    return line.value * std::exp(L0);
}

// Same quadrature, but the result is returned as log|H| and a sign so that
// exponentially small or large values stay representable.
inline HLogValue evaluate_contour_log(const HFunctionSpec& s, double z,
                                      double rel_tol = 1e-11) {
    validate(s);
    if (!(z > 0.0))
        throw InvalidParameters("H function: argument must be positive");
    if (!(theta_exponent(s) > 0.0))
        throw ContourFailure(
            "H function: line integrand does not decay (theta <= 0)");
    const double lz = std::log(z);
    const double c = detail::h_contour_abscissa(s, lz);
    const double L0 = detail::h_log_integrand_real(s, lz, c);
    auto f = [&](std::complex<double> xi) {
        return std::exp(detail::h_log_integrand(s, lz, xi) - L0);
    };
    const auto line = detail::integrate_vertical_line(f, c, rel_tol);
    HLogValue out;
    if (line.value == 0.0) {
        out.log_abs = -std::numeric_limits<double>::infinity();
        out.sign = 0.0;
        return out;
    }
    out.log_abs = L0 + std::log(std::fabs(line.value));
    out.sign = (line.value > 0.0) ? 1.0 : -1.0;
    return out;
}

// Residue series when viable, contour otherwise.
inline double evaluate(const HFunctionSpec& s, double z,
                       double rel_tol = 1e-11) {
    validate(s);
    if (!(z > 0.0))
        throw InvalidParameters("H function: argument must be positive");
    const double delta = delta_power(s);
    const bool series_viable =
        delta > 0.0 ||
        (delta == 0.0 && z < series_radius(s) * (1.0 - 1e-9));
    const bool contour_viable = theta_exponent(s) > 0.0;
    if (series_viable) {
        try {
            return evaluate_residue_series(s, z, rel_tol);
        } catch (const DegeneratePoles&) {
            if (!contour_viable) throw;
        } catch (const NonConvergence&) {
            if (!contour_viable) throw;
        }
        return evaluate_contour(s, z, rel_tol);
    }
    if (contour_viable) return evaluate_contour(s, z, rel_tol);
    throw InvalidParameters(
        "H function: neither evaluation method applies to this spec");
}

// H^{m,n}_{p,q}[z] = H^{n,m}_{q,p}[1/z] with (a,A) -> (1-b,B), (b,B) -> (1-a,A).
inline HFunctionSpec invert_argument(const HFunctionSpec& s) {
    HFunctionSpec r;
    r.m = s.n;
    r.n = s.m;
    r.upper.reserve(s.lower.size());
    for (const auto& pr : s.lower) r.upper.push_back({1.0 - pr.a, pr.A});
    r.lower.reserve(s.upper.size());
    for (const auto& pr : s.upper) r.lower.push_back({1.0 - pr.a, pr.A});
    return r;
}

// z^sigma H[z | (a,A);(b,B)] = H[z | (a+sigma A, A);(b+sigma B, B)].
inline HFunctionSpec power_shift(const HFunctionSpec& s, double sigma) {
    HFunctionSpec r = s;
    for (auto& pr : r.upper) pr.a += sigma * pr.A;
    for (auto& pr : r.lower) pr.a += sigma * pr.A;
    return r;
}

// Cancel parameter pairs shared between the non-principal part of one row
// and the principal part of the other: an upper pair in positions 1..n
// equal to a lower pair in positions m+1..q lowers n, p, q by one; an
// upper pair in positions n+1..p equal to a lower pair in positions 1..m
// lowers m, p, q by one.  Pairs inside a group may be reordered freely.
// Throws NoCancellablePair when nothing cancels.
inline HFunctionSpec cancel_common_pairs(const HFunctionSpec& s) {
    auto same = [](const HPair& x, const HPair& y) {
        return std::fabs(x.a - y.a) <= 1e-12 * (1.0 + std::fabs(x.a)) &&
               std::fabs(x.A - y.A) <= 1e-12 * (1.0 + std::fabs(x.A));
    };
    HFunctionSpec r = s;
    bool cancelled_any = false;
    bool progress = true;
    while (progress) {
        progress = false;
        // upper[0..n) against lower[m..q)
        for (int i = 0; i < r.n && !progress; ++i) {
            for (int j = r.m; j < static_cast<int>(r.lower.size()); ++j) {
                if (same(r.upper[i], r.lower[j])) {
                    r.upper.erase(r.upper.begin() + i);
                    r.lower.erase(r.lower.begin() + j);
                    r.n -= 1;
                    progress = true;
                    break;
                }
            }
        }
        if (progress) {
            cancelled_any = true;
            continue;
        }
        // upper[n..p) against lower[0..m)
        for (int i = r.n; i < static_cast<int>(r.upper.size()) && !progress;
             ++i) {
            for (int j = 0; j < r.m; ++j) {
                if (same(r.upper[i], r.lower[j])) {
                    r.upper.erase(r.upper.begin() + i);
                    r.lower.erase(r.lower.begin() + j);
                    r.m -= 1;
                    progress = true;
                    break;
                }
            }
        }
        if (progress) cancelled_any = true;
    }
    if (!cancelled_any)
        throw NoCancellablePair(
            "H function: no cancellable parameter pair found");
    validate(r);
    return r;
}

} // namespace frack
