#pragma once

// Free-space fractional diffusion propagator
//
//     d^nu N / dt^nu = c^nu d^2 N / dx^2,   N(x, 0+) = delta(x),
//
// whose solution is self-similar: N(x,t) = s^(-1/2) M_{nu/2}(|x|/sqrt(s))/2
// with s = c^nu t^nu, expressible through H functions in several equivalent
// ways.  Near the center the M-Wright power series is used; deep in the tail
// (scaled argument y = x^2/(4s) > 10) the series cancels catastrophically and
// the Mellin-Barnes contour in log form takes over, staying representable
// down to exponents of thousands.  Companions: the Fourier mode E_nu(-c^nu
// k^2 t^nu), its Laplace transform, the stretched-exponential asymptotic
// envelope, a cosine-transform inversion cross-check, and the normalization
// integral.

#include <cmath>
#include <limits>

#include "errors.hpp"
#include "gamma.hpp"
#include "h_function.hpp"
#include "mittag_leffler.hpp"
#include "quadrature.hpp"
#include "transforms.hpp"
#include "wright.hpp"

namespace frack {

struct DiffusionQuery {
    double nu = 1.0;       // order, 0 < nu < 2
    double c_pow_nu = 1.0; // diffusion constant c^nu, > 0
    double x = 0.0;        // position
    double t = 1.0;        // time, > 0

    void validate() const {
        if (!(nu > 0.0) || !(nu < 2.0) || !std::isfinite(nu))
            throw InvalidParameters("diffusion: nu must lie in (0, 2)");
        if (!(c_pow_nu > 0.0) || !std::isfinite(c_pow_nu))
            throw InvalidParameters("diffusion: c^nu must be > 0");
        if (!(t > 0.0) || !std::isfinite(t))
            throw InvalidParameters("diffusion: t must be > 0");
        if (!std::isfinite(x))
            throw InvalidParameters("diffusion: x must be finite");
    }
};

// Canonical H spec of the propagator: N = (4 pi s)^(-1/2) H[x^2/(4s)].
inline HFunctionSpec green_h_spec(double nu) {
    HFunctionSpec s;
    s.m = 2;
    s.n = 0;
    s.upper = {HPair{1.0 - 0.5 * nu, nu}};
    s.lower = {HPair{0.0, 1.0}, HPair{0.5, 1.0}};
    return s;
}

// Pre-reduction H spec (the cosine-inversion output): N = |x|^(-1) H[x^2/s].
// Related to green_h_spec through a power shift, a pair cancellation, and
// the gamma duplication formula; the equality of all forms is a test target.
inline HFunctionSpec green_h_spec_unreduced(double nu) {
    HFunctionSpec s;
    s.m = 2;
    s.n = 0;
    s.upper = {HPair{1.0, nu}, HPair{1.0, 1.0}};
    s.lower = {HPair{1.0, 2.0}, HPair{1.0, 1.0}};
    return s;
}

namespace detail {

inline double diffusion_spread(const DiffusionQuery& q) {
    return q.c_pow_nu * std::pow(q.t, q.nu);
}

// Exponent of the stretched-exponential tail envelope at scaled argument
// y = x^2 / (4 c^nu t^nu); also serves as a size proxy for the propagator.
inline double envelope_exponent(double nu, double y) {
    return (2.0 - nu) * std::pow(y * std::pow(nu, nu), 1.0 / (2.0 - nu));
}

// The central series cancels roughly exp(chi + 2 * envelope_exponent)
// between its largest term and the result; past ~60 nats even attempting it
// is wasted work, so go straight to the contour.  Below that, the series'
// own cancellation guard is the honest arbiter and the contour is the
// fallback when it trips.
inline bool green_series_worth_trying(double nu, double chi, double y) {
    return chi + 2.0 * envelope_exponent(nu, y) <= 60.0;
}

inline HLogValue green_log_from_value(double v, double spread) {
    HLogValue out;
    out.sign = (v > 0.0) ? 1.0 : ((v < 0.0) ? -1.0 : 0.0);
    out.log_abs = (v == 0.0)
                      ? -std::numeric_limits<double>::infinity()
                      : std::log(std::fabs(v)) - 0.5 * std::log(spread);
    return out;
}

// {log |N|, sign}; shared by the value and log entry points.
inline HLogValue green_log_impl(const DiffusionQuery& q) {
    const double s = diffusion_spread(q);
    const double chi = std::fabs(q.x) / std::sqrt(s);
    const double y = 0.25 * chi * chi;
    if (chi == 0.0)
        return green_log_from_value(0.5 * reciprocal_gamma(1.0 - 0.5 * q.nu),
                                    s);
    if (green_series_worth_trying(q.nu, chi, y)) {
        try {
            return green_log_from_value(0.5 * wright_m(0.5 * q.nu, chi), s);
        } catch (const NonConvergence&) {
            // fall through to the contour
        }
    }
    const HLogValue lv = evaluate_contour_log(green_h_spec(q.nu), y);
    HLogValue out;
    out.sign = lv.sign;
    out.log_abs = (lv.sign == 0.0)
                      ? -std::numeric_limits<double>::infinity()
                      : lv.log_abs - 0.5 * std::log(4.0 * M_PI * s);
    return out;
}

} // namespace detail

// Propagator value N(x, t); positive and even in x.  May underflow to zero
// deep in the tail; green_function_log stays representable there.
inline double green_function(const DiffusionQuery& q) {
    q.validate();
    const HLogValue lv = detail::green_log_impl(q);
    if (lv.sign == 0.0) return 0.0;
    return lv.sign * std::exp(lv.log_abs);
}

// log |N(x, t)|, representable even where N underflows.
inline double green_function_log(const DiffusionQuery& q) {
    q.validate();
    return detail::green_log_impl(q).log_abs;
}

// Spatial-frequency mode N^(k, t) = E_nu(-c^nu k^2 t^nu).
inline double fourier_mode(double nu, double c_pow_nu, double k, double t) {
    DiffusionQuery q{nu, c_pow_nu, 0.0, t};
    q.validate();
    return mittag_leffler(nu, -c_pow_nu * k * k * std::pow(t, nu));
}

// Laplace transform of the mode: s^(nu-1) / (s^nu + c^nu k^2).
inline double laplace_fourier_mode(double nu, double c_pow_nu, double k,
                                   double s) {
    if (!(nu > 0.0) || !(nu < 2.0))
        throw InvalidParameters("laplace_fourier_mode: nu must lie in (0, 2)");
    if (!(c_pow_nu > 0.0))
        throw InvalidParameters("laplace_fourier_mode: c^nu must be > 0");
    if (!(s > 0.0))
        throw InvalidParameters("laplace_fourier_mode: s must be > 0");
    return std::pow(s, nu - 1.0) / (std::pow(s, nu) + c_pow_nu * k * k);
}

// log of the stretched-exponential tail envelope
//     |x|^(nu/(2-nu)) exp(-(2-nu) (y nu^nu)^(1/(2-nu))),  y = x^2/(4 c^nu t^nu),
// valid up to a constant factor once y is large.  The admission threshold is
// y >= 8 so the smallest scaled distance of the slope test is in-regime.
inline double asymptotic_estimate_log(const DiffusionQuery& q) {
    q.validate();
    const double s = detail::diffusion_spread(q);
    const double y = q.x * q.x / (4.0 * s);
    if (!(y >= 8.0))
        throw OutOfAsymptoticRegime(
            "asymptotic_estimate: requires x^2/(4 c^nu t^nu) >= 8");
    return (q.nu / (2.0 - q.nu)) * std::log(std::fabs(q.x)) -
           detail::envelope_exponent(q.nu, y);
}

inline double asymptotic_estimate(const DiffusionQuery& q) {
    return std::exp(asymptotic_estimate_log(q));
}

// Fourier-inversion cross-check: (1/pi) Int_0^inf cos(k x) E_nu(-c^nu k^2
// t^nu) dk must reproduce the propagator.
struct CosineInversionReport {
    double quadrature = 0.0;
    double closed_form = 0.0;
    double deviation = 0.0; // relative with unit floor
};

inline CosineInversionReport cosine_inversion_check(double nu, double c_pow_nu,
                                                    double x, double t,
                                                    double rel_tol = 1e-9) {
    DiffusionQuery q{nu, c_pow_nu, x, t};
    q.validate();
    CosineInversionReport rep;
    rep.quadrature = cosine_quadrature(
        [&](double k) { return fourier_mode(nu, c_pow_nu, k, t); },
        std::fabs(x), rel_tol);
    rep.closed_form = green_function(q);
    rep.deviation = std::fabs(rep.quadrature - rep.closed_form) /
                    std::max(1.0, std::fabs(rep.closed_form));
    return rep;
}

namespace detail {

// Half-line extent beyond which the envelope exponent is at least 34, so the
// remaining mass is far below the 1e-6 normalization tolerance.  The floor of
// 9 keeps the endpoint inside the asymptotic regime used to calibrate the
// tail correction.
inline double green_support_radius(double nu, double spread) {
    const double y_max =
        std::pow(34.0 / (2.0 - nu), 2.0 - nu) / std::pow(nu, nu);
    return 2.0 * std::sqrt(std::max(y_max, 9.0) * spread);
}

template <typename F>
double simpson(F&& f, double a, double b, int intervals) {
    if (intervals % 2 != 0) ++intervals;
    const double h = (b - a) / intervals;
    long double acc = f(a) + f(b);
    for (int i = 1; i < intervals; ++i)
        acc += f(a + h * i) * ((i % 2) ? 4.0L : 2.0L);
    return static_cast<double>(acc * h / 3.0L);
}

} // namespace detail

// Integral of the propagator over the whole line: the interior is integrated
// by Simpson on [0, R] (doubled by symmetry) and the truncated tail is
// restored from the asymptotic envelope calibrated at R.  The result should
// equal fourier_mode(k = 0) = 1.
inline double normalization_check(double nu, double c_pow_nu, double t,
                                  int intervals = 2048) {
    DiffusionQuery q{nu, c_pow_nu, 0.0, t};
    q.validate();
    const double spread = detail::diffusion_spread(q);
    const double R = detail::green_support_radius(nu, spread);
    const double interior = detail::simpson(
        [&](double x) {
            DiffusionQuery p{nu, c_pow_nu, x, t};
            return green_function(p);
        },
        0.0, R, intervals);
    DiffusionQuery edge{nu, c_pow_nu, R, t};
    const double env_log_R = asymptotic_estimate_log(edge);
    const double amp = green_function(edge) / std::exp(env_log_R);
    const double tail = integrate_tanh_sinh(
        [&](double da, double) {
            DiffusionQuery p{nu, c_pow_nu, R + da, t};
            return amp * std::exp(asymptotic_estimate_log(p));
        },
        0.0, 7.0 * R, 1e-10);
    return 2.0 * (interior + tail);
}

// Cosine transform of the real-space propagator at frequency k; should equal
// fourier_mode(nu, c_pow_nu, k, t).
inline double cosine_transform_of_green(double nu, double c_pow_nu, double t,
                                        double k, int intervals = 4096) {
    DiffusionQuery q{nu, c_pow_nu, 0.0, t};
    q.validate();
    const double spread = detail::diffusion_spread(q);
    const double R = detail::green_support_radius(nu, spread);
    return 2.0 * detail::simpson(
                     [&](double x) {
                         DiffusionQuery p{nu, c_pow_nu, x, t};
                         return std::cos(k * x) * green_function(p);
                     },
                     0.0, R, intervals);
}

} // namespace frack
