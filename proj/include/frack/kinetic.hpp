#pragma once

// Fractional kinetic equation
//
//     N(t) = n0 f(t) - c^nu I^nu N(t),
//
// where I^nu is the Riemann-Liouville integral from 0.  Closed-form
// solutions exist for a catalog of forcings (constant, power law, and a
// Prabhakar Mittag-Leffler profile) and for sampled forcing via the
// resolvent kernel.  An independent oracle solves the same Volterra
// equation by implicit product integration and never evaluates the
// Mittag-Leffler family it is meant to cross-check: for catalog forcings
// the few leading terms of the Picard iteration are carried symbolically
// as a power list (the mapping I^nu: A t^e -> A Gamma(e+1)/Gamma(e+1+nu)
// t^(e+nu) is exact), so the numerically stepped remainder is smooth and
// the stepping converges at second order.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"
#include "fractional_calculus.hpp"
#include "gamma.hpp"
#include "h_function.hpp"
#include "mittag_leffler.hpp"
#include "quadrature.hpp"
#include "solution_table.hpp"
#include "transforms.hpp"

namespace frack {

enum class ForcingKind { Constant, PowerLaw, PrabhakarML, Sampled };

struct ForcingTerm {
    ForcingKind kind = ForcingKind::Constant;
    double rho = 1.0;   // PowerLaw exponent: f(t) = t^(rho-1)
    double mu = 1.0;    // PrabhakarML: f(t) = t^(mu-1) E^gamma_{nu,mu}(-(c t)^nu)
    double gamma = 1.0; // PrabhakarML level
    SampledFunction samples;

    static ForcingTerm constant() { return ForcingTerm{}; }
    static ForcingTerm power_law(double rho_) {
        ForcingTerm f;
        f.kind = ForcingKind::PowerLaw;
        f.rho = rho_;
        return f;
    }
    static ForcingTerm prabhakar(double mu_, double gamma_) {
        ForcingTerm f;
        f.kind = ForcingKind::PrabhakarML;
        f.mu = mu_;
        f.gamma = gamma_;
        return f;
    }
    static ForcingTerm sampled(SampledFunction s) {
        ForcingTerm f;
        f.kind = ForcingKind::Sampled;
        f.samples = std::move(s);
        return f;
    }

    // True when f(t) diverges as t -> 0+.
    bool singular_at_origin() const {
        if (kind == ForcingKind::PowerLaw) return rho < 1.0;
        if (kind == ForcingKind::PrabhakarML) return mu < 1.0;
        return false;
    }

    void validate() const {
        switch (kind) {
            case ForcingKind::Constant:
                break;
            case ForcingKind::PowerLaw:
                if (!(rho > 0.0) || !std::isfinite(rho))
                    throw InvalidParameters("forcing: power-law rho must be > 0");
                break;
            case ForcingKind::PrabhakarML:
                if (!(mu > 0.0) || !std::isfinite(mu))
                    throw InvalidParameters("forcing: mu must be > 0");
                if (!(gamma > 0.0) || !std::isfinite(gamma))
                    throw InvalidParameters("forcing: gamma must be > 0");
                break;
            case ForcingKind::Sampled:
                frack::validate(samples);
                break;
        }
    }

    std::string describe() const {
        switch (kind) {
            case ForcingKind::Constant: return "const";
            case ForcingKind::PowerLaw:
                return "power:rho=" + format_double(rho);
            case ForcingKind::PrabhakarML:
                return "prabhakar:mu=" + format_double(mu) +
                       ",gamma=" + format_double(gamma);
            case ForcingKind::Sampled:
                return "sampled[n=" + std::to_string(samples.t_grid.size()) + "]";
        }
        return "?";
    }
};

struct KineticProblem {
    double nu = 1.0; // fractional order, 0 < nu <= 2
    double c = 1.0;  // rate constant, > 0
    double n0 = 1.0; // initial number density
    ForcingTerm forcing;

    void validate() const {
        if (!(nu > 0.0) || nu > 2.0 || !std::isfinite(nu))
            throw InvalidParameters("kinetic: nu must lie in (0, 2]");
        if (!(c > 0.0) || !std::isfinite(c))
            throw InvalidParameters("kinetic: c must be > 0");
        if (!std::isfinite(n0))
            throw InvalidParameters("kinetic: n0 must be finite");
        forcing.validate();
    }
};

namespace detail {

// A t^e with e > -1; lists of these represent the symbolic power heads.
struct PowerTerm {
    double coeff = 0.0;
    double exponent = 0.0;
};

inline PowerTerm integrate_power_term(const PowerTerm& p, double nu) {
    const double e = p.exponent;
    const double ratio = std::exp(log_abs_gamma(e + 1.0) - log_abs_gamma(e + 1.0 + nu));
    return PowerTerm{p.coeff * ratio, e + nu};
}

inline double eval_power_terms(const std::vector<PowerTerm>& terms, double t) {
    long double acc = 0.0L;
    for (const PowerTerm& p : terms) {
        if (t == 0.0) {
            if (p.exponent == 0.0) acc += p.coeff;
            else if (p.exponent < 0.0)
                return std::numeric_limits<double>::infinity();
        } else {
            acc += static_cast<long double>(p.coeff) * std::pow(t, p.exponent);
        }
    }
    return static_cast<double>(acc);
}

// Power-list representation of a catalog forcing on [0, t_max]; the
// Prabhakar profile is expanded as its defining series, truncated once the
// terms are negligible at t_max.
inline std::vector<PowerTerm> forcing_power_terms(const KineticProblem& prob,
                                                  double t_max) {
    std::vector<PowerTerm> terms;
    switch (prob.forcing.kind) {
        case ForcingKind::Constant:
            terms.push_back(PowerTerm{1.0, 0.0});
            return terms;
        case ForcingKind::PowerLaw:
            terms.push_back(PowerTerm{1.0, prob.forcing.rho - 1.0});
            return terms;
        case ForcingKind::PrabhakarML: {
            const double nu = prob.nu, mu = prob.forcing.mu,
                         g = prob.forcing.gamma;
            const double x_max = std::pow(prob.c * std::max(t_max, 1e-300), nu);
            if (x_max > 40.0)
                throw NonConvergence(
                    "kinetic oracle: Prabhakar forcing series needs (c t)^nu <= 40");
            long double poch = 1.0L; // (g)_n / n!
            long double xpow = 1.0L; // x_max^n, for the truncation test
            long double max_mag = 0.0L;
            for (int n = 0; n < 400; ++n) {
                const double coeff = static_cast<double>(
                    poch * std::pow(-std::pow(prob.c, nu), n) *
                    static_cast<long double>(reciprocal_gamma(nu * n + mu)));
                terms.push_back(PowerTerm{coeff, mu - 1.0 + nu * n});
                const long double mag =
                    std::fabs(poch) * xpow *
                    std::fabs(static_cast<long double>(reciprocal_gamma(nu * n + mu)));
                max_mag = std::max(max_mag, mag);
                if (n >= 4 && mag < 1e-18L * std::max(max_mag, 1.0L)) return terms;
                poch *= (g + n) / (n + 1.0L);
                xpow *= x_max;
            }
            throw NonConvergence("kinetic oracle: Prabhakar forcing series too long");
        }
        case ForcingKind::Sampled:
            throw InvalidParameters("forcing_power_terms: sampled forcing has no power form");
    }
    return terms;
}

// Smallest exponent in a power list (the left behavior).
inline double min_exponent(const std::vector<PowerTerm>& terms) {
    double e = std::numeric_limits<double>::infinity();
    for (const PowerTerm& p : terms) e = std::min(e, p.exponent);
    return e;
}

// Solves W + lam * I^nu W = G on a uniform grid by product integration with
// an implicit diagonal weight; W is assumed smooth (the callers arrange
// G ~ t^2 near 0), so the scheme is second-order accurate.
inline std::vector<double> volterra_step(const std::vector<double>& G, double h,
                                         double nu, double lam) {
    const std::size_t M = G.size();
    std::vector<double> W(M, 0.0);
    if (M == 0) return W;
    W[0] = G[0];
    const double rg = reciprocal_gamma(nu);
    std::vector<double> pw0(M + 1), pw1(M + 1);
    for (std::size_t k = 0; k <= M; ++k) {
        pw0[k] = std::pow(static_cast<double>(k) * h, nu);
        pw1[k] = std::pow(static_cast<double>(k) * h, nu + 1.0);
    }
    const double wdiag = rg * lam * std::pow(h, nu) / (nu * (nu + 1.0));
    const double wprev = rg * lam * std::pow(h, nu) / (nu + 1.0);
    for (std::size_t i = 1; i < M; ++i) {
        long double hist = 0.0L;
        for (std::size_t j = 0; j + 1 < i; ++j) {
            const std::size_t a = i - j, b = i - j - 1;
            const double I0 = (pw0[a] - pw0[b]) / nu;
            const double I1 = (static_cast<double>(a) * h) * I0 -
                              (pw1[a] - pw1[b]) / (nu + 1.0);
            const double slope = (W[j + 1] - W[j]) / h;
            hist += static_cast<long double>(W[j]) * I0 +
                    static_cast<long double>(slope) * I1;
        }
        const double known = rg * lam * static_cast<double>(hist) + wprev * W[i - 1];
        W[i] = (G[i] - known) / (1.0 + wdiag);
    }
    return W;
}

inline void require_uniform_from_zero(const std::vector<double>& t_grid,
                                      double* h_out, const char* who) {
    if (t_grid.size() < 2)
        throw GridTooCoarse(std::string(who) + ": need at least 2 grid points");
    if (t_grid.front() != 0.0)
        throw InvalidParameters(std::string(who) + ": grid must start at t = 0");
    const double h = (t_grid.back() - t_grid.front()) /
                     static_cast<double>(t_grid.size() - 1);
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
        const double expect = static_cast<double>(i) * h;
        if (std::fabs(t_grid[i] - expect) > 1e-9 * std::max(1.0, std::fabs(expect)))
            throw InvalidParameters(std::string(who) + ": grid must be uniform");
    }
    *h_out = h;
}

// Resolvent tail kernel q(u) = sum_{m>K} (-1)^m c^(nu m) u^(nu m - 1) / Gamma(nu m).
// The full resolvent series (K = 0 head removed) relates to the two-parameter
// Mittag-Leffler function; for small (c u)^nu the direct tail series is
// cheapest and avoids any special-function call.
inline double resolvent_tail_kernel(double nu, double c, double u, int K) {
    if (u == 0.0) return 0.0;
    const double x = std::pow(c * u, nu);
    if (x <= 2.0) {
        long double acc = 0.0L;
        long double p = std::pow(-x, K); // (-x)^m / x, maintained via recurrence
        for (int m = K + 1; m < 2000; ++m) {
            p *= -x;
            const long double term =
                p * static_cast<long double>(reciprocal_gamma(nu * m)) / u;
            acc += term;
            if (m > K + 3 && std::fabs(term) < 1e-20L * (std::fabs(acc) + 1e-300L))
                return static_cast<double>(acc);
        }
        throw NonConvergence("kinetic: resolvent tail series did not converge");
    }
    // full series minus the K-term head, with the full series written through
    // E_{nu,nu}
    const double cnu = std::pow(c, nu);
    long double acc = -static_cast<long double>(cnu) * std::pow(u, nu - 1.0) *
                      mittag_leffler(MLParams{nu, nu, 1.0}, -x);
    long double p = 1.0L; // (-x)^m
    for (int m = 1; m <= K; ++m) {
        p *= -x;
        acc -= p * static_cast<long double>(reciprocal_gamma(nu * m)) / u;
    }
    return static_cast<double>(acc);
}

// Pointwise closed form for the catalog forcings.
inline double kinetic_closed_point(const KineticProblem& prob, double t) {
    const double nu = prob.nu, c = prob.c, n0 = prob.n0;
    const double arg = (t == 0.0) ? 0.0 : -std::pow(c * t, nu);
    switch (prob.forcing.kind) {
        case ForcingKind::Constant:
            return n0 * mittag_leffler(MLParams{nu, 1.0, 1.0}, arg);
        case ForcingKind::PowerLaw: {
            const double rho = prob.forcing.rho;
            if (t == 0.0 && rho < 1.0)
                return std::numeric_limits<double>::infinity();
            return n0 * gamma_fn(rho) * std::pow(t, rho - 1.0) *
                   mittag_leffler(MLParams{nu, rho, 1.0}, arg);
        }
        case ForcingKind::PrabhakarML: {
            const double mu = prob.forcing.mu, g = prob.forcing.gamma;
            if (t == 0.0 && mu < 1.0)
                return std::numeric_limits<double>::infinity();
            return n0 * std::pow(t, mu - 1.0) *
                   mittag_leffler(MLParams{nu, mu, g + 1.0}, arg);
        }
        case ForcingKind::Sampled:
            throw InvalidParameters(
                "kinetic_closed_point: sampled forcing requires the grid path");
    }
    return 0.0;
}

inline SolutionTable make_kinetic_table(const KineticProblem& prob,
                                        const std::vector<double>& t,
                                        const std::vector<double>& N,
                                        const char* method) {
    SolutionTable table;
    table.axis_names = {"t"};
    table.value_names = {"N"};
    table.rows.reserve(t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
        table.rows.push_back(SolutionRow{{t[i]}, {N[i]}});
    table.metadata["nu"] = format_double(prob.nu);
    table.metadata["c"] = format_double(prob.c);
    table.metadata["n0"] = format_double(prob.n0);
    table.metadata["forcing"] = prob.forcing.describe();
    table.metadata["method"] = method;
    return table;
}

} // namespace detail

// Kernel of the resolvent representation, expressed through the H function:
// c * H^{1,1}_{1,2}[ (c u)^nu | (-1/nu, 1); (-1/nu, 1), (0, nu) ].
// Numerically equal to -c^nu u^(nu-1) E_{nu,nu}(-(c u)^nu).
inline double kernel_h_function(double nu, double c, double u) {
    if (!(nu > 0.0) || nu > 2.0)
        throw InvalidParameters("kernel_h_function: nu must lie in (0, 2]");
    if (!(c > 0.0)) throw InvalidParameters("kernel_h_function: c must be > 0");
    if (!(u > 0.0)) throw InvalidParameters("kernel_h_function: u must be > 0");
    HFunctionSpec spec;
    spec.m = 1;
    spec.n = 1;
    spec.upper = {HPair{-1.0 / nu, 1.0}};
    spec.lower = {HPair{-1.0 / nu, 1.0}, HPair{0.0, nu}};
    return c * evaluate(spec, std::pow(c * u, nu));
}

// Closed-form solution on the given strictly increasing grid.  For the
// catalog forcings each point is an independent Mittag-Leffler evaluation;
// sampled forcing goes through the resolvent kernel: the first few Neumann
// terms are exact fractional integrals of f and the analytic remainder
// kernel (which vanishes at least linearly at 0) is convolved by trapezoid.
inline SolutionTable solve_closed_form(const KineticProblem& prob,
                                       const std::vector<double>& t_grid) {
    prob.validate();
    if (t_grid.empty())
        throw InvalidParameters("solve_closed_form: empty grid");
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (!(t_grid[i] >= 0.0) || !std::isfinite(t_grid[i]))
            throw InvalidParameters("solve_closed_form: grid must be nonnegative");
        if (i > 0 && !(t_grid[i] > t_grid[i - 1]))
            throw InvalidParameters("solve_closed_form: grid must be increasing");
    }
    if (prob.forcing.singular_at_origin() && t_grid.front() == 0.0)
        throw InvalidParameters(
            "solve_closed_form: forcing diverges at t = 0; exclude that node");

    if (prob.forcing.kind != ForcingKind::Sampled) {
        std::vector<double> N(t_grid.size());
        for (std::size_t i = 0; i < t_grid.size(); ++i)
            N[i] = detail::kinetic_closed_point(prob, t_grid[i]);
        return detail::make_kinetic_table(prob, t_grid, N, "closed_form");
    }

    const SampledFunction& f = prob.forcing.samples;
    double h = 0.0;
    detail::require_uniform_from_zero(f.t_grid, &h, "solve_closed_form");
    if (f.t_grid.size() < 8)
        throw GridTooCoarse("solve_closed_form: sampled forcing needs >= 8 points");
    if (!(t_grid.back() <= f.t_grid.back() + 1e-12))
        throw InvalidParameters(
            "solve_closed_form: grid extends beyond the sampled forcing");

    const double nu = prob.nu, c = prob.c;
    const double cnu = std::pow(c, nu);
    const std::size_t M = f.t_grid.size();
    const int K = std::max(0, static_cast<int>(std::ceil(2.0 / nu - 1e-9)) - 1);

    std::vector<long double> acc(f.values.begin(), f.values.end());
    double scale = 1.0;
    for (int m = 1; m <= K; ++m) {
        scale *= -cnu;
        const SampledFunction integ = rl_integral(f, nu * m);
        for (std::size_t i = 0; i < M; ++i)
            acc[i] += static_cast<long double>(scale) * integ.values[i];
    }

    std::vector<double> q(M);
    for (std::size_t k = 0; k < M; ++k)
        q[k] = detail::resolvent_tail_kernel(nu, c, f.t_grid[k], K);
    for (std::size_t i = 1; i < M; ++i) {
        long double conv = 0.5L * (static_cast<long double>(q[i]) * f.values[0] +
                                   static_cast<long double>(q[0]) * f.values[i]);
        for (std::size_t j = 1; j < i; ++j)
            conv += static_cast<long double>(q[i - j]) * f.values[j];
        acc[i] += static_cast<long double>(h) * conv;
    }

    std::vector<double> N_grid(M);
    for (std::size_t i = 0; i < M; ++i)
        N_grid[i] = prob.n0 * static_cast<double>(acc[i]);

    // Sample (exactly at shared nodes, else linearly) onto the request grid.
    std::vector<double> N(t_grid.size());
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        const double t = std::min(t_grid[i], f.t_grid.back());
        const double pos = t / h;
        std::size_t j = static_cast<std::size_t>(std::floor(pos));
        if (j >= M - 1) j = M - 2;
        const double w = pos - static_cast<double>(j);
        N[i] = (std::fabs(w) < 1e-12)
                   ? N_grid[j]
                   : (1.0 - w) * N_grid[j] + w * N_grid[j + 1];
    }
    return detail::make_kinetic_table(prob, t_grid, N, "closed_form");
}

// Volterra product-integration oracle on a uniform grid starting at 0.
// For catalog forcings the leading Picard terms are carried symbolically so
// that the stepped remainder is ~t^2 near 0; for sampled forcing the same
// subtraction is done with grid fractional integrals.  When the forcing
// diverges at t = 0 the first output row is omitted (and flagged in the
// metadata) because no finite value exists there.
inline SolutionTable solve_oracle(const KineticProblem& prob,
                                  const std::vector<double>& t_grid) {
    prob.validate();
    double h = 0.0;
    detail::require_uniform_from_zero(t_grid, &h, "solve_oracle");
    if (t_grid.size() < 64)
        throw GridTooCoarse("solve_oracle: need at least 64 grid points");

    const double nu = prob.nu, cnu = std::pow(prob.c, nu);
    const std::size_t M = t_grid.size();
    std::vector<double> P(M, 0.0), G(M, 0.0);
    bool singular = false;

    if (prob.forcing.kind != ForcingKind::Sampled) {
        std::vector<detail::PowerTerm> cur =
            detail::forcing_power_terms(prob, t_grid.back());
        for (detail::PowerTerm& p : cur) p.coeff *= prob.n0;
        const double emin = detail::min_exponent(cur);
        singular = emin < 0.0;
        int K = static_cast<int>(std::ceil((2.0 - emin) / nu - 1e-9));
        if (K < 1) K = 1;
        std::vector<detail::PowerTerm> prefix;
        for (int k = 0; k < K; ++k) {
            prefix.insert(prefix.end(), cur.begin(), cur.end());
            for (detail::PowerTerm& p : cur) {
                p = detail::integrate_power_term(p, nu);
                p.coeff *= -cnu;
            }
        }
        for (std::size_t i = 0; i < M; ++i) {
            P[i] = detail::eval_power_terms(prefix, t_grid[i]);
            G[i] = detail::eval_power_terms(cur, t_grid[i]);
        }
    } else {
        const SampledFunction& fs = prob.forcing.samples;
        double hf = 0.0;
        detail::require_uniform_from_zero(fs.t_grid, &hf, "solve_oracle");
        if (!(t_grid.back() <= fs.t_grid.back() + 1e-12))
            throw InvalidParameters(
                "solve_oracle: grid extends beyond the sampled forcing");
        SampledFunction cur;
        cur.t_grid = t_grid;
        cur.left_exponent = fs.left_exponent;
        cur.values.resize(M);
        const std::size_t Mf = fs.t_grid.size();
        for (std::size_t i = 0; i < M; ++i) { // resample onto the solve grid
            const double pos = std::min(t_grid[i], fs.t_grid.back()) / hf;
            std::size_t j = static_cast<std::size_t>(std::floor(pos));
            if (j >= Mf - 1) j = Mf - 2;
            const double w = pos - static_cast<double>(j);
            cur.values[i] = prob.n0 * ((std::fabs(w) < 1e-12)
                                           ? fs.values[j]
                                           : (1.0 - w) * fs.values[j] +
                                                 w * fs.values[j + 1]);
        }
        const double le = std::max(cur.left_exponent, 0.0);
        int K = static_cast<int>(std::ceil((2.0 - le) / nu - 1e-9));
        if (K < 1) K = 1;
        for (int k = 0; k < K; ++k) {
            for (std::size_t i = 0; i < M; ++i) P[i] += cur.values[i];
            SampledFunction next = rl_integral(cur, nu);
            for (std::size_t i = 0; i < M; ++i) next.values[i] *= -cnu;
            cur = std::move(next);
        }
        G = cur.values;
    }

    const std::vector<double> W = detail::volterra_step(G, h, nu, cnu);

    std::vector<double> t_out, N_out;
    t_out.reserve(M);
    N_out.reserve(M);
    for (std::size_t i = (singular ? 1u : 0u); i < M; ++i) {
        t_out.push_back(t_grid[i]);
        N_out.push_back(P[i] + W[i]);
    }
    SolutionTable table = detail::make_kinetic_table(prob, t_out, N_out, "oracle");
    if (singular) table.metadata["first_node_omitted"] = "true";
    return table;
}

// Convolution identity for Prabhakar Mittag-Leffler functions: the weighted
// convolution of E^sigma_{rho,nu_p} and E^gamma_{rho,mu} profiles over [0, x]
// collapses to a single E^{sigma+gamma}_{rho,mu+nu_p} profile.
struct ConvolutionCheckReport {
    double integral = 0.0;     // numeric left-hand side
    double closed_form = 0.0;  // right-hand side
    double deviation = 0.0;    // relative
};

inline ConvolutionCheckReport prabhakar_convolution_check(double rho, double nu_p,
                                                          double mu, double sigma,
                                                          double gamma, double omega,
                                                          double x) {
    if (!(rho > 0.0) || rho > 2.0)
        throw InvalidParameters("prabhakar_convolution_check: rho must lie in (0, 2]");
    if (!(nu_p > 0.0) || !(mu > 0.0))
        throw InvalidParameters("prabhakar_convolution_check: nu_p, mu must be > 0");
    if (!(sigma >= 0.0) || !(gamma >= 0.0))
        throw InvalidParameters("prabhakar_convolution_check: sigma, gamma must be >= 0");
    if (!(x > 0.0))
        throw InvalidParameters("prabhakar_convolution_check: x must be > 0");

    const auto integrand = [&](double da, double db) {
        // da = t, db = x - t; both endpoint factors evaluated on distances
        return std::pow(da, nu_p - 1.0) * std::pow(db, mu - 1.0) *
               mittag_leffler(MLParams{rho, nu_p, sigma}, omega * std::pow(da, rho)) *
               mittag_leffler(MLParams{rho, mu, gamma}, omega * std::pow(db, rho));
    };
    ConvolutionCheckReport rep;
    rep.integral = integrate_tanh_sinh(integrand, 0.0, x, 1e-12);
    rep.closed_form = std::pow(x, nu_p + mu - 1.0) *
                      mittag_leffler(MLParams{rho, mu + nu_p, sigma + gamma},
                                     omega * std::pow(x, rho));
    rep.deviation = std::fabs(rep.integral - rep.closed_form) /
                    std::max(std::fabs(rep.closed_form), 1e-300);
    return rep;
}

// Transform-domain identity for the catalog forcings: the transform of the
// closed-form solution must equal n0 * F(s) / (1 + (c/s)^nu), with F the
// forcing transform in closed form.
struct KineticLaplaceReport {
    double s = 0.0;
    double numeric = 0.0;   // quadrature transform of the closed-form solution
    double algebraic = 0.0; // n0 F(s) / (1 + (c/s)^nu)
    double deviation = 0.0; // relative with unit floor
};

inline KineticLaplaceReport kinetic_laplace_check(const KineticProblem& prob,
                                                  double s) {
    prob.validate();
    if (!(s > 0.0))
        throw InvalidParameters("kinetic_laplace_check: s must be > 0");
    if (prob.forcing.kind == ForcingKind::Sampled)
        throw InvalidParameters(
            "kinetic_laplace_check: sampled forcing is only known on a finite window");
    double F = 0.0;
    switch (prob.forcing.kind) {
        case ForcingKind::Constant: F = 1.0 / s; break;
        case ForcingKind::PowerLaw:
            F = gamma_fn(prob.forcing.rho) * std::pow(s, -prob.forcing.rho);
            break;
        case ForcingKind::PrabhakarML:
            F = std::pow(s, -prob.forcing.mu) *
                std::pow(1.0 + std::pow(prob.c / s, prob.nu), -prob.forcing.gamma);
            break;
        case ForcingKind::Sampled: break;
    }
    KineticLaplaceReport rep;
    rep.s = s;
    rep.numeric = laplace_numeric(
        [&](double t) { return detail::kinetic_closed_point(prob, t); }, s);
    rep.algebraic = prob.n0 * F / (1.0 + std::pow(prob.c / s, prob.nu));
    rep.deviation = std::fabs(rep.numeric - rep.algebraic) /
                    std::max(1.0, std::fabs(rep.algebraic));
    return rep;
}

} // namespace frack
