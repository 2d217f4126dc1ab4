#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "frack/errors.hpp"
#include "frack/gamma.hpp"
#include "frack/quadrature.hpp"
#include "frack/transforms.hpp"

// Grid-based Riemann-Liouville fractional integral/derivative and Caputo
// derivative.  These operators form the independent oracle layer: they never
// touch the special-function evaluators, so agreement between a closed-form
// solution and the grid operators is a genuine cross-check.

namespace frack {

// A function sampled on a strictly increasing time grid.  left_exponent
// records the endpoint behavior value ~ t^left_exponent near 0, so weakly
// singular integrands (exponent in (-1, 0)) can still be integrated exactly
// over the first cell; such grids must start at t > 0.
struct SampledFunction {
    std::vector<double> t_grid;
    std::vector<double> values;
    double left_exponent = 0.0;
};

inline void validate(const SampledFunction& f) {
    if (f.t_grid.size() != f.values.size())
        throw InvalidParameters("SampledFunction: grid/value size mismatch");
    if (f.t_grid.size() < 2)
        throw InvalidParameters("SampledFunction: need at least 2 samples");
    if (!(f.left_exponent > -1.0))
        throw InvalidParameters("SampledFunction: left_exponent must exceed -1");
    for (std::size_t i = 0; i + 1 < f.t_grid.size(); ++i)
        if (!(f.t_grid[i] < f.t_grid[i + 1]))
            throw InvalidParameters("SampledFunction: grid must be strictly increasing");
    if (!(f.t_grid.front() >= 0.0))
        throw InvalidParameters("SampledFunction: grid must be nonnegative");
    if (f.left_exponent < 0.0) {
        if (!(f.t_grid.front() > 0.0))
            throw InvalidParameters(
                "SampledFunction: singular left exponent requires t_grid[0] > 0");
    } else if (f.t_grid.front() != 0.0) {
        throw InvalidParameters("SampledFunction: grid must start at 0");
    }
    for (double v : f.values)
        if (!std::isfinite(v))
            throw InvalidParameters("SampledFunction: values must be finite");
}

// n equally spaced points from a to b inclusive.
inline std::vector<double> uniform_grid(double a, double b, std::size_t n) {
    if (n < 2 || !(a < b))
        throw InvalidParameters("uniform_grid: need n >= 2 and a < b");
    std::vector<double> t(n);
    const double h = (b - a) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) t[i] = a + h * static_cast<double>(i);
    t.back() = b;
    return t;
}

template <typename F>
SampledFunction sample_function(F&& fn, const std::vector<double>& t_grid,
                                double left_exponent = 0.0) {
    SampledFunction out;
    out.t_grid = t_grid;
    out.values.reserve(t_grid.size());
    for (double t : t_grid) out.values.push_back(fn(t));
    out.left_exponent = left_exponent;
    validate(out);
    return out;
}

namespace detail {

inline double beta_fn(double a, double b) {
    return std::exp(log_abs_gamma(a) + log_abs_gamma(b) - log_abs_gamma(a + b));
}

// Leading power model f(u) ~ coeff * u^exponent, anchored at the first
// positive node.  Active whenever the left exponent is fractional or
// negative; the power part is then handled in closed form and only the
// remainder goes through piecewise-linear product integration.
struct FirstCellModel {
    bool active = false;
    double coeff = 0.0;
    double edge = 0.0; // first positive grid node (model anchor)
};

inline FirstCellModel first_cell_model(const SampledFunction& f) {
    FirstCellModel m;
    const double le = f.left_exponent;
    const bool fractional = std::fabs(le - std::round(le)) > 1e-9 || le < 0.0;
    if (!fractional) return m;
    m.active = true;
    if (f.t_grid.front() > 0.0) {
        m.edge = f.t_grid.front();
        m.coeff = f.values.front() / std::pow(m.edge, le);
    } else {
        m.edge = f.t_grid[1];
        m.coeff = f.values[1] / std::pow(m.edge, le);
    }
    return m;
}

inline bool grid_is_uniform(const std::vector<double>& t, double& h) {
    h = t[1] - t[0];
    for (std::size_t i = 1; i + 1 < t.size(); ++i)
        if (std::fabs(t[i + 1] - t[i] - h) > 1e-9 * h) return false;
    return true;
}

// m-th derivative (m = 1 or 2) on a uniform grid, second-order stencils with
// one-sided ends.
inline std::vector<double> derivative_grid(const SampledFunction& f, int m) {
    double h;
    if (!grid_is_uniform(f.t_grid, h))
        throw InvalidParameters("derivative stencils require a uniform grid");
    const std::vector<double>& g = f.values;
    const std::size_t n = g.size();
    std::vector<double> d(n);
    if (m == 1) {
        d[0] = (-3.0 * g[0] + 4.0 * g[1] - g[2]) / (2.0 * h);
        for (std::size_t i = 1; i + 1 < n; ++i)
            d[i] = (g[i + 1] - g[i - 1]) / (2.0 * h);
        d[n - 1] = (3.0 * g[n - 1] - 4.0 * g[n - 2] + g[n - 3]) / (2.0 * h);
    } else {
        const double h2 = h * h;
        d[0] = (2.0 * g[0] - 5.0 * g[1] + 4.0 * g[2] - g[3]) / h2;
        for (std::size_t i = 1; i + 1 < n; ++i)
            d[i] = (g[i - 1] - 2.0 * g[i] + g[i + 1]) / h2;
        d[n - 1] =
            (2.0 * g[n - 1] - 5.0 * g[n - 2] + 4.0 * g[n - 3] - g[n - 4]) / h2;
    }
    return d;
}

// Derivative stencil with the fractional power head split off: the leading
// A t^le term is differentiated analytically and only the smoother residual
// goes through finite differences.  Near t = 0 the stencil cannot track a
// fractional power, so this removes the dominant error of differentiating
// outputs of the fractional integral.  Where the analytic part itself
// diverges (t = 0 with le < m) the plain stencil value is kept so the output
// stays finite.
inline std::vector<double> derivative_grid_with_power(const SampledFunction& g,
                                                      int m) {
    const FirstCellModel model = first_cell_model(g);
    if (!model.active) return derivative_grid(g, m);
    const double le = g.left_exponent;
    SampledFunction res = g;
    for (std::size_t j = 0; j < res.values.size(); ++j)
        res.values[j] -= model.coeff * std::pow(g.t_grid[j], le);
    std::vector<double> d = derivative_grid(res, m);
    const std::vector<double> d_raw = derivative_grid(g, m);
    for (std::size_t j = 0; j < d.size(); ++j) {
        const double t = g.t_grid[j];
        const double p =
            (m == 1) ? model.coeff * le * std::pow(t, le - 1.0)
                     : model.coeff * le * (le - 1.0) * std::pow(t, le - 2.0);
        if (std::isfinite(p))
            d[j] += p;
        else
            d[j] = d_raw[j];
    }
    return d;
}

inline void require_operator_grid(const SampledFunction& f) {
    validate(f);
    if (f.t_grid.size() < 8)
        throw GridTooCoarse("fractional operators need at least 8 grid points");
}

// Left-exponent bookkeeping for operator outputs, kept consistent with the
// SampledFunction invariant (a grid starting at 0 cannot carry a negative
// exponent, so the metadata saturates there).
inline double shift_left_exponent(const SampledFunction& f, double delta) {
    const double raw = f.left_exponent + delta;
    if (f.t_grid.front() == 0.0) return std::max(raw, 0.0);
    return std::max(raw, -0.999999);
}

} // namespace detail

// Riemann-Liouville fractional integral of order nu on the sample grid.
// Product integration: when the left exponent is fractional the leading
// power A t^le is integrated in closed form over all of [0, t] and only the
// remainder r = f - A t^le (which vanishes at the anchor nodes) goes through
// the piecewise-linear cells, each integrated exactly against the kernel
// (t-u)^(nu-1).  This keeps second-order convergence for endpoint-singular
// inputs instead of degrading to O(h^(le+nu)).
inline SampledFunction rl_integral(const SampledFunction& f, double nu) {
    detail::require_operator_grid(f);
    if (!(nu > 0.0 && nu <= 2.0))
        throw InvalidParameters("rl_integral: order must lie in (0, 2]");

    const std::vector<double>& t = f.t_grid;
    const std::size_t n = t.size();
    const double le = f.left_exponent;
    const detail::FirstCellModel model = detail::first_cell_model(f);
    const double rg = reciprocal_gamma(nu);

    std::vector<double> v = f.values;
    double power_ratio = 0.0; // Gamma(le+1) / Gamma(le+1+nu)
    if (model.active) {
        power_ratio =
            std::exp(log_abs_gamma(le + 1.0) - log_abs_gamma(le + 1.0 + nu));
        for (std::size_t j = 0; j < n; ++j)
            v[j] -= model.coeff * std::pow(t[j], le);
    }

    double h = 0.0;
    const bool uniform = detail::grid_is_uniform(t, h);
    std::vector<double> pw0, pw1;
    if (uniform) {
        pw0.resize(n);
        pw1.resize(n);
        for (std::size_t k = 0; k < n; ++k) {
            const double tau = h * static_cast<double>(k);
            pw0[k] = std::pow(tau, nu);
            pw1[k] = std::pow(tau, nu + 1.0);
        }
    }

    SampledFunction out;
    out.t_grid = t;
    out.values.assign(n, 0.0);
    out.left_exponent = detail::shift_left_exponent(f, nu);

    for (std::size_t i = 0; i < n; ++i) {
        long double acc = 0.0L;
        for (std::size_t j = 0; j < i; ++j) {
            double p0j, p0j1, p1j, p1j1;
            if (uniform) {
                p0j = pw0[i - j];
                p0j1 = pw0[i - j - 1];
                p1j = pw1[i - j];
                p1j1 = pw1[i - j - 1];
            } else {
                const double tauj = t[i] - t[j];
                const double tauj1 = t[i] - t[j + 1];
                p0j = std::pow(tauj, nu);
                p0j1 = std::pow(tauj1, nu);
                p1j = std::pow(tauj, nu + 1.0);
                p1j1 = std::pow(tauj1, nu + 1.0);
            }
            const double tauj = t[i] - t[j];
            const double i0 = (p0j - p0j1) / nu;
            const double i1 = tauj * i0 - (p1j - p1j1) / (nu + 1.0);
            const double slope = (v[j + 1] - v[j]) / (t[j + 1] - t[j]);
            acc += v[j] * i0 + slope * i1;
        }
        double value = rg * static_cast<double>(acc);
        if (model.active)
            value += model.coeff * power_ratio * std::pow(t[i], le + nu);
        out.values[i] = value;
    }
    return out;
}

// Riemann-Liouville fractional derivative: differentiate the (n-alpha)-order
// integral, n = floor(alpha) + 1.  Integer order falls back to the plain
// derivative stencil.
inline SampledFunction rl_derivative(const SampledFunction& f, double alpha) {
    detail::require_operator_grid(f);
    if (!(alpha > 0.0 && alpha < 2.0))
        throw InvalidParameters("rl_derivative: order must lie in (0, 2)");
    if (std::fabs(alpha - 1.0) < 1e-12) {
        SampledFunction out;
        out.t_grid = f.t_grid;
        out.values = detail::derivative_grid(f, 1);
        out.left_exponent = detail::shift_left_exponent(f, -1.0);
        return out;
    }
    const int n = static_cast<int>(std::floor(alpha)) + 1;
    SampledFunction g = rl_integral(f, static_cast<double>(n) - alpha);
    SampledFunction out;
    out.t_grid = f.t_grid;
    out.values = detail::derivative_grid_with_power(g, n);
    out.left_exponent = detail::shift_left_exponent(f, -alpha);
    return out;
}

// Caputo derivative: the m-th derivative stencil fed into the (m-alpha)-order
// integral, m = ceil(alpha); plain m-th derivative at integer order.
inline SampledFunction caputo_derivative(const SampledFunction& f, double alpha) {
    detail::require_operator_grid(f);
    if (!(alpha > 0.0 && alpha < 2.0))
        throw InvalidParameters("caputo_derivative: order must lie in (0, 2)");
    if (std::fabs(alpha - 1.0) < 1e-12) {
        SampledFunction out;
        out.t_grid = f.t_grid;
        out.values = detail::derivative_grid(f, 1);
        out.left_exponent = detail::shift_left_exponent(f, -1.0);
        return out;
    }
    const int m = static_cast<int>(std::ceil(alpha));
    SampledFunction deriv;
    deriv.t_grid = f.t_grid;
    deriv.values = detail::derivative_grid(f, m);
    deriv.left_exponent = 0.0;
    return rl_integral(deriv, static_cast<double>(m) - alpha);
}

namespace detail {

// Piecewise-linear evaluation of a sampled function (with the first-cell
// power model where active), for feeding grids into the numeric Laplace
// transform.
struct GridInterpolant {
    const SampledFunction* f;
    FirstCellModel model;

    explicit GridInterpolant(const SampledFunction& fn)
        : f(&fn), model(first_cell_model(fn)) {}

    double operator()(double t) const {
        const std::vector<double>& tg = f->t_grid;
        const std::vector<double>& v = f->values;
        if (model.active && t < model.edge && t > 0.0)
            return model.coeff * std::pow(t, f->left_exponent);
        if (t <= tg.front()) return v.front();
        if (t >= tg.back()) return v.back();
        const auto it = std::upper_bound(tg.begin(), tg.end(), t);
        const std::size_t j = static_cast<std::size_t>(it - tg.begin()) - 1;
        const double w = (t - tg[j]) / (tg[j + 1] - tg[j]);
        return v[j] + w * (v[j + 1] - v[j]);
    }
};

// Laplace transform of a sampled function.  The fractional leading power
// A t^le (when present) is transformed in closed form and only the residual
// goes through piecewise-linear quadrature, so grids behaving like t^le near
// 0 do not lose accuracy to interpolation of the fractional curvature.
inline double laplace_of_sampled(const SampledFunction& g, double s) {
    const double T = g.t_grid.back();
    const FirstCellModel model = first_cell_model(g);
    if (!model.active) return laplace_numeric(GridInterpolant(g), s, T);
    const double le = g.left_exponent;
    const double head = model.coeff * std::exp(log_abs_gamma(le + 1.0)) *
                        std::pow(s, -le - 1.0);
    std::vector<double> r(g.values.size());
    for (std::size_t j = 0; j < r.size(); ++j)
        r[j] = g.values[j] - model.coeff * std::pow(g.t_grid[j], le);
    const std::vector<double>& tg = g.t_grid;
    auto interp = [&](double t) -> double {
        if (t <= tg.front()) return (tg.front() > 0.0) ? 0.0 : r.front();
        if (t >= tg.back()) return r.back();
        const auto it = std::upper_bound(tg.begin(), tg.end(), t);
        const std::size_t j = static_cast<std::size_t>(it - tg.begin()) - 1;
        const double w = (t - tg[j]) / (tg[j + 1] - tg[j]);
        return r[j] + w * (r[j + 1] - r[j]);
    };
    return head + laplace_numeric(interp, s, T);
}

} // namespace detail

enum class FracOperator { Integral, RLDerivative, Caputo };

struct LaplaceRuleEntry {
    FracOperator op;
    double s = 0.0;
    double transform_of_output = 0.0;
    double algebraic_rhs = 0.0;
    double discrepancy = 0.0;
};

struct LaplaceRuleReport {
    std::vector<LaplaceRuleEntry> entries;
    double max_discrepancy = 0.0;
};

// Checks the operational rules relating the grid operators to their Laplace
// images: L{I^a f} = s^-a F, L{D^a f} = s^a F - sum s^k c_k, and
// L{CD^a f} = s^a F - sum s^(a-1-k) f^(k)(0), with the initial values c_k and
// f^(k)(0) estimated from the grid.  Report-only: discrepancies are returned,
// never thrown.
inline LaplaceRuleReport laplace_rule_check(
    const SampledFunction& f, double alpha,
    const std::vector<double>& probes = {1.0, 2.0, 4.0}) {
    detail::require_operator_grid(f);
    if (!(alpha > 0.0 && alpha < 2.0))
        throw InvalidParameters("laplace_rule_check: order must lie in (0, 2)");
    for (double s : probes)
        if (!(s > 0.0) || !std::isfinite(s))
            throw InvalidParameters("laplace_rule_check: probes must be positive");

    const bool integer_order = std::fabs(alpha - 1.0) < 1e-12;
    const int n = integer_order ? 1 : static_cast<int>(std::floor(alpha)) + 1;
    const double f0 = f.values.front();
    const double fp0 = detail::derivative_grid(f, 1).front();

    // D^alpha f of a function with f(0) != 0 carries a t^-alpha singularity
    // no finite grid can represent.  For the RL-rule entry, split off the
    // polynomial head p(t) = p0 + p1 t, run the grid operator on the
    // remainder, and add p's exactly known transform to both sides.
    double p0 = 0.0, p1 = 0.0;
    SampledFunction rem = f;
    if (!integer_order && f.t_grid.front() == 0.0 &&
        std::fabs(f.left_exponent - std::round(f.left_exponent)) <= 1e-9) {
        p0 = f0;
        p1 = fp0;
        for (std::size_t j = 0; j < rem.values.size(); ++j)
            rem.values[j] -= p0 + p1 * rem.t_grid[j];
        rem.left_exponent = 2.0;
    }

    const SampledFunction integ = rl_integral(f, alpha);
    const SampledFunction rl = rl_derivative(rem, alpha);
    const SampledFunction cap = caputo_derivative(f, alpha);

    std::vector<double> rl_init; // c_k = value of D^(alpha-k-1) rem at 0+
    if (!integer_order) {
        for (int k = 0; k < n; ++k) {
            const double ord = alpha - static_cast<double>(k) - 1.0;
            if (ord > 1e-12)
                rl_init.push_back(rl_derivative(rem, ord).values.front());
            else if (ord < -1e-12) {
                const SampledFunction g = rl_integral(rem, -ord);
                rl_init.push_back((g.t_grid.front() == 0.0 ||
                                   g.left_exponent > 1e-9)
                                      ? (g.t_grid.front() == 0.0
                                             ? g.values.front()
                                             : 0.0)
                                      : g.values.front());
            } else {
                rl_init.push_back(rem.values.front());
            }
        }
    }

    LaplaceRuleReport report;
    for (double s : probes) {
        const double F = detail::laplace_of_sampled(f, s);

        LaplaceRuleEntry ei;
        ei.op = FracOperator::Integral;
        ei.s = s;
        ei.transform_of_output = detail::laplace_of_sampled(integ, s);
        ei.algebraic_rhs = std::pow(s, -alpha) * F;
        report.entries.push_back(ei);

        LaplaceRuleEntry ed;
        ed.op = FracOperator::RLDerivative;
        ed.s = s;
        const double head_transform =
            p0 * std::pow(s, alpha - 1.0) + p1 * std::pow(s, alpha - 2.0);
        ed.transform_of_output =
            detail::laplace_of_sampled(rl, s) + head_transform;
        if (integer_order) {
            ed.algebraic_rhs = s * F - f0;
        } else {
            double rhs = std::pow(s, alpha) * (F - p0 / s - p1 / (s * s)) +
                         head_transform;
            for (int k = 0; k < n; ++k)
                rhs -= std::pow(s, static_cast<double>(k)) *
                       rl_init[static_cast<std::size_t>(k)];
            ed.algebraic_rhs = rhs;
        }
        report.entries.push_back(ed);

        LaplaceRuleEntry ec;
        ec.op = FracOperator::Caputo;
        ec.s = s;
        ec.transform_of_output = detail::laplace_of_sampled(cap, s);
        {
            const int m = integer_order ? 1 : static_cast<int>(std::ceil(alpha));
            double rhs = std::pow(s, alpha) * F - std::pow(s, alpha - 1.0) * f0;
            if (m == 2) rhs -= std::pow(s, alpha - 2.0) * fp0;
            ec.algebraic_rhs = rhs;
        }
        report.entries.push_back(ec);
    }
    for (LaplaceRuleEntry& e : report.entries) {
        e.discrepancy = std::fabs(e.transform_of_output - e.algebraic_rhs) /
                        std::max(1.0, std::fabs(e.algebraic_rhs));
        report.max_discrepancy = std::max(report.max_discrepancy, e.discrepancy);
    }
    return report;
}

} // namespace frack
