// Development checks for kinetic.hpp + solution_table.hpp.
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "frack/kinetic.hpp"
#include "frack/solution_table.hpp"

using namespace frack;

static int failures = 0;

static void check(const char* name, double got, double want, double tol) {
    const double err = std::fabs(got - want);
    const bool ok = err <= tol;
    if (!ok) ++failures;
    std::printf("%-46s got=%.15g want=%.15g abserr=%.3g tol=%.3g %s\n", name, got,
                want, err, tol, ok ? "OK" : "FAIL");
}

static void check_true(const char* name, bool ok) {
    if (!ok) ++failures;
    std::printf("%-46s %s\n", name, ok ? "OK" : "FAIL");
}

static std::vector<double> uniform(double a, double b, std::size_t n) {
    std::vector<double> t(n);
    for (std::size_t i = 0; i < n; ++i)
        t[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    return t;
}

// sup relative difference between closed form and oracle over shared nodes
static double oracle_gap(const KineticProblem& prob, std::size_t n,
                         double t_max, bool skip_first_cells) {
    const std::vector<double> grid = uniform(0.0, t_max, n);
    SolutionTable oracle = solve_oracle(prob, grid);
    std::vector<double> t_eval;
    for (const SolutionRow& r : oracle.rows) t_eval.push_back(r.coordinates[0]);
    std::vector<double> closed_t = t_eval;
    if (closed_t.front() == 0.0 && prob.forcing.singular_at_origin())
        closed_t.erase(closed_t.begin());
    SolutionTable closed = solve_closed_form(prob, t_eval.front() == 0.0 && prob.forcing.singular_at_origin()
                                                  ? closed_t : t_eval);
    const std::size_t off = oracle.rows.size() - closed.rows.size();
    double sup_diff = 0.0, sup_val = 0.0, sup_pointwise = 0.0;
    for (std::size_t i = 0; i < closed.rows.size(); ++i) {
        const double t = closed.rows[i].coordinates[0];
        if (skip_first_cells && t < 4.0 * t_max / static_cast<double>(n - 1))
            continue;
        const double a = closed.rows[i].values[0];
        const double b = oracle.rows[i + off].values[0];
        sup_diff = std::max(sup_diff, std::fabs(a - b));
        sup_val = std::max(sup_val, std::fabs(a));
        sup_pointwise =
            std::max(sup_pointwise, std::fabs(a - b) / std::max(std::fabs(a), 1e-12));
    }
    std::printf("    [sup|diff|=%.3g sup|N|=%.3g pointwise-rel=%.3g]\n", sup_diff,
                sup_val, sup_pointwise);
    return sup_diff / std::max(sup_val, 1e-300);
}

int main() {
    // closed-form examples
    {
        KineticProblem p;
        p.nu = 1.0;
        p.c = 2.0;
        p.n0 = 3.0;
        SolutionTable t = solve_closed_form(p, {0.5});
        check("closed const nu=1 c=2 n0=3 t=0.5", t.rows[0].values[0],
              3.0 * std::exp(-1.0), 1e-12);
    }
    {
        KineticProblem p;
        p.nu = 0.5;
        p.forcing = ForcingTerm::power_law(1.0);
        SolutionTable t = solve_closed_form(p, {0.25, 1.0, 2.0});
        check("closed power rho=1 == E_0.5(-sqrt t)", t.rows[1].values[0],
              mittag_leffler(0.5, -1.0), 1e-14);
        KineticProblem pc = p;
        pc.forcing = ForcingTerm::constant();
        SolutionTable tc = solve_closed_form(pc, {0.25, 1.0, 2.0});
        double gap = 0.0;
        for (std::size_t i = 0; i < 3; ++i)
            gap = std::max(gap, std::fabs(t.rows[i].values[0] - tc.rows[i].values[0]));
        check("corollary chain rho=1 vs const", gap, 0.0, 1e-12);
    }
    {
        // gamma recursion at nu=0.6: E^{g+1}_{nu,mu} = E^g_{nu,mu} - c^nu t^nu E^{g+1}_{nu,mu+nu}
        const double nu = 0.6, c = 1.0, mu = 1.0;
        double worst = 0.0;
        for (double g : {1.0, 2.0}) {
            for (double t : {0.2, 0.7, 1.3, 2.1, 3.0}) {
                const double x = -std::pow(c * t, nu);
                const double lhs = std::pow(t, mu - 1.0) *
                                   mittag_leffler(MLParams{nu, mu, g + 1.0}, x);
                const double rhs =
                    std::pow(t, mu - 1.0) * mittag_leffler(MLParams{nu, mu, g}, x) -
                    std::pow(c, nu) * std::pow(t, mu + nu - 1.0) *
                        mittag_leffler(MLParams{nu, mu + nu, g + 1.0}, x);
                worst = std::max(worst, std::fabs(lhs - rhs));
            }
        }
        check("prabhakar gamma recursion nu=0.6", worst, 0.0, 1e-6);
    }

    // oracle vs closed
    {
        KineticProblem p; // nu=1, c=1, const
        const double err = oracle_gap(p, 4097, 5.0, false);
        std::printf("  oracle nu=1 const sup-rel=%.3g\n", err);
        check("oracle nu=1 const vs exp", err, 0.0, 1e-6);
    }
    {
        KineticProblem p;
        p.nu = 0.5;
        const double e4096 = oracle_gap(p, 4097, 5.0, false);
        const double e2048 = oracle_gap(p, 2049, 5.0, false);
        std::printf("  oracle nu=0.5 const e2048=%.3g e4096=%.3g ratio=%.3f order=%.2f\n",
                    e2048, e4096, e4096 / e2048, std::log2(e2048 / e4096));
        check("oracle nu=0.5 const", e4096, 0.0, 1e-4);
        check_true("oracle refinement ratio <= 0.35", e4096 / e2048 <= 0.35);
    }
    {
        struct Combo { double nu; ForcingTerm f; const char* name; };
        std::vector<Combo> combos;
        for (double nu : {0.3, 0.5, 0.8, 1.0}) {
            combos.push_back({nu, ForcingTerm::power_law(0.5), "pow0.5"});
            combos.push_back({nu, ForcingTerm::power_law(2.0), "pow2"});
        }
        for (double nu : {0.3, 0.5, 0.8, 1.0}) {
            SampledFunction sf;
            sf.t_grid = uniform(0.0, 5.0, 4097);
            sf.values.resize(sf.t_grid.size());
            for (std::size_t i = 0; i < sf.t_grid.size(); ++i)
                sf.values[i] = std::sin(sf.t_grid[i]);
            sf.left_exponent = 1.0;
            combos.push_back({nu, ForcingTerm::sampled(sf), "sin"});
        }
        for (const Combo& cb : combos) {
            KineticProblem p;
            p.nu = cb.nu;
            p.c = 1.0;
            p.forcing = cb.f;
            const double err = oracle_gap(p, 4097, 5.0, true);
            char label[64];
            std::snprintf(label, sizeof label, "oracle combo nu=%.1f %s", cb.nu,
                          cb.name);
            check(label, err, 0.0, 1e-4);
        }
    }
    {
        KineticProblem p;
        p.nu = 0.7;
        p.forcing = ForcingTerm::prabhakar(1.0, 1.0);
        const double closed = solve_closed_form(p, {1.0}).rows[0].values[0];
        check("closed prabhakar mu=1 g=1 t=1", closed,
              mittag_leffler(MLParams{0.7, 1.0, 2.0}, -1.0), 1e-13);
        const double err = oracle_gap(p, 4097, 3.0, false);
        std::printf("  oracle prabhakar sup-rel=%.3g\n", err);
        check("oracle vs closed prabhakar", err, 0.0, 1e-4);
    }

    // convolution identity
    {
        ConvolutionCheckReport r =
            prabhakar_convolution_check(1.0, 1.0, 1.0, 1.0, 1.0, -1.0, 1.0);
        std::printf("  kummer case lhs=%.12g rhs=%.12g\n", r.integral, r.closed_form);
        check("convolution kummer case", r.deviation, 0.0, 1e-9);
        check("convolution kummer value", r.integral, std::exp(-1.0), 1e-9);
        ConvolutionCheckReport r2 =
            prabhakar_convolution_check(0.5, 0.8, 0.9, 1.0, 1.0, -0.5, 2.0);
        check("convolution rho=0.5 draw", r2.deviation, 0.0, 1e-6);
        ConvolutionCheckReport r3 =
            prabhakar_convolution_check(0.9, 1.1, 0.7, 0.0, 1.3, -0.8, 1.5);
        check("convolution sigma=0 degenerate", r3.deviation, 0.0, 1e-6);
    }

    // Laplace-domain identity
    {
        double worst = 0.0;
        for (int kind = 0; kind < 3; ++kind) {
            KineticProblem p;
            p.nu = 0.6;
            p.c = 1.3;
            p.n0 = 2.0;
            if (kind == 1) p.forcing = ForcingTerm::power_law(1.7);
            if (kind == 2) p.forcing = ForcingTerm::prabhakar(1.2, 0.8);
            for (double s : {0.5, 1.0, 2.0, 5.0}) {
                KineticLaplaceReport rep = kinetic_laplace_check(p, s);
                std::printf("  laplace id kind=%d s=%.1f num=%.10g alg=%.10g d=%.3g\n",
                            kind, s, rep.numeric, rep.algebraic, rep.deviation);
                worst = std::max(worst, rep.deviation);
            }
        }
        check("kinetic laplace identity catalog", worst, 0.0, 1e-5);
        KineticProblem ps;
        ps.forcing = ForcingTerm::power_law(0.5); // singular forcing transform
        KineticLaplaceReport rep = kinetic_laplace_check(ps, 2.0);
        check("kinetic laplace identity rho=0.5", rep.deviation, 0.0, 1e-5);
    }

    // H-function kernel
    {
        const double nu = 0.6, c = 1.3, u = 0.9;
        const double want = -std::pow(c, nu) * std::pow(u, nu - 1.0) *
                            mittag_leffler(MLParams{nu, nu, 1.0},
                                           -std::pow(c * u, nu));
        check("kernel_h nu=0.6", kernel_h_function(nu, c, u), want, 1e-9);
        const double w1 = -2.0 * std::exp(-1.4);
        check("kernel_h nu=1", kernel_h_function(1.0, 2.0, 0.7), w1, 1e-9);
    }
    {
        // nu=1 kernel convolved with f=1 gives N/n0 = 1 + int_0^t kernel
        const double c = 2.0, t = 1.3;
        const double integral = integrate_tanh_sinh(
            [&](double da, double) { return kernel_h_function(1.0, c, da); }, 0.0,
            t, 1e-11);
        check("kernel_h conv const nu=1", 1.0 + integral, std::exp(-c * t), 1e-8);
    }

    // monotone nonnegative decay for const forcing, nu <= 1
    {
        KineticProblem p;
        p.nu = 0.5;
        p.n0 = 2.0;
        SolutionTable t = solve_closed_form(p, uniform(0.01, 6.0, 200));
        bool ok = true;
        double prev = p.n0;
        for (const SolutionRow& r : t.rows) {
            if (!(r.values[0] > 0.0) || r.values[0] > prev + 1e-14) ok = false;
            prev = r.values[0];
        }
        check_true("const forcing monotone in (0,n0]", ok);
    }

    // error paths
    {
        bool threw = false;
        try {
            KineticProblem p;
            p.forcing = ForcingTerm::power_law(0.5);
            solve_closed_form(p, {0.0, 1.0});
        } catch (const InvalidParameters&) { threw = true; }
        check_true("singular forcing rejects t=0", threw);
        threw = false;
        try { ForcingTerm::power_law(-1.0).validate(); }
        catch (const InvalidParameters&) { threw = true; }
        check_true("power rho=-1 rejected", threw);
        threw = false;
        try {
            KineticProblem p;
            solve_oracle(p, uniform(0.0, 1.0, 32));
        } catch (const GridTooCoarse&) { threw = true; }
        check_true("oracle coarse grid rejected", threw);
    }

    // solution table round trips
    {
        SolutionTable t;
        t.axis_names = {"t"};
        t.value_names = {"N", "N_oracle"};
        t.rows = {{{0.1}, {1.0 / 3.0, 0.3333333333333333}},
                  {{0.2}, {2.0 / 3.0, 0.6666666666666666}}};
        t.metadata["nu"] = "0.5";
        const std::string csv = to_csv(t);
        SolutionTable back = parse_table_csv(csv, 1);
        bool exact = back.rows.size() == t.rows.size();
        for (std::size_t i = 0; exact && i < t.rows.size(); ++i)
            exact = back.rows[i].coordinates[0] == t.rows[i].coordinates[0] &&
                    back.rows[i].values[0] == t.rows[i].values[0] &&
                    back.rows[i].values[1] == t.rows[i].values[1];
        check_true("csv round trip bit-exact", exact);
        check_true("csv crlf", csv.find("\r\n") != std::string::npos);
        const std::string js = to_json(t);
        check_true("json mentions axes", js.find("\"axis_names\"") != std::string::npos);
    }
    {
        SampledFunction f = read_sampled_csv(std::string("t,f\r\n0,1\r\n0.5,2\r\n1,3\r\n"));
        check("sampled csv size", static_cast<double>(f.t_grid.size()), 3.0, 0.0);
        check("sampled csv value", f.values[1], 2.0, 0.0);
        bool threw = false;
        try { read_sampled_csv(std::string("0,1\n0.5,nan\n")); }
        catch (const IngestionError&) { threw = true; }
        check_true("sampled csv nan rejected", threw);
        threw = false;
        try { read_sampled_csv(std::string("0,1\n0.5,2\n0.4,3\n")); }
        catch (const IngestionError&) { threw = true; }
        check_true("sampled csv non-monotone rejected", threw);
    }

    std::printf("\n%s (%d failures)\n", failures == 0 ? "DEV PASS" : "DEV FAIL",
                failures);
    return failures == 0 ? 0 : 1;
}
