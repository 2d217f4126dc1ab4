#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include <frack/errors.hpp>
#include <frack/fractional_calculus.hpp>
#include <frack/gamma.hpp>

using namespace frack;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("uniform_grid endpoints and spacing", "[fraccalc]") {
    const std::vector<double> g = uniform_grid(0.0, 2.0, 5);
    REQUIRE(g.size() == 5);
    CHECK(g.front() == 0.0);
    CHECK(g.back() == 2.0);
    CHECK_THAT(g[1], WithinRel(0.5, 1e-15));
}

TEST_CASE("sampled function validation", "[fraccalc]") {
    SampledFunction f;
    f.t_grid = {0.0, 1.0, 0.5};
    f.values = {1.0, 2.0, 3.0};
    CHECK_THROWS_AS(validate(f), InvalidParameters);

    f.t_grid = {0.0, 0.5, 1.0};
    f.values = {1.0, 2.0};
    CHECK_THROWS_AS(validate(f), InvalidParameters);
}

TEST_CASE("fractional integral power rule", "[fraccalc]") {
    // the piecewise-linear interpolant represents t exactly, so the power
    // rule I^0.6 t = Gamma(2)/Gamma(2.6) t^1.6 holds to roundoff
    const auto lin = sample_function([](double t) { return t; },
                                     uniform_grid(0.0, 2.0, 257), 1.0);
    const SampledFunction gl = rl_integral(lin, 0.6);
    const double exact_lin = gamma_fn(2.0) / gamma_fn(2.6) * std::pow(2.0, 1.6);
    CHECK_THAT(gl.values.back(), WithinRel(exact_lin, 1e-12));

    // I^0.6 t^2 = Gamma(3)/Gamma(3.6) t^2.6, second-order in the grid spacing
    const auto f = sample_function([](double t) { return t * t; },
                                   uniform_grid(0.0, 2.0, 1025), 2.0);
    const SampledFunction g = rl_integral(f, 0.6);
    CHECK_THAT(g.values.back(), WithinRel(3.2622154205915346537, 1e-6));
    const double mid = gamma_fn(3.0) / gamma_fn(3.6) * std::pow(1.0, 2.6);
    CHECK_THAT(g.values[512], WithinRel(mid, 1e-5));
}

TEST_CASE("fractional integrals compose as a semigroup", "[fraccalc]") {
    const auto f = sample_function([](double t) { return std::sin(t); },
                                   uniform_grid(0.0, 3.0, 1025), 0.0);
    const SampledFunction ab = rl_integral(rl_integral(f, 0.4), 0.35);
    const SampledFunction c = rl_integral(f, 0.75);
    double worst = 0.0;
    for (std::size_t i = 0; i < c.values.size(); ++i)
        worst = std::max(worst, std::fabs(ab.values[i] - c.values[i]));
    CHECK(worst < 1e-5);
}

TEST_CASE("derivative inverts the integral", "[fraccalc]") {
    const auto f = sample_function([](double t) { return std::cos(t); },
                                   uniform_grid(0.0, 2.0, 513), 0.0);
    const SampledFunction round = rl_derivative(rl_integral(f, 0.6), 0.6);
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < round.values.size(); ++i)
        worst = std::max(worst, std::fabs(round.values[i] - f.values[i]));
    CHECK(worst < 1e-4);
}

TEST_CASE("Caputo derivative closed forms", "[fraccalc]") {
    // CD^0.5 t^2 = Gamma(3)/Gamma(2.5) t^1.5
    const auto f = sample_function([](double t) { return t * t; },
                                   uniform_grid(0.0, 2.0, 513), 2.0);
    const SampledFunction d = caputo_derivative(f, 0.5);
    const std::size_t i = 384; // t = 1.5
    CHECK_THAT(d.values[i], WithinRel(2.7639531957706838341, 1e-8));

    // the Caputo derivative of a constant vanishes
    const auto one = sample_function([](double) { return 1.0; },
                                     uniform_grid(0.0, 2.0, 129), 0.0);
    const SampledFunction dz = caputo_derivative(one, 0.5);
    for (double v : dz.values) CHECK_THAT(v, WithinAbs(0.0, 1e-10));
}

TEST_CASE("operator order validation", "[fraccalc]") {
    const auto f = sample_function([](double t) { return t; },
                                   uniform_grid(0.0, 1.0, 65), 1.0);
    CHECK_THROWS_AS(rl_integral(f, -0.5), InvalidParameters);
}

TEST_CASE("Laplace rule check reports small discrepancies", "[fraccalc]") {
    const auto f = sample_function([](double t) { return std::exp(-t); },
                                   uniform_grid(0.0, 30.0, 1501), 0.0);
    const LaplaceRuleReport rep = laplace_rule_check(f, 0.5, {1.0, 2.0});
    CHECK(!rep.entries.empty());
    CHECK(rep.max_discrepancy < 1e-4);
}
