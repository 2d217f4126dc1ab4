#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include <frack/errors.hpp>
#include <frack/gamma.hpp>
#include <frack/kinetic.hpp>
#include <frack/mittag_leffler.hpp>

using namespace frack;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
KineticProblem make_problem(double nu, double c, double n0, ForcingTerm f) {
    KineticProblem p;
    p.nu = nu;
    p.c = c;
    p.n0 = n0;
    p.forcing = std::move(f);
    return p;
}
} // namespace

TEST_CASE("order one with constant forcing is exponential decay", "[kinetic]") {
    const auto prob = make_problem(1.0, 2.0, 3.0, ForcingTerm::constant());
    const SolutionTable t = solve_closed_form(prob, {0.25, 0.5, 1.0});
    REQUIRE(t.rows.size() == 3);
    CHECK_THAT(t.rows[0].values[0], WithinRel(3.0 * std::exp(-0.5), 1e-13));
    CHECK_THAT(t.rows[2].values[0], WithinRel(3.0 * std::exp(-2.0), 1e-13));
}

TEST_CASE("constant forcing solves to the relaxation function", "[kinetic]") {
    const auto prob = make_problem(0.7, 1.3, 2.0, ForcingTerm::constant());
    const SolutionTable t = solve_closed_form(prob, {0.5, 1.5});
    const double cnu = std::pow(1.3, 0.7);
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const double tt = t.rows[i].coordinates[0];
        const double want =
            2.0 * mittag_leffler(0.7, -cnu * std::pow(tt, 0.7));
        CHECK_THAT(t.rows[i].values[0], WithinRel(want, 1e-12));
    }
}

TEST_CASE("power-law forcing with unit exponent reduces to constant forcing",
          "[kinetic]") {
    const std::vector<double> grid = {0.3, 0.9, 1.7, 2.8};
    const auto a =
        solve_closed_form(make_problem(0.6, 1.0, 1.0, ForcingTerm::constant()),
                          grid);
    const auto b = solve_closed_form(
        make_problem(0.6, 1.0, 1.0, ForcingTerm::power_law(1.0)), grid);
    for (std::size_t i = 0; i < grid.size(); ++i)
        CHECK_THAT(b.rows[i].values[0], WithinRel(a.rows[i].values[0], 1e-12));
}

TEST_CASE("closed form agrees with the Volterra oracle", "[kinetic]") {
    struct Case {
        double nu;
        ForcingTerm forcing;
    };
    const Case cases[] = {
        {0.5, ForcingTerm::constant()},
        {0.8, ForcingTerm::power_law(2.0)},
        {1.1, ForcingTerm::prabhakar(1.3, 1.6)},
    };
    for (const Case& kc : cases) {
        const auto prob = make_problem(kc.nu, 1.0, 1.0, kc.forcing);
        const std::vector<double> grid = uniform_grid(0.0, 4.0, 1025);
        const SolutionTable closed = solve_closed_form(
            prob, std::vector<double>(grid.begin() + 1, grid.end()));
        const SolutionTable oracle = solve_oracle(prob, grid);
        const std::size_t off = oracle.rows.size() == grid.size() ? 1 : 0;
        double sup_ref = 0.0, sup_gap = 0.0;
        for (std::size_t i = 8; i < closed.rows.size(); ++i) {
            const double a = closed.rows[i].values[0];
            const double b = oracle.rows[i + off].values[0];
            sup_ref = std::max(sup_ref, std::fabs(a));
            sup_gap = std::max(sup_gap, std::fabs(a - b));
        }
        CHECK(sup_gap / sup_ref < 1e-4);
    }
}

TEST_CASE("sampled forcing matches a catalog forcing it tabulates",
          "[kinetic]") {
    const auto grid = uniform_grid(0.0, 2.0, 513);
    const auto samples =
        sample_function([](double) { return 1.0; }, grid, 0.0);
    const std::vector<double> request = {0.5, 1.0, 1.8};
    const auto direct = solve_closed_form(
        make_problem(0.8, 1.0, 1.0, ForcingTerm::constant()), request);
    const auto tab = solve_closed_form(
        make_problem(0.8, 1.0, 1.0, ForcingTerm::sampled(samples)), request);
    for (std::size_t i = 0; i < request.size(); ++i)
        CHECK_THAT(tab.rows[i].values[0],
                   WithinRel(direct.rows[i].values[0], 1e-5));
}

TEST_CASE("resolvent kernel equals its Mittag-Leffler closed form",
          "[kinetic]") {
    for (double nu : {0.6, 1.0}) {
        const double c = 1.3;
        for (double u : {0.4, 0.9, 2.0}) {
            const double want = -std::pow(c, nu) * std::pow(u, nu - 1.0) *
                                mittag_leffler(MLParams{nu, nu, 1.0},
                                               -std::pow(c * u, nu));
            CHECK_THAT(kernel_h_function(nu, c, u), WithinRel(want, 1e-9));
        }
    }
}

TEST_CASE("convolution identity including the confluent special case",
          "[kinetic]") {
    // generic draw
    const auto generic = prabhakar_convolution_check(0.8, 1.2, 0.9, 1.5, 0.7,
                                                     -0.6, 1.4);
    CHECK(generic.deviation < 1e-6);
    // order-one reduction
    const auto confluent =
        prabhakar_convolution_check(1.0, 1.0, 1.0, 1.0, 1.0, -1.0, 1.0);
    CHECK(confluent.deviation < 1e-6);
}

TEST_CASE("transform-domain identity for catalog forcings", "[kinetic]") {
    const auto prob = make_problem(0.7, 1.2, 1.5, ForcingTerm::constant());
    const KineticLaplaceReport rep = kinetic_laplace_check(prob, 2.0);
    CHECK(rep.deviation < 1e-4);

    const auto sampled_prob = make_problem(
        0.7, 1.2, 1.5,
        ForcingTerm::sampled(sample_function([](double) { return 1.0; },
                                             uniform_grid(0.0, 1.0, 65), 0.0)));
    CHECK_THROWS_AS(kinetic_laplace_check(sampled_prob, 2.0),
                    InvalidParameters);
}

TEST_CASE("grid and parameter validation", "[kinetic]") {
    const auto prob = make_problem(0.5, 1.0, 1.0, ForcingTerm::power_law(0.5));
    CHECK_THROWS_AS(solve_closed_form(prob, {}), InvalidParameters);
    CHECK_THROWS_AS(solve_closed_form(prob, {0.5, 0.25}), InvalidParameters);
    // power-law exponent below one diverges at t = 0
    CHECK_THROWS_AS(solve_closed_form(prob, {0.0, 0.5}), InvalidParameters);

    CHECK_THROWS_AS(solve_oracle(prob, uniform_grid(0.0, 1.0, 16)),
                    GridTooCoarse);
    CHECK_THROWS_AS(solve_oracle(prob, {0.0, 0.1, 0.3, 0.7}), Error);

    CHECK_THROWS_AS(ForcingTerm::power_law(-1.0).validate(),
                    InvalidParameters);
    auto bad = make_problem(2.5, 1.0, 1.0, ForcingTerm::constant());
    CHECK_THROWS_AS(bad.validate(), InvalidParameters);
}

TEST_CASE("forcing descriptions round the mini-grammar", "[kinetic]") {
    CHECK(ForcingTerm::constant().describe() == "const");
    CHECK(ForcingTerm::power_law(2.0).describe() == "power:rho=2");
    CHECK(ForcingTerm::prabhakar(1.5, 0.5).describe() ==
          "prabhakar:mu=1.5,gamma=0.5");
}
