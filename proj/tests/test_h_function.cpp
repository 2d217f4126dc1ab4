#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include <frack/errors.hpp>
#include <frack/gamma.hpp>
#include <frack/h_function.hpp>
#include <frack/mittag_leffler.hpp>

using namespace frack;
using Catch::Matchers::WithinRel;

namespace {
HFunctionSpec exponential_spec() {
    // H^{1,0}_{0,1}[z | ; (0,1)] = exp(-z)
    HFunctionSpec s;
    s.m = 1;
    s.n = 0;
    s.lower = {{0.0, 1.0}};
    return s;
}

HFunctionSpec prabhakar_spec(double alpha, double beta, double gamma) {
    HFunctionSpec s;
    s.m = 1;
    s.n = 1;
    s.upper = {{1.0 - gamma, 1.0}};
    s.lower = {{0.0, 1.0}, {1.0 - beta, alpha}};
    return s;
}
} // namespace

TEST_CASE("exponential special case from both methods", "[hfun]") {
    const HFunctionSpec s = exponential_spec();
    for (double z : {0.3, 0.7, 2.0, 5.0}) {
        CHECK_THAT(evaluate_residue_series(s, z), WithinRel(std::exp(-z), 1e-12));
        CHECK_THAT(evaluate_contour(s, z), WithinRel(std::exp(-z), 1e-10));
        CHECK_THAT(evaluate(s, z), WithinRel(std::exp(-z), 1e-12));
    }
}

TEST_CASE("residue series and contour quadrature agree", "[hfun]") {
    const HFunctionSpec s = prabhakar_spec(0.7, 1.3, 2.2);
    for (double z : {0.1, 0.5, 1.0, 2.5}) {
        const double series = evaluate_residue_series(s, z, 1e-9);
        const double contour = evaluate_contour(s, z);
        CHECK_THAT(series, WithinRel(contour, 1e-8));
    }
}

TEST_CASE("Prabhakar correspondence", "[hfun]") {
    const double a = 0.7, b = 1.3, g = 2.2;
    const HFunctionSpec s = prabhakar_spec(a, b, g);
    for (double x : {0.4, 2.0}) {
        const double want =
            gamma_fn(g) * mittag_leffler(MLParams{a, b, g}, -x);
        CHECK_THAT(evaluate(s, x), WithinRel(want, 1e-9));
    }
}

TEST_CASE("argument inversion swaps the parameter arrays", "[hfun]") {
    const HFunctionSpec s = prabhakar_spec(0.7, 1.3, 2.2);
    const HFunctionSpec inv = invert_argument(s);
    CHECK(inv.m == 1);
    CHECK(inv.n == 1);
    CHECK(inv.upper.size() == 2);
    CHECK(inv.lower.size() == 1);
    for (double z : {0.5, 2.0})
        CHECK_THAT(evaluate(inv, 1.0 / z), WithinRel(evaluate(s, z), 1e-8));

    // the transform is an involution up to roundoff in 1 - (1 - a)
    const HFunctionSpec twice = invert_argument(inv);
    CHECK(twice.m == s.m);
    CHECK(twice.n == s.n);
    REQUIRE(twice.upper.size() == s.upper.size());
    REQUIRE(twice.lower.size() == s.lower.size());
    for (std::size_t i = 0; i < s.upper.size(); ++i) {
        CHECK_THAT(twice.upper[i].a,
                   Catch::Matchers::WithinAbs(s.upper[i].a, 1e-15));
        CHECK_THAT(twice.upper[i].A,
                   Catch::Matchers::WithinAbs(s.upper[i].A, 1e-15));
    }
    for (std::size_t i = 0; i < s.lower.size(); ++i) {
        CHECK_THAT(twice.lower[i].a,
                   Catch::Matchers::WithinAbs(s.lower[i].a, 1e-15));
        CHECK_THAT(twice.lower[i].A,
                   Catch::Matchers::WithinAbs(s.lower[i].A, 1e-15));
    }
}

TEST_CASE("power shift multiplies by z^sigma", "[hfun]") {
    const HFunctionSpec s = prabhakar_spec(0.7, 1.3, 2.2);
    for (double sigma : {0.35, -0.5}) {
        const HFunctionSpec shifted = power_shift(s, sigma);
        for (double z : {0.6, 1.7}) {
            CHECK_THAT(evaluate(shifted, z),
                       WithinRel(std::pow(z, sigma) * evaluate(s, z), 1e-9));
        }
    }
}

TEST_CASE("common pair cancellation", "[hfun]") {
    HFunctionSpec s;
    s.m = 1;
    s.n = 1;
    s.upper = {{-0.8, 1.0}};
    s.lower = {{0.0, 1.0}, {-1.0, 0.7}};

    HFunctionSpec padded = s;
    padded.upper.push_back({0.45, 1.3});
    padded.lower.insert(padded.lower.begin(), {0.45, 1.3});
    padded.m = 2;

    const HFunctionSpec reduced = cancel_common_pairs(padded);
    CHECK(reduced.m == 1);
    CHECK(reduced.upper.size() == 1);
    CHECK(reduced.lower.size() == 2);
    CHECK_THAT(evaluate(reduced, 1.7), WithinRel(evaluate(s, 1.7), 1e-10));

    CHECK_THROWS_AS(cancel_common_pairs(s), NoCancellablePair);
}

TEST_CASE("coincident poles reject the residue series but not the contour",
          "[hfun]") {
    HFunctionSpec s;
    s.m = 2;
    s.n = 0;
    s.upper = {{2.5, 1.0}};
    s.lower = {{0.3, 1.0}, {0.3, 1.0}};
    CHECK_THROWS_AS(evaluate_residue_series(s, 0.5), DegeneratePoles);
    CHECK_THAT(evaluate(s, 0.5), WithinRel(evaluate_contour(s, 0.5), 1e-11));
}

TEST_CASE("specification validation", "[hfun]") {
    HFunctionSpec bad;
    bad.m = 2;
    bad.n = 0;
    bad.lower = {{0.0, 1.0}}; // m exceeds q
    CHECK_THROWS_AS(evaluate(bad, 1.0), InvalidParameters);

    HFunctionSpec nonpos = exponential_spec();
    nonpos.lower[0].A = -1.0;
    CHECK_THROWS_AS(evaluate(nonpos, 1.0), InvalidParameters);
}
