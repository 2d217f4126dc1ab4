#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include <frack/gamma.hpp>

using namespace frack;
using Catch::Matchers::WithinRel;

TEST_CASE("gamma_fn on integers and half-integers", "[gamma]") {
    CHECK_THAT(gamma_fn(1.0), WithinRel(1.0, 1e-15));
    CHECK_THAT(gamma_fn(5.0), WithinRel(24.0, 1e-14));
    CHECK_THAT(gamma_fn(0.5), WithinRel(std::sqrt(M_PI), 1e-14));
    CHECK_THAT(gamma_fn(7.5), WithinRel(1871.2543057977883465, 1e-13));
    CHECK_THAT(gamma_fn(0.3), WithinRel(2.9915689876875907446, 1e-14));
}

TEST_CASE("gamma_fn on the negative axis", "[gamma]") {
    CHECK_THAT(gamma_fn(-1.5), WithinRel(2.3632718012073547031, 1e-13));
    CHECK_THAT(gamma_fn(-2.25), WithinRel(-1.7428148657282526509, 1e-13));
}

TEST_CASE("reflection identity", "[gamma]") {
    for (double x : {0.2, 0.3, 0.45, 0.8}) {
        const double lhs = gamma_fn(x) * gamma_fn(1.0 - x);
        const double rhs = M_PI / std::sin(M_PI * x);
        CHECK_THAT(lhs, WithinRel(rhs, 1e-13));
    }
}

TEST_CASE("reciprocal_gamma vanishes at the poles", "[gamma]") {
    CHECK(reciprocal_gamma(0.0) == 0.0);
    CHECK(reciprocal_gamma(-1.0) == 0.0);
    CHECK(reciprocal_gamma(-7.0) == 0.0);
    CHECK_THAT(reciprocal_gamma(0.7), WithinRel(0.7703831838665659571, 1e-14));
    CHECK_THAT(reciprocal_gamma(3.0), WithinRel(0.5, 1e-14));
}

TEST_CASE("log_abs_gamma and gamma_sign agree with gamma_fn", "[gamma]") {
    for (double x : {0.4, 2.3, 6.7, -0.5, -1.5, -2.25}) {
        const double reconstructed =
            gamma_sign(x) * std::exp(log_abs_gamma(x));
        CHECK_THAT(reconstructed, WithinRel(gamma_fn(x), 1e-12));
    }
}

TEST_CASE("pochhammer matches the gamma-function ratio", "[gamma]") {
    CHECK(pochhammer(0.4, 0) == 1.0);
    CHECK_THAT(pochhammer(0.4, 7), WithinRel(694.87165440000006934, 1e-13));
    CHECK_THAT(pochhammer(2.0, 3), WithinRel(24.0, 1e-14));
}
