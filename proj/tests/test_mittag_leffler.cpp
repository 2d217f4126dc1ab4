#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include <frack/errors.hpp>
#include <frack/mittag_leffler.hpp>

using namespace frack;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("order one reduces to the exponential", "[ml]") {
    for (double z : {-3.0, -1.0, 0.0, 1.0, 3.0})
        CHECK_THAT(mittag_leffler(1.0, z), WithinRel(std::exp(z), 1e-13));
}

TEST_CASE("order two reduces to cosh of the square root", "[ml]") {
    CHECK_THAT(mittag_leffler(2.0, 2.0),
               WithinRel(2.178183556608570864, 1e-13));
    CHECK_THAT(mittag_leffler(2.0, -4.0), WithinRel(std::cos(2.0), 1e-13));
}

TEST_CASE("order one-half reduces to the scaled complementary error function",
          "[ml]") {
    // E_{1/2}(z) = exp(z^2) erfc(-z)
    CHECK_THAT(mittag_leffler(0.5, -1.0),
               WithinRel(0.42758357615580700441, 1e-12));
    CHECK_THAT(mittag_leffler(0.5, 1.0),
               WithinRel(std::exp(1.0) * std::erfc(-1.0), 1e-12));
}

TEST_CASE("second parameter shifts the series", "[ml]") {
    // E_{1,2}(z) = (e^z - 1)/z
    CHECK_THAT(mittag_leffler(1.0, 2.0, 1.5),
               WithinRel(2.3211260468920432151, 1e-13));
}

TEST_CASE("integer third parameter gives elementary closed forms", "[ml]") {
    // E^2_{1,1}(z) = e^z (1 + z)
    CHECK_THAT(mittag_leffler(MLParams{1.0, 1.0, 2.0}, 0.7),
               WithinRel(3.4233796026998098453, 1e-13));
}

TEST_CASE("deep negative arguments use the asymptotic continuation", "[ml]") {
    CHECK_THAT(mittag_leffler(0.5, -50.0),
               WithinRel(0.0112815362653237725, 1e-11));
    CHECK_THAT(mittag_leffler(0.9, -100.0),
               WithinRel(0.0010689724182870890385, 1e-11));
    CHECK_THAT(mittag_leffler(1.2, -10.0),
               WithinRel(-0.026398347125869203026, 1e-11));
    CHECK_THAT(mittag_leffler(MLParams{1.5, 2.5, 2.0}, -200.0),
               WithinRel(-7.050920496469693311e-6, 1e-9));
    CHECK_THAT(mittag_leffler(0.25, -3.0),
               WithinRel(0.21900442756040679925, 1e-11));
}

TEST_CASE("three-parameter reference value", "[ml]") {
    CHECK_THAT(mittag_leffler(MLParams{0.7, 1.3, 2.0}, -5.0),
               WithinRel(0.0011358567269939493248, 1e-10));
}

TEST_CASE("parameter validation", "[ml]") {
    CHECK_THROWS_AS(mittag_leffler(0.0, 1.0), InvalidParameters);
    CHECK_THROWS_AS(mittag_leffler(-0.3, 1.0), InvalidParameters);
    CHECK_THROWS_AS(mittag_leffler(2.5, 1.0), InvalidParameters);
    CHECK_THROWS_AS(mittag_leffler(MLParams{1.0, -1.0, 1.0}, 1.0),
                    InvalidParameters);
    CHECK_THROWS_AS(mittag_leffler(MLParams{1.0, 1.0, 0.0}, 1.0),
                    InvalidParameters);
}

TEST_CASE("value at zero is the reciprocal gamma of beta", "[ml]") {
    CHECK_THAT(mittag_leffler(0.7, 1.0, 0.0), WithinRel(1.0, 1e-15));
    CHECK_THAT(mittag_leffler(MLParams{0.7, 0.5, 1.3}, 0.0),
               WithinRel(1.0 / std::sqrt(M_PI), 1e-13));
}

TEST_CASE("kummer confluent hypergeometric", "[ml]") {
    CHECK_THAT(kummer_phi(1.0, 2.0, 1.5),
               WithinRel(2.3211260468920432151, 1e-13));
    CHECK_THAT(kummer_phi(0.8, 1.9, -2.3),
               WithinRel(0.46437434274730341252, 1e-12));
    CHECK_THAT(kummer_phi(1.3, 1.3, 0.9), WithinRel(std::exp(0.9), 1e-13));
}

TEST_CASE("monotone decay on the negative axis for completely monotone orders",
          "[ml]") {
    double prev = 1.0;
    for (double t : {0.5, 1.0, 2.0, 4.0, 8.0}) {
        const double v = mittag_leffler(0.8, -t);
        CHECK(v > 0.0);
        CHECK(v < prev);
        prev = v;
    }
}
