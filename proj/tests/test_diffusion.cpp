#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include <frack/diffusion.hpp>
#include <frack/errors.hpp>
#include <frack/h_function.hpp>
#include <frack/mittag_leffler.hpp>

using namespace frack;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("order one reduces to the heat kernel", "[diffusion]") {
    for (double x : {0.0, 0.5, 2.0, 4.5}) {
        const DiffusionQuery q{1.0, 1.0, x, 1.0};
        const double want = std::exp(-x * x / 4.0) / std::sqrt(4.0 * M_PI);
        CHECK_THAT(green_function(q), WithinRel(want, 1e-10));
    }
}

TEST_CASE("self-similar scaling in time", "[diffusion]") {
    for (double nu : {0.6, 1.4}) {
        const double lam = 4.0;
        const double s = std::pow(lam, nu / 2.0);
        const DiffusionQuery base{nu, 1.0, 0.8, 1.0};
        const DiffusionQuery scaled{nu, 1.0, 0.8 * s, lam};
        CHECK_THAT(green_function(scaled),
                   WithinRel(green_function(base) / s, 1e-11));
    }
}

TEST_CASE("propagator integrates to one", "[diffusion]") {
    for (double nu : {0.5, 0.8, 1.0, 1.5})
        CHECK_THAT(normalization_check(nu, 1.0, 1.0), WithinRel(1.0, 1e-6));
}

TEST_CASE("Fourier mode is the relaxation function of k squared",
          "[diffusion]") {
    CHECK_THAT(fourier_mode(0.8, 1.0, 0.0, 1.0), WithinRel(1.0, 1e-15));
    // order one: exp(-c k^2 t)
    CHECK_THAT(fourier_mode(1.0, 1.3, 2.0, 0.7),
               WithinRel(std::exp(-1.3 * 4.0 * 0.7), 1e-12));
    CHECK_THAT(fourier_mode(0.8, 1.0, 1.5, 1.0),
               WithinRel(mittag_leffler(0.8, -2.25), 1e-13));
}

TEST_CASE("cosine inversion recovers the real-space propagator",
          "[diffusion]") {
    const auto rep = cosine_inversion_check(1.0, 1.0, 1.3, 1.0, 1e-9);
    CHECK(rep.deviation < 1e-5);
}

TEST_CASE("discrete cosine transform matches the Fourier mode", "[diffusion]") {
    for (double k : {0.0, 1.0, 3.0}) {
        const double dct = cosine_transform_of_green(0.8, 1.0, 1.0, k);
        const double mode = fourier_mode(0.8, 1.0, k, 1.0);
        CHECK_THAT(dct, WithinAbs(mode, 1e-5));
    }
}

TEST_CASE("asymptotic envelope tracks the far tail", "[diffusion]") {
    // log-difference between the propagator and the envelope flattens as the
    // scaled distance grows
    const double nu = 0.8;
    double prev_diff = 0.0, prev_gap = 0.0;
    bool first = true;
    for (double chi : {6.0, 9.0, 12.0}) {
        const DiffusionQuery q{nu, 1.0, chi, 1.0};
        const double gap = green_function_log(q) - asymptotic_estimate_log(q);
        if (!first) {
            const double diff = std::fabs(gap - prev_gap);
            if (prev_diff != 0.0) CHECK(diff < prev_diff);
            prev_diff = diff;
        }
        first = false;
        prev_gap = gap;
    }
    CHECK(std::isfinite(prev_gap));
}

TEST_CASE("log evaluation agrees with the direct value", "[diffusion]") {
    for (double x : {0.5, 3.0}) {
        const DiffusionQuery q{0.7, 1.2, x, 0.9};
        CHECK_THAT(green_function_log(q),
                   WithinRel(std::log(green_function(q)), 1e-11));
    }
}

TEST_CASE("propagator is even and positive", "[diffusion]") {
    const DiffusionQuery plus{0.9, 1.0, 1.7, 1.3};
    const DiffusionQuery minus{0.9, 1.0, -1.7, 1.3};
    CHECK(green_function(plus) > 0.0);
    CHECK_THAT(green_function(minus), WithinRel(green_function(plus), 1e-14));
}

TEST_CASE("canonical H specification reproduces the propagator",
          "[diffusion]") {
    const double nu = 0.8, t = 1.2, x = 1.1;
    const double s = std::pow(t, nu); // c^nu = 1
    const HFunctionSpec h = green_h_spec(nu);
    const double via_h = evaluate(h, x * x / (4.0 * s)) /
                         std::sqrt(4.0 * M_PI * s);
    const DiffusionQuery q{nu, 1.0, x, t};
    CHECK_THAT(via_h, WithinRel(green_function(q), 1e-9));
}

TEST_CASE("unreduced H specification matches after simplification",
          "[diffusion]") {
    const double nu = 0.8, t = 1.0, x = 1.3;
    const double s = std::pow(t, nu);
    const double chi = std::fabs(x) / std::sqrt(s);
    const HFunctionSpec raw = green_h_spec_unreduced(nu);
    const double direct = evaluate(raw, chi * chi) / std::fabs(x);
    const DiffusionQuery q{nu, 1.0, x, t};
    CHECK_THAT(direct, WithinRel(green_function(q), 1e-9));
}

TEST_CASE("query validation", "[diffusion]") {
    CHECK_THROWS_AS(green_function(DiffusionQuery{2.0, 1.0, 0.0, 1.0}),
                    InvalidParameters);
    CHECK_THROWS_AS(green_function(DiffusionQuery{0.8, -1.0, 0.0, 1.0}),
                    InvalidParameters);
    CHECK_THROWS_AS(green_function(DiffusionQuery{0.8, 1.0, 0.0, 0.0}),
                    InvalidParameters);
}
