#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include <frack/errors.hpp>
#include <frack/gamma.hpp>
#include <frack/mittag_leffler.hpp>
#include <frack/wright.hpp>

using namespace frack;
using Catch::Matchers::WithinRel;

TEST_CASE("trivial gamma pair reduces to the exponential", "[wright]") {
    WrightSpec s;
    s.upper = {{1.0, 1.0}};
    s.lower = {{1.0, 1.0}};
    for (double z : {-2.0, -0.5, 1.0, 2.5})
        CHECK_THAT(wright_psi(s, z), WithinRel(std::exp(z), 1e-13));
}

TEST_CASE("denominator shift gives (e^z - 1)/z", "[wright]") {
    WrightSpec s;
    s.upper = {{1.0, 1.0}};
    s.lower = {{2.0, 1.0}};
    CHECK_THAT(wright_psi(s, 1.3), WithinRel(2.0533051289378802248, 1e-13));
}

TEST_CASE("one-gamma-pair form matches the Mittag-Leffler function",
          "[wright]") {
    for (double alpha : {0.4, 0.7, 0.9}) {
        for (double z : {-1.5, 0.8, 2.0}) {
            WrightSpec s;
            s.upper = {{1.0, 1.0}};
            s.lower = {{1.0, alpha}};
            CHECK_THAT(wright_psi(s, z),
                       WithinRel(mittag_leffler(alpha, z), 1e-11));
        }
    }
}

TEST_CASE("numerator pair encodes the Prabhakar weight", "[wright]") {
    const double alpha = 0.6, beta = 1.4, gamma = 1.8, z = -1.2;
    WrightSpec s;
    s.upper = {{gamma, 1.0}};
    s.lower = {{beta, alpha}};
    const double want =
        gamma_fn(gamma) * mittag_leffler(MLParams{alpha, beta, gamma}, z);
    CHECK_THAT(wright_psi(s, z), WithinRel(want, 1e-11));
}

TEST_CASE("M-Wright function closed forms", "[wright]") {
    // M_{1/2}(x) = exp(-x^2/4)/sqrt(pi)
    CHECK_THAT(wright_m(0.5, 1.0), WithinRel(0.43939128946772239705, 1e-11));
    // M_{1/3}(x) = 3^{2/3} Ai(x/3^{1/3})
    CHECK_THAT(wright_m(1.0 / 3.0, 0.9),
               WithinRel(0.42584346912425451765, 1e-10));
    // M_mu(0) = 1/Gamma(1-mu)
    CHECK_THAT(wright_m(0.3, 0.0), WithinRel(reciprocal_gamma(0.7), 1e-12));
}

TEST_CASE("cancellation beyond double precision is refused", "[wright]") {
    WrightSpec s;
    s.upper = {{1.0, 1.0}};
    s.lower = {{1.0, 0.2}};
    CHECK_THROWS_AS(wright_psi(s, -30.0), NonConvergence);
}

TEST_CASE("specification validation", "[wright]") {
    WrightSpec bad_coeff;
    bad_coeff.upper = {{1.0, -1.0}};
    bad_coeff.lower = {{1.0, 1.0}};
    CHECK_THROWS_AS(wright_psi(bad_coeff, 0.5), InvalidParameters);

    // weight sum below -1: series radius is zero
    WrightSpec divergent;
    divergent.upper = {{1.0, 2.5}};
    divergent.lower = {{1.0, 1.0}};
    CHECK_THROWS_AS(wright_psi(divergent, 0.5), Error);
}
