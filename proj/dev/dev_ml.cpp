#include <cstdio>
#include <vector>

#include "frack/mittag_leffler.hpp"

int main() {
    struct Case { double a, b, g, z; };
    std::vector<Case> cases;
    const double alphas[] = {0.3, 0.5, 0.9, 1.0, 1.2, 1.5, 2.0};
    const double zs[] = {0.5, 4.9, 5.0, -0.5, -4.9, -5.0, -10.0,
                         -49.0, -50.0, -100.0};
    for (double a : alphas)
        for (double z : zs)
            cases.push_back({a, 1.0, 1.0, z});
    // two-parameter and Prabhakar spot checks across zones
    cases.push_back({0.5, 0.5, 1.0, -7.0});
    cases.push_back({0.5, 1.5, 1.0, -80.0});
    cases.push_back({0.7, 0.7, 2.0, -30.0});
    cases.push_back({0.7, 1.3, 0.5, -60.0});
    cases.push_back({0.6, 0.6, 3.0, -12.0});
    cases.push_back({1.5, 2.5, 2.0, -200.0});
    cases.push_back({1.0, 2.0, 3.0, -40.0});
    cases.push_back({1.0, 0.5, 0.25, -25.0});
    cases.push_back({0.5, 1.0, 1.0, -1.0}); // exp(1)*erfc(1)
    cases.push_back({2.0, 1.0, 1.0, -9.8696044010893586}); // cos(pi)
    cases.push_back({2.0, 2.0, 1.0, -4.0}); // sin(2)/2
    cases.push_back({0.25, 1.0, 1.0, -3.0});
    cases.push_back({0.3, 2.0, 1.5, 2.5});

    for (const auto& c : cases) {
        double v;
        try {
            v = frack::mittag_leffler(frack::MLParams{c.a, c.b, c.g}, c.z);
        } catch (const frack::Error& e) {
            std::printf("%g %g %g %g EXC %s\n", c.a, c.b, c.g, c.z, e.what());
            continue;
        }
        std::printf("%.3f %.3f %.3f %.4f %.16e\n", c.a, c.b, c.g, c.z, v);
    }
    return 0;
}
