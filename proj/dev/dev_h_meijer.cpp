#include <cstdio>

#include "frack/h_function.hpp"

// Prints rows: m n p q  a... b...  z  value method
int main() {
    using namespace frack;
    struct Case {
        HFunctionSpec s;
        double z;
    };
    std::vector<Case> cases;

    // H^{2,0}_{1,2}: saddle-path contour and residue
    for (double z : {0.3, 1.0, 2.5, 8.0}) {
        HFunctionSpec s;
        s.m = 2;
        s.n = 0;
        s.upper = {{1.7, 1.0}};
        s.lower = {{0.2, 1.0}, {0.9, 1.0}};
        cases.push_back({s, z});
    }
    // H^{1,1}_{2,2}
    for (double z : {0.2, 0.8}) {
        HFunctionSpec s;
        s.m = 1;
        s.n = 1;
        s.upper = {{0.3, 1.0}, {1.4, 1.0}};
        s.lower = {{0.1, 1.0}, {1.9, 1.0}};
        cases.push_back({s, z});
    }
    // H^{2,1}_{2,3}
    for (double z : {0.5, 3.0}) {
        HFunctionSpec s;
        s.m = 2;
        s.n = 1;
        s.upper = {{0.25, 1.0}, {2.0, 1.0}};
        s.lower = {{0.4, 1.0}, {1.1, 1.0}, {2.2, 1.0}};
        cases.push_back({s, z});
    }
    // repeated lower pair (double poles): contour only
    for (double z : {0.5, 2.0}) {
        HFunctionSpec s;
        s.m = 2;
        s.n = 0;
        s.upper = {{2.5, 1.0}};
        s.lower = {{0.3, 1.0}, {0.3, 1.0}};
        cases.push_back({s, z});
    }

    for (const auto& c : cases) {
        double v;
        const char* method = "auto";
        try {
            v = frack::evaluate(c.s, c.z);
        } catch (const frack::Error& e) {
            std::printf("EXC %s\n", e.what());
            continue;
        }
        std::printf("%d %d %zu %zu ", c.s.m, c.s.n, c.s.upper.size(),
                    c.s.lower.size());
        for (const auto& p : c.s.upper) std::printf("%.17g ", p.a);
        for (const auto& p : c.s.lower) std::printf("%.17g ", p.a);
        std::printf("%.17g %.16e %s\n", c.z, v, method);
    }
    return 0;
}
