// Print a measure table for an odd cat state relaxing into a warm bath.
//
// Columns: compact time u = 1 - e^{-2 gamma t}, physical time t, total
// purity mu, diagonal purity lambda, coherence C, thermalization D, and
// ground occupation p0. C or D print as "-" where the definition
// degenerates.

#include <cstdio>

#include "oscidec/closedform.hpp"

using namespace oscidec;

int main()
{
    const BathParams bath{1.0, 0.5};
    const CatState cat{10.0, M_PI};
    const InitialState state = cat;

    std::printf("odd cat, a = %.1f, gamma = %.1f, nu = %.1f\n\n",
                cat.a, bath.gamma, bath.nu);
    std::printf("%8s %10s %13s %13s %13s %13s %13s\n",
                "u", "t", "mu", "lambda", "C", "D", "p0");

    for (int k = 0; k <= 24; ++k) {
        const CompactTime u(k / 25.0);
        const auto r = cf::measures(state, u, bath);
        std::printf("%8.4f %10.4f %13.6e %13.6e", u.value,
                    physical_time(u, bath), r.mu, r.lambda);
        if (r.C) std::printf(" %13.6e", *r.C);
        else     std::printf(" %13s", "-");
        if (r.D) std::printf(" %13.6e", *r.D);
        else     std::printf(" %13s", "-");
        std::printf(" %13.6e\n", r.p0);
    }

    std::printf("\nequilibrium purity 1/(1 + 2 nu) = %.6f\n",
                1.0 / (1.0 + 2.0 * bath.nu));
    return 0;
}
