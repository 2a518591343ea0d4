// Characteristic-time summaries for two states where the separation of
// scales is visible: a large coherent state in a cold bath and a large odd
// cat in a slightly warm one.

#include <cstdio>

#include "oscidec/timescales.hpp"

using namespace oscidec;

namespace {

void print_report(const char* label, const InitialState& state, const BathParams& bath)
{
    const auto rep = ts::make_report(state, bath);
    std::printf("%s   (beta = %.2f)\n", label, rep.beta);
    std::printf("  t1      initial purity-loss time  %.6g\n", rep.t1);
    if (rep.t_star)
        std::printf("  t_star  purity-validity horizon   %.6g%s\n", rep.t_star->value,
                    rep.t_star->in_regime ? "" : "  (outside the a > 1 + 2 nu regime)");
    if (rep.t_d_estimate)
        std::printf("  t_d     analytic estimate         %.6g\n", *rep.t_d_estimate);
    if (rep.t_d_numeric)
        std::printf("  t_d     numeric root              %.6g  (u = %.6f)\n",
                    rep.t_d_numeric->t, rep.t_d_numeric->u);
    if (rep.t_T_estimate)
        std::printf("  t_T     thermalization estimate   %.6g\n", *rep.t_T_estimate);
    if (rep.plateau_C)
        std::printf("  C plateau at %.4f for u in [%.3f, %.3f]\n", rep.plateau_C->level,
                    rep.plateau_C->u_start, rep.plateau_C->u_end);
    if (rep.plateau_D)
        std::printf("  D plateau at %.4f for u in [%.3f, %.3f]\n", rep.plateau_D->level,
                    rep.plateau_D->u_start, rep.plateau_D->u_end);
    std::printf("\n");
}

} // namespace

int main()
{
    print_report("coherent, a = 100, gamma = 1, nu = 0",
                 CoherentState{100.0, 0.0}, BathParams{1.0, 0.0});
    print_report("odd cat, a = 20, gamma = 1, nu = 0.01",
                 CatState{20.0, M_PI}, BathParams{1.0, 0.01});
    return 0;
}
