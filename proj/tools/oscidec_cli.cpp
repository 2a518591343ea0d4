// Command-line front end: figure data (fig1..fig8), parameter sweeps,
// closed-form-vs-oracle verification, and characteristic-time reports,
// all emitted as CSV or plain text.
//
// Exit codes: 0 success, 1 usage or invalid parameters, 2 numerical
// failure, 3 resource exhaustion (basis truncation, allocation, output).

#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oscidec/closedform.hpp"
#include "oscidec/errors.hpp"
#include "oscidec/model.hpp"
#include "oscidec/runner.hpp"
#include "oscidec/timescales.hpp"

namespace {

struct CliOptions {
    std::string state = "coherent";
    std::vector<double> a;
    double phi = 0.0;
    double rho = 1.0;
    double cat_phase = M_PI;
    std::vector<int> fock_m;
    double gamma = 1.0;
    std::vector<double> nu;
    int points = 400;
    double beta = 0.1;
    bool oracle = false;
    int dim = 0;
    bool tau = false;
    std::string out;
};

bool write_output(const std::string& path, const std::string& text)
{
    if (path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return true;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) return false;
    f << text;
    return f.good();
}

oscidec::run::Family parse_family(const std::string& s)
{
    using oscidec::run::Family;
    if (s == "coherent") return Family::coherent;
    if (s == "cat") return Family::cat;
    if (s == "squeezed") return Family::squeezed;
    if (s == "fock") return Family::fock;
    throw std::invalid_argument("unknown state family: " + s);
}

oscidec::InitialState single_state(const CliOptions& c)
{
    const double a = c.a.empty() ? 1.0 : c.a.front();
    switch (parse_family(c.state)) {
        case oscidec::run::Family::coherent:
            return oscidec::CoherentState{a, c.phi};
        case oscidec::run::Family::cat:
            return oscidec::CatState{a, c.cat_phase};
        case oscidec::run::Family::squeezed:
            return oscidec::SqueezedState{a, c.phi, c.rho};
        default:
            return oscidec::FockState{c.fock_m.empty() ? 1 : c.fock_m.front()};
    }
}

std::string timescale_text(const oscidec::ts::TimescaleReport& r)
{
    char buf[128];
    std::string out;
    auto line = [&](const char* fmt, auto... args) {
        std::snprintf(buf, sizeof(buf), fmt, args...);
        out += buf;
        out.push_back('\n');
    };
    line("beta %.10g", r.beta);
    line("t1 %.10g", r.t1);
    if (r.t_star)
        line("t_star %.10g in_regime=%d", r.t_star->value, r.t_star->in_regime ? 1 : 0);
    if (r.t_d_estimate) line("t_d_estimate %.10g", *r.t_d_estimate);
    if (r.t_d_numeric)
        line("t_d_numeric t=%.10g u=%.10g", r.t_d_numeric->t, r.t_d_numeric->u);
    else
        out += "t_d_numeric none\n";
    if (r.t_T_estimate)
        line("t_T_estimate %.10g", *r.t_T_estimate);
    else
        out += "t_T_estimate undefined (nu = 0)\n";
    if (r.plateau_C)
        line("plateau_C u=[%.6g, %.6g] level=%.6g", r.plateau_C->u_start,
             r.plateau_C->u_end, r.plateau_C->level);
    else
        out += "plateau_C none\n";
    if (r.plateau_D)
        line("plateau_D u=[%.6g, %.6g] level=%.6g", r.plateau_D->u_start,
             r.plateau_D->u_end, r.plateau_D->level);
    else
        out += "plateau_D none\n";
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"coherence and thermalization measures of a damped oscillator"};
    app.require_subcommand(1);
    app.set_config("--config", "", "line-oriented key=value configuration file");
    app.fallthrough();

    CliOptions c;
    app.add_option("--state", c.state, "state family: coherent, cat, squeezed, fock")
        ->check(CLI::IsMember({"coherent", "cat", "squeezed", "fock"}));
    app.add_option("--a", c.a, "mean photon number(s) |alpha|^2");
    app.add_option("--phi", c.phi, "coherent/squeezed amplitude phase");
    app.add_option("--rho", c.rho, "squeezing parameter");
    app.add_option("--cat-phase", c.cat_phase, "cat relative phase (0 even, pi odd)");
    app.add_option("--fock-m", c.fock_m, "Fock level(s) M");
    app.add_option("--gamma", c.gamma, "damping rate")->check(CLI::PositiveNumber);
    app.add_option("--nu", c.nu, "reservoir mean occupation(s)");
    app.add_option("--points", c.points, "number of u-grid points")
        ->check(CLI::Range(2, 2000000));
    app.add_option("--beta", c.beta, "decoherence threshold fraction");
    app.add_flag("--oracle", c.oracle, "append oracle columns / use oracle checks");
    app.add_option("--dim", c.dim, "basis-size override for the oracle");
    app.add_flag("--tau", c.tau, "emit a tau = 2*gamma*t column in figure tables");
    app.add_option("--out", c.out, "output path (default: stdout)");

    CLI::App* figs[9] = {nullptr};
    for (int i = 1; i <= 8; ++i) {
        figs[i] = app.add_subcommand("fig" + std::to_string(i),
                                     "CSV data for figure preset " + std::to_string(i));
        figs[i]->fallthrough();
    }
    auto* sweep = app.add_subcommand("sweep", "measure table over a parameter grid");
    sweep->fallthrough();
    auto* verify = app.add_subcommand("verify", "closed form vs oracle comparison");
    verify->fallthrough();
    auto* tsc = app.add_subcommand("timescales", "characteristic-time report");
    tsc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (c.a.empty()) c.a = {1.0};
        if (c.nu.empty()) c.nu = {0.0};
        if (c.fock_m.empty()) c.fock_m = {1};

        for (int i = 1; i <= 8; ++i) {
            if (figs[i]->parsed()) {
                const auto table = oscidec::run::figure_table(i, c.points, c.gamma, c.tau);
                if (!write_output(c.out, oscidec::run::to_csv(table))) {
                    std::cerr << "cannot write " << c.out << "\n";
                    return 3;
                }
                return 0;
            }
        }

        if (sweep->parsed()) {
            oscidec::run::SweepConfig cfg;
            cfg.family = parse_family(c.state);
            cfg.a_values = c.a;
            cfg.m_values = c.fock_m;
            cfg.nu_values = c.nu;
            cfg.phi = c.phi;
            cfg.rho = c.rho;
            cfg.cat_phase = c.cat_phase;
            cfg.gamma = c.gamma;
            cfg.points = c.points;
            cfg.oracle = c.oracle;
            cfg.dim = c.dim;
            const auto table = oscidec::run::sweep_table(cfg);
            if (!write_output(c.out, oscidec::run::to_csv(table))) {
                std::cerr << "cannot write " << c.out << "\n";
                return 3;
            }
            return 0;
        }

        if (verify->parsed()) {
            std::vector<oscidec::run::Family> families;
            if (app.count("--state"))
                families = {parse_family(c.state)};
            else
                families = {oscidec::run::Family::coherent, oscidec::run::Family::cat,
                            oscidec::run::Family::squeezed, oscidec::run::Family::fock};
            std::string text;
            bool ok = true;
            for (const auto f : families) {
                const auto rep = oscidec::run::verify_family(f, c.gamma);
                ok = ok && rep.pass();
                text += oscidec::run::to_text(rep);
            }
            if (!write_output(c.out, text)) {
                std::cerr << "cannot write " << c.out << "\n";
                return 3;
            }
            return ok ? 0 : 2;
        }

        if (tsc->parsed()) {
            const auto state = single_state(c);
            const oscidec::BathParams bath(c.gamma, c.nu.front());
            const auto rep = oscidec::ts::make_report(state, bath, c.beta);
            if (!write_output(c.out, timescale_text(rep))) {
                std::cerr << "cannot write " << c.out << "\n";
                return 3;
            }
            return 0;
        }

        std::cerr << "no subcommand selected\n";
        return 1;
    } catch (const oscidec::TruncationError& e) {
        std::cerr << "resource: " << e.what() << " (suggested dim " << e.suggested_dim()
                  << ")\n";
        return 3;
    } catch (const std::bad_alloc&) {
        std::cerr << "resource: allocation failed\n";
        return 3;
    } catch (const oscidec::QuadratureError& e) {
        std::cerr << "numerical: " << e.what() << "\n";
        return 2;
    } catch (const oscidec::StiffnessError& e) {
        std::cerr << "numerical: " << e.what() << "\n";
        return 2;
    } catch (const oscidec::IntegrationQualityError& e) {
        std::cerr << "numerical: " << e.what() << "\n";
        return 2;
    } catch (const oscidec::BranchError& e) {
        std::cerr << "numerical: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "numerical: " << e.what() << "\n";
        return 2;
    }
}
