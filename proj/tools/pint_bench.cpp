#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "pint/cost_model.hpp"
#include "pint/errors.hpp"
#include "pint/exec_harness.hpp"
#include "pint/nievergelt.hpp"
#include "pint/parareal.hpp"
#include "pint/pde_problems.hpp"
#include "pint/table.hpp"

namespace {

struct CommonOpts {
    std::string format = "csv";
    std::string output;
    int precision = 3;
    std::size_t workers = 1;
    double latency = 0.0;
};

void add_common(CLI::App* sub, CommonOpts& o) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"csv", "markdown"}))
        ->capture_default_str();
    sub->add_option("--output", o.output, "Write the table to PATH instead of stdout");
    sub->add_option("--precision", o.precision, "Significant digits for errors and times")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();
    sub->add_option("--workers", o.workers, "Worker threads")->capture_default_str();
    sub->add_option("--latency", o.latency, "Injected seconds per received message")
        ->capture_default_str();
}

void emit(const std::vector<pint::Table>& tables, const CommonOpts& o) {
    std::string text;
    for (std::size_t i = 0; i < tables.size(); ++i) {
        if (i) text += "\n";
        text += o.format == "markdown" ? pint::to_markdown(tables[i]) : pint::to_csv(tables[i]);
    }
    if (o.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(o.output);
        if (!f) throw std::runtime_error("cannot write " + o.output);
        f << text;
    }
}

std::string param_str(double v) { return pint::format_sig(v, 6); }

std::string opt_err(const std::optional<double>& e, int sig) {
    return e ? pint::format_sig(*e, sig) : "---";
}

pint::ExecConfig exec_of(const CommonOpts& o) {
    pint::ExecConfig e;
    e.workers = o.workers;
    e.latency_per_receive = o.latency;
    return e;
}

pint::Table pde_table(const pint::LinearProblem& problem, const std::vector<std::size_t>& slices,
                      const CommonOpts& o, bool with_exact) {
    pint::Table t;
    t.columns = {"N", "error_vs_serial"};
    if (with_exact) t.columns.push_back("error_vs_exact");
    for (const char* c : {"T_total", "T_comm", "modeled_time", "messages", "bytes"})
        t.columns.emplace_back(c);

    for (std::size_t N : slices) {
        const pint::RunReport r = pint::run_nievergelt(problem, N, exec_of(o));
        std::vector<std::string> row;
        row.push_back(std::to_string(N));
        row.push_back(N == 1 ? "0" : pint::format_sig(r.error_vs_serial.value_or(0.0), o.precision));
        if (with_exact) row.push_back(opt_err(r.error_vs_exact, o.precision));
        row.push_back(pint::format_sig(r.T_total, o.precision));
        row.push_back(N == 1 ? "---" : pint::format_sig(r.T_comm, o.precision));
        row.push_back(r.modeled_time ? pint::format_sig(*r.modeled_time, o.precision) : "---");
        row.push_back(std::to_string(r.message_count));
        row.push_back(std::to_string(r.bytes_communicated));
        t.rows.push_back(std::move(row));
    }
    return t;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Time-parallel integration benchmarks (Nievergelt / parareal)"};
    app.require_subcommand(1);

    // scalar-table: interpolation error of the scalar method over a dt x M grid
    CommonOpts so;
    std::vector<double> s_dts = {0.01, 0.005, 0.0025, 0.001, 0.0001};
    std::vector<std::size_t> s_points = {3, 4, 5, 6, 7};
    std::size_t s_slices = 4;
    auto* sc = app.add_subcommand("scalar-table", "Error vs exact for y' = y^2 over dt and M");
    sc->add_option("--dt", s_dts, "Fine steps")->delimiter(',')->capture_default_str();
    sc->add_option("--cheb-points", s_points, "Chebyshev points per slice")
        ->delimiter(',')
        ->capture_default_str();
    sc->add_option("--slices", s_slices, "Number of time slices")->capture_default_str();
    add_common(sc, so);

    // compare: Nievergelt vs parareal at fixed dt
    CommonOpts co;
    double c_dt = 1e-4, c_DT = 0.1;
    std::vector<std::size_t> c_slices = {1, 2, 4, 8, 16, 32, 64};
    std::vector<std::size_t> c_iters = {2, 3, 5};
    std::size_t c_points = 6;
    auto* cm = app.add_subcommand("compare", "Nievergelt vs parareal error at final time");
    cm->add_option("--dt", c_dt, "Fine step")->capture_default_str();
    cm->add_option("--coarse-dt", c_DT, "Parareal coarse step")->capture_default_str();
    cm->add_option("--slices", c_slices, "Slice counts")->delimiter(',')->capture_default_str();
    cm->add_option("--iterations", c_iters, "Parareal iteration counts")
        ->delimiter(',')
        ->capture_default_str();
    cm->add_option("--cheb-points", c_points, "Chebyshev points per slice")->capture_default_str();
    add_common(cm, co);

    // heat
    CommonOpts ho;
    double h_dx = 0.1, h_dt = 0.005, h_T = 10.0;
    std::vector<std::size_t> h_slices = {1, 2, 4, 8, 16};
    auto* he = app.add_subcommand("heat", "Nievergelt on the 1D heat benchmark");
    he->add_option("--dx", h_dx, "Grid spacing (1/dx integer)")->capture_default_str();
    he->add_option("--dt", h_dt, "Fine step")->capture_default_str();
    he->add_option("--final-time", h_T, "Final time")->capture_default_str();
    he->add_option("--slices", h_slices, "Slice counts")->delimiter(',')->capture_default_str();
    add_common(he, ho);

    // wave
    CommonOpts wo;
    std::size_t w_M = 40;
    double w_T = 16.0, w_x0 = 0.0, w_sigma = 200.0;
    std::vector<std::size_t> w_slices = {1, 2, 4, 8, 16};
    auto* wa = app.add_subcommand("wave", "Nievergelt on the Chebyshev wave benchmark");
    wa->add_option("--wave-points", w_M, "Chebyshev grid order M (even, >= 8)")
        ->capture_default_str();
    wa->add_option("--final-time", w_T, "Final time")->capture_default_str();
    wa->add_option("--pulse-center", w_x0, "Initial pulse center")->capture_default_str();
    wa->add_option("--pulse-width", w_sigma, "Initial pulse sharpness sigma")
        ->capture_default_str();
    wa->add_option("--slices", w_slices, "Slice counts")->delimiter(',')->capture_default_str();
    add_common(wa, wo);

    // costmodel
    CommonOpts mo;
    std::string m_fixture = "data/gpu_timings.txt";
    double m_horizon = 0.5;
    auto* cs = app.add_subcommand("costmodel", "Fit per-step costs from device timings");
    cs->add_option("--fixture", m_fixture, "Timings file")->capture_default_str();
    cs->add_option("--horizon", m_horizon, "Integration horizon T (n = T/dt)")
        ->capture_default_str();
    add_common(cs, mo);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*sc) {
            const pint::ScalarIVP ivp = pint::make_model_problem();
            pint::Table t;
            t.columns = {"dt"};
            for (std::size_t M : s_points) t.columns.push_back("M=" + std::to_string(M));
            for (double dt : s_dts) {
                std::vector<std::string> row = {param_str(dt)};
                for (std::size_t M : s_points) {
                    pint::InitialValueSpace space;
                    space.M = M;
                    const auto r = pint::run_nievergelt(ivp, s_slices, dt, space, exec_of(so));
                    row.push_back(opt_err(r.error_vs_exact, so.precision));
                }
                t.rows.push_back(std::move(row));
            }
            emit({t}, so);
        } else if (*cm) {
            const pint::ScalarIVP ivp = pint::make_model_problem();
            pint::Table t;
            t.columns = {"N", "nievergelt"};
            for (std::size_t k : c_iters) t.columns.push_back("k=" + std::to_string(k));
            for (std::size_t N : c_slices) {
                std::vector<std::string> row = {std::to_string(N)};
                pint::InitialValueSpace space;
                space.M = c_points;
                const auto rn = pint::run_nievergelt(ivp, N, c_dt, space, exec_of(co));
                row.push_back(opt_err(rn.error_vs_exact, co.precision));
                for (std::size_t k : c_iters) {
                    pint::PararealConfig cfg;
                    cfg.N = N;
                    cfg.k = k;
                    cfg.dt = c_dt;
                    cfg.DT = c_DT;
                    const auto rp = pint::run_parareal(ivp, cfg, exec_of(co));
                    row.push_back(opt_err(rp.error_vs_exact, co.precision));
                }
                t.rows.push_back(std::move(row));
            }
            emit({t}, co);
        } else if (*he) {
            const auto problem = pint::make_heat_problem(h_dx, h_dt, h_T);
            emit({pde_table(problem, h_slices, ho, true)}, ho);
        } else if (*wa) {
            const auto wave = pint::make_wave_problem(w_M, w_x0, w_sigma);
            const auto problem = pint::make_wave_linear_problem(wave, w_T);
            emit({pde_table(problem, w_slices, wo, false)}, wo);
        } else if (*cs) {
            const auto obs = pint::load_observations(m_fixture);
            const auto fit = pint::fit_params(obs, m_horizon);
            pint::Table params;
            params.columns = {"tau_F", "tau_N", "tau_K", "tau_F_cpu"};
            params.rows.push_back({pint::format_sig(fit.params.tau_F, 6),
                                   pint::format_sig(fit.params.tau_N, 6),
                                   pint::format_sig(fit.params.tau_K, 6),
                                   pint::format_sig(fit.params.tau_F_cpu, 6)});
            pint::Table rows;
            rows.columns = {"dt", "N", "M", "T_total", "T_estimate", "residual"};
            for (std::size_t i = 0; i < obs.size(); ++i) {
                rows.rows.push_back({param_str(obs[i].dt), std::to_string(obs[i].N),
                                     std::to_string(obs[i].M), param_str(obs[i].total_us),
                                     pint::format_sig(fit.predicted[i], mo.precision),
                                     pint::format_sig(fit.residuals[i], mo.precision)});
            }
            emit({params, rows}, mo);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
