#include <cmath>

#include "doctest.h"

#include "pint/parareal.hpp"
#include "pint/pde_problems.hpp"

using namespace pint;

namespace {
ExecConfig serial_exec() { return ExecConfig{}; }

double composed_serial(const ScalarIVP& ivp, std::size_t N, double dt) {
    const auto dec = decompose(ivp.t0, ivp.T, N, dt);
    double y = ivp.y0;
    for (const auto& s : dec.slices)
        y = integrate_slice(
            [](double state, double, double h) { return be_step_scalar_riccati(state, h); }, y,
            s.t_begin, s.t_end, s.dt);
    return y;
}
} // namespace

TEST_CASE("message accounting") {
    CHECK(parareal_message_count(2, 8) == 35);
    CHECK(parareal_message_count(0, 8) == 7);
    CHECK(parareal_message_count(3, 1) == 0);

    PararealConfig cfg;
    cfg.N = 4;
    cfg.k = 3;
    cfg.dt = 1e-3;
    cfg.DT = 0.125;
    const auto r = run_parareal(make_model_problem(), cfg, serial_exec());
    CHECK(r.message_count == parareal_message_count(3, 4));
    CHECK(r.bytes_communicated == r.message_count * sizeof(double));
}

TEST_CASE("k = 0 is the coarse initialization alone") {
    PararealConfig cfg;
    cfg.N = 4;
    cfg.k = 0;
    cfg.dt = 1e-3;
    cfg.DT = 0.125;
    const ScalarIVP ivp = make_model_problem();
    const auto res = parareal_sweep(ivp, cfg, serial_exec());
    REQUIRE(res.final_per_iteration.size() == 1);
    // coarse at DT = width: a single backward Euler step per slice
    double y = 1.0;
    for (std::size_t j = 0; j < 4; ++j) y = be_step_scalar_riccati(y, 0.125);
    CHECK(res.report.final_state[0] == y);
}

TEST_CASE("iteration k pins the first k slice boundaries: finite termination") {
    PararealConfig cfg;
    cfg.N = 4;
    cfg.k = 4;
    cfg.dt = 0.01;
    cfg.DT = 0.0625;
    const ScalarIVP ivp = make_model_problem();
    const auto at_n = parareal_sweep(ivp, cfg, serial_exec());
    cfg.k = 5;
    const auto past_n = parareal_sweep(ivp, cfg, serial_exec());

    // after N iterations every boundary is pinned; only correction-arithmetic
    // roundoff (g_new + f - g_old with g_new == g_old) separates it from serial
    const double reference = composed_serial(ivp, 4, 0.01);
    CHECK(at_n.report.final_state[0] == doctest::Approx(reference).epsilon(1e-13));
    CHECK(past_n.report.final_state[0] == doctest::Approx(reference).epsilon(1e-13));
    // iterates improve monotonically toward the fine solution here
    const auto& iters = at_n.final_per_iteration;
    CHECK(std::abs(iters[1][0] - reference) <= std::abs(iters[0][0] - reference));
}

TEST_CASE("scalar benchmark errors at the frozen configuration") {
    const ScalarIVP ivp = make_model_problem();
    PararealConfig cfg;
    cfg.dt = 1e-4;
    cfg.DT = 0.1;

    cfg.N = 8;
    cfg.k = 5;
    CHECK(run_parareal(ivp, cfg, serial_exec()).error_vs_exact.value() ==
          doctest::Approx(2.77e-4).epsilon(0.02));

    cfg.k = 3;
    CHECK(run_parareal(ivp, cfg, serial_exec()).error_vs_exact.value() ==
          doctest::Approx(2.12e-4).epsilon(0.03));

    cfg.N = 4;
    cfg.k = 2;
    CHECK(run_parareal(ivp, cfg, serial_exec()).error_vs_exact.value() ==
          doctest::Approx(1.32e-3).epsilon(0.03));
}

TEST_CASE("parareal on the heat system terminates finitely too") {
    const auto problem = make_heat_problem(0.1, 0.01, 1.0);
    PararealConfig cfg;
    cfg.N = 4;
    cfg.dt = 0.01;
    cfg.DT = 0.05;

    cfg.k = 1;
    const double e1 = run_parareal(problem, cfg, serial_exec()).error_vs_serial.value();
    cfg.k = 3;
    const double e3 = run_parareal(problem, cfg, serial_exec()).error_vs_serial.value();
    cfg.k = 4;
    const double e4 = run_parareal(problem, cfg, serial_exec()).error_vs_serial.value();
    CHECK(e3 <= e1);
    CHECK(e4 <= 1e-12);
}

TEST_CASE("report echoes the parareal configuration") {
    PararealConfig cfg;
    cfg.N = 2;
    cfg.k = 2;
    cfg.dt = 1e-3;
    cfg.DT = 0.05;
    const auto r = run_parareal(make_model_problem(), cfg, serial_exec());
    CHECK(r.method == "parareal");
    CHECK(r.N == 2);
    CHECK(r.k == 2);
    CHECK(r.DT == 0.05);
    CHECK(r.per_slice_compute.size() == 2);
    CHECK(r.modeled_time.has_value());
}
