#include "pint/parareal.hpp"

#include <cassert>
#include <cmath>

namespace pint {

namespace {

double max_abs(const Vector& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

double max_abs_diff(const Vector& a, const Vector& b) {
    assert(a.size() == b.size());
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

double integrate_scalar_step(double y, double t_begin, double t_end, double step_nominal) {
    const std::size_t n = steps_for(t_end - t_begin, step_nominal);
    const double dt_eff = (t_end - t_begin) / static_cast<double>(n);
    return integrate_slice(
        [](double state, double /*t_next*/, double h) { return be_step_scalar_riccati(state, h); },
        y, t_begin, t_end, dt_eff);
}

struct CommTracker {
    double latency = 0.0;
    double T_comm = 0.0;
    std::size_t messages = 0;
    std::size_t bytes = 0;

    void receive(std::size_t n_bytes) {
        Stopwatch sw;
        inject_latency(latency);
        if (latency > 0.0) T_comm += sw.seconds();
        ++messages;
        bytes += n_bytes;
    }
};

// One generic implementation over a state type with the few ops parareal needs.
template <class State, class Fine, class Coarse, class Combine>
PararealResult parareal_core(const State& y0, const TimeSliceDecomposition& dec,
                             const PararealConfig& cfg, const ExecConfig& exec, std::size_t dim,
                             Fine&& fine, Coarse&& coarse, Combine&& combine) {
    const std::size_t N = cfg.N;
    PararealResult out;
    RunReport& r = out.report;
    r.method = "parareal";
    r.N = N;
    r.k = cfg.k;
    r.dt = cfg.dt;
    r.DT = cfg.DT;
    r.latency = exec.latency_per_receive;
    r.workers = exec.workers;
    r.per_slice_compute.assign(N, 0.0);

    CommTracker comm;
    comm.latency = exec.latency_per_receive;
    const std::size_t state_bytes = sizeof(double) * dim;

    Stopwatch total;

    // iteration 0: sequential coarse sweep
    std::vector<State> lambda(N + 1);
    std::vector<State> g_prev(N); // G evaluated at the lambda the next fine phase will use
    lambda[0] = y0;
    double coarse_seconds = 0.0;
    std::size_t coarse_evals = 0;
    for (std::size_t j = 0; j < N; ++j) {
        if (j > 0) comm.receive(state_bytes);
        Stopwatch sw;
        g_prev[j] = coarse(lambda[j], dec.slices[j]);
        coarse_seconds += sw.seconds();
        ++coarse_evals;
        lambda[j + 1] = g_prev[j];
    }
    out.final_per_iteration.push_back(lambda[N]);

    std::vector<double> fine_mean(N, 0.0);
    struct FineOut {
        State endpoint{};
        double seconds = 0.0;
    };
    for (std::size_t iter = 1; iter <= cfg.k; ++iter) {
        const auto fine_out = parallel_map<FineOut>(N, exec.workers, [&](std::size_t j) {
            Stopwatch sw;
            FineOut f;
            f.endpoint = fine(lambda[j], dec.slices[j]);
            f.seconds = sw.seconds();
            return f;
        });
        for (std::size_t j = 0; j < N; ++j) {
            r.per_slice_compute[j] += fine_out[j].seconds;
            fine_mean[j] += fine_out[j].seconds;
        }

        // sequential correction sweep
        std::vector<State> next(N + 1);
        next[0] = y0;
        for (std::size_t j = 0; j < N; ++j) {
            if (j > 0) {
                comm.receive(state_bytes); // fine endpoint crossing the boundary
                comm.receive(state_bytes); // corrected lambda
            }
            Stopwatch sw;
            State g_new = coarse(next[j], dec.slices[j]);
            coarse_seconds += sw.seconds();
            ++coarse_evals;
            next[j + 1] = combine(g_new, fine_out[j].endpoint, g_prev[j]);
            g_prev[j] = std::move(g_new);
        }
        lambda = std::move(next);
        out.final_per_iteration.push_back(lambda[N]);
    }

    r.T_total = total.seconds();
    r.T_comm = comm.T_comm;
    r.message_count = comm.messages;
    r.bytes_communicated = comm.bytes;

    if (exec.clock != ClockMode::measured) {
        for (double& t : fine_mean) t /= std::max<std::size_t>(cfg.k, 1);
        const double coarse_per_slice =
            coarse_evals == 0 ? 0.0 : coarse_seconds / static_cast<double>(coarse_evals);
        r.modeled_time = modeled_time_parareal(fine_mean, coarse_per_slice, cfg.k, N,
                                               exec.latency_per_receive);
    }
    return out;
}

} // namespace

std::size_t parareal_message_count(std::size_t k, std::size_t N) {
    return N == 0 ? 0 : (2 * k + 1) * (N - 1);
}

double coarse_propagate(const ScalarIVP& /*ivp*/, double lambda, const TimeSlice& slice,
                        double DT) {
    return integrate_scalar_step(lambda, slice.t_begin, slice.t_end, DT);
}

Vector coarse_propagate(const LinearProblem& problem, Vector lambda, const TimeSlice& slice,
                        double DT) {
    return problem.integrate(slice, std::move(lambda), DT, true);
}

PararealResult parareal_sweep(const ScalarIVP& ivp, const PararealConfig& cfg,
                              const ExecConfig& exec) {
    const TimeSliceDecomposition dec = decompose(ivp.t0, ivp.T, cfg.N, cfg.dt);
    auto fine = [&](const Vector& y, const TimeSlice& s) -> Vector {
        return {integrate_scalar_step(y[0], s.t_begin, s.t_end, cfg.dt)};
    };
    auto coarse = [&](const Vector& y, const TimeSlice& s) -> Vector {
        return {integrate_scalar_step(y[0], s.t_begin, s.t_end, cfg.DT)};
    };
    auto combine = [](const Vector& g_new, const Vector& f, const Vector& g_old) -> Vector {
        return {g_new[0] + f[0] - g_old[0]};
    };
    PararealResult out =
        parareal_core<Vector>(Vector{ivp.y0}, dec, cfg, exec, 1, fine, coarse, combine);

    RunReport& r = out.report;
    r.final_state = out.final_per_iteration.back();
    const double y = r.final_state[0];
    if (ivp.exact) r.error_vs_exact = std::abs(y - (*ivp.exact)(ivp.T));
    const double y_serial = integrate_scalar_step(ivp.y0, ivp.t0, ivp.T, cfg.dt);
    r.error_vs_serial = std::abs(y - y_serial) / std::max(1e-300, std::abs(y_serial));
    return out;
}

PararealResult parareal_sweep(const LinearProblem& problem, const PararealConfig& cfg,
                              const ExecConfig& exec) {
    const TimeSliceDecomposition dec = decompose(problem.t0, problem.T, cfg.N, cfg.dt);
    auto fine = [&](const Vector& y, const TimeSlice& s) {
        return problem.integrate(s, y, cfg.dt, true);
    };
    auto coarse = [&](const Vector& y, const TimeSlice& s) {
        return problem.integrate(s, y, cfg.DT, true);
    };
    auto combine = [](const Vector& g_new, const Vector& f, const Vector& g_old) {
        Vector v(g_new.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = g_new[i] + f[i] - g_old[i];
        return v;
    };
    PararealResult out =
        parareal_core<Vector>(problem.y0, dec, cfg, exec, problem.dim, fine, coarse, combine);

    RunReport& r = out.report;
    r.final_state = out.final_per_iteration.back();
    if (problem.exact_final)
        r.error_vs_exact = max_abs_diff(r.final_state, *problem.exact_final);
    const Vector serial = run_serial(problem).final_state;
    const double scale = max_abs(serial);
    r.error_vs_serial =
        scale == 0.0 ? max_abs_diff(r.final_state, serial) : max_abs_diff(r.final_state, serial) / scale;
    return out;
}

RunReport run_parareal(const ScalarIVP& ivp, const PararealConfig& cfg, const ExecConfig& exec) {
    return parareal_sweep(ivp, cfg, exec).report;
}

RunReport run_parareal(const LinearProblem& problem, const PararealConfig& cfg,
                       const ExecConfig& exec) {
    return parareal_sweep(problem, cfg, exec).report;
}

} // namespace pint
