#include "pint/nievergelt.hpp"

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

double relative_gap(const Vector& v, const Vector& reference) {
    const double scale = max_abs(reference);
    return scale == 0.0 ? max_abs_diff(v, reference) : max_abs_diff(v, reference) / scale;
}

// scalar runs use the implicit Riccati stepper; the rhs field documents the problem
double integrate_scalar(const ScalarIVP& /*ivp*/, double y, double t_begin, double t_end, double dt) {
    const std::size_t n = steps_for(t_end - t_begin, dt);
    const double dt_eff = (t_end - t_begin) / static_cast<double>(n);
    return integrate_slice(
        [](double state, double /*t_next*/, double h) { return be_step_scalar_riccati(state, h); },
        y, t_begin, t_end, dt_eff);
}

bool wants_modeled(ClockMode m) { return m != ClockMode::measured; }

} // namespace

SliceMap build_scalar_slice_map(const ScalarIVP& ivp, const TimeSlice& slice,
                                const InitialValueSpace& space, double dt) {
    const Vector nodes = sample_nodes(space.kind, space.M, space.a, space.b);
    Vector endpoints(nodes.size());
    for (std::size_t m = 0; m < nodes.size(); ++m)
        endpoints[m] = integrate_scalar(ivp, nodes[m], slice.t_begin, slice.t_end, dt);
    SliceMap map;
    map.slice_index = slice.index;
    map.interpolant = make_interpolant(nodes, std::move(endpoints), space.a, space.b);
    return map;
}

AffinePropagator build_affine_propagator(const LinearProblem& problem, const TimeSlice& slice) {
    const std::size_t d = problem.dim;
    AffinePropagator prop;
    prop.slice_index = slice.index;
    prop.c = problem.integrate(slice, Vector(d, 0.0), problem.dt, true);
    prop.G = Matrix(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        Vector e(d, 0.0);
        e[j] = 1.0;
        const Vector col = problem.integrate(slice, std::move(e), problem.dt, false);
        for (std::size_t i = 0; i < d; ++i) prop.G(i, j) = col[i];
    }
    return prop;
}

double compose_sweep(const std::vector<SliceMap>& maps, double y0, double latency,
                     SweepStats& stats) {
    double y = y0;
    double apply_total = 0.0;
    for (std::size_t j = 0; j < maps.size(); ++j) {
        if (j > 0) {
            Stopwatch recv;
            inject_latency(latency);
            stats.T_comm += latency > 0.0 ? recv.seconds() : 0.0;
            ++stats.message_count;
            stats.bytes_communicated += sizeof(double);
        }
        const auto& f = maps[j].interpolant;
        if (y < f.a || y > f.b) ++stats.extrapolation_count;
        Stopwatch apply;
        y = interp_eval(f, y);
        apply_total += apply.seconds();
    }
    if (!maps.empty()) stats.apply_cost = apply_total / static_cast<double>(maps.size());
    return y;
}

Vector compose_sweep(const std::vector<AffinePropagator>& maps, Vector y0, double latency,
                     SweepStats& stats) {
    Vector y = std::move(y0);
    double apply_total = 0.0;
    for (std::size_t j = 0; j < maps.size(); ++j) {
        if (j > 0) {
            Stopwatch recv;
            inject_latency(latency);
            stats.T_comm += latency > 0.0 ? recv.seconds() : 0.0;
            ++stats.message_count;
            stats.bytes_communicated += sizeof(double) * y.size();
        }
        Stopwatch apply;
        Vector next = matvec(maps[j].G, y);
        for (std::size_t i = 0; i < next.size(); ++i) next[i] += maps[j].c[i];
        y = std::move(next);
        apply_total += apply.seconds();
    }
    if (!maps.empty()) stats.apply_cost = apply_total / static_cast<double>(maps.size());
    return y;
}

RunReport run_serial(const ScalarIVP& ivp, double dt) {
    RunReport r;
    r.method = "serial";
    r.N = 1;
    r.dt = dt;
    Stopwatch sw;
    const double y = integrate_scalar(ivp, ivp.y0, ivp.t0, ivp.T, dt);
    r.T_total = sw.seconds();
    r.final_state = {y};
    r.per_slice_compute = {r.T_total};
    if (ivp.exact) r.error_vs_exact = std::abs(y - (*ivp.exact)(ivp.T));
    return r;
}

RunReport run_serial(const LinearProblem& problem) {
    RunReport r;
    r.method = "serial";
    r.N = 1;
    r.dt = problem.dt;
    TimeSlice whole;
    whole.index = 0;
    whole.t_begin = problem.t0;
    whole.t_end = problem.T;
    whole.steps = steps_for(problem.T - problem.t0, problem.dt);
    whole.dt = (problem.T - problem.t0) / static_cast<double>(whole.steps);
    Stopwatch sw;
    r.final_state = problem.integrate(whole, problem.y0, problem.dt, true);
    r.T_total = sw.seconds();
    r.per_slice_compute = {r.T_total};
    if (problem.exact_final) r.error_vs_exact = max_abs_diff(r.final_state, *problem.exact_final);
    return r;
}

RunReport run_nievergelt(const ScalarIVP& ivp, std::size_t N, double dt,
                         const InitialValueSpace& space, const ExecConfig& exec) {
    if (N <= 1) {
        RunReport r = run_serial(ivp, dt);
        r.method = "nievergelt";
        r.workers = exec.workers;
        return r;
    }

    // serial reference outside the timed region
    const double y_serial = integrate_scalar(ivp, ivp.y0, ivp.t0, ivp.T, dt);

    RunReport r;
    r.method = "nievergelt";
    r.N = N;
    r.M = space.M;
    r.dt = dt;
    r.latency = exec.latency_per_receive;
    r.workers = exec.workers;

    Stopwatch total;
    const TimeSliceDecomposition dec = decompose(ivp.t0, ivp.T, N, dt);
    const Vector nodes = sample_nodes(space.kind, space.M, space.a, space.b);
    const std::size_t M = nodes.size();

    struct TaskOut {
        double endpoint = 0.0;
        double seconds = 0.0;
    };
    const auto tasks = parallel_map<TaskOut>(N * M, exec.workers, [&](std::size_t idx) {
        const std::size_t j = idx / M, m = idx % M;
        const TimeSlice& s = dec.slices[j];
        Stopwatch sw;
        TaskOut out;
        out.endpoint = integrate_scalar(ivp, nodes[m], s.t_begin, s.t_end, dt);
        out.seconds = sw.seconds();
        return out;
    });

    r.per_slice_compute.assign(N, 0.0);
    std::vector<SliceMap> maps(N);
    for (std::size_t j = 0; j < N; ++j) {
        Vector endpoints(M);
        for (std::size_t m = 0; m < M; ++m) {
            endpoints[m] = tasks[j * M + m].endpoint;
            r.per_slice_compute[j] += tasks[j * M + m].seconds;
        }
        maps[j].slice_index = j;
        maps[j].interpolant = make_interpolant(nodes, std::move(endpoints), space.a, space.b);
    }

    SweepStats stats;
    const double y = compose_sweep(maps, ivp.y0, exec.latency_per_receive, stats);
    r.T_total = total.seconds();

    r.final_state = {y};
    r.T_comm = stats.T_comm;
    r.message_count = stats.message_count;
    r.bytes_communicated = stats.bytes_communicated;
    r.extrapolation_count = stats.extrapolation_count;
    if (ivp.exact) r.error_vs_exact = std::abs(y - (*ivp.exact)(ivp.T));
    r.error_vs_serial = std::abs(y - y_serial) / std::max(1e-300, std::abs(y_serial));
    if (wants_modeled(exec.clock))
        r.modeled_time = modeled_time_nievergelt(r.per_slice_compute, exec.latency_per_receive,
                                                 stats.apply_cost);
    return r;
}

RunReport run_nievergelt(const LinearProblem& problem, std::size_t N, const ExecConfig& exec) {
    if (N <= 1) {
        RunReport r = run_serial(problem);
        r.method = "nievergelt";
        r.workers = exec.workers;
        return r;
    }

    const Vector serial = run_serial(problem).final_state;

    RunReport r;
    r.method = "nievergelt";
    r.N = N;
    r.dt = problem.dt;
    r.latency = exec.latency_per_receive;
    r.workers = exec.workers;

    Stopwatch total;
    const TimeSliceDecomposition dec = decompose(problem.t0, problem.T, N, problem.dt);

    struct TaskOut {
        AffinePropagator prop;
        double seconds = 0.0;
    };
    const auto tasks = parallel_map<TaskOut>(N, exec.workers, [&](std::size_t j) {
        Stopwatch sw;
        TaskOut out;
        out.prop = build_affine_propagator(problem, dec.slices[j]);
        out.seconds = sw.seconds();
        return out;
    });

    std::vector<AffinePropagator> maps(N);
    r.per_slice_compute.assign(N, 0.0);
    for (std::size_t j = 0; j < N; ++j) {
        maps[j] = tasks[j].prop;
        r.per_slice_compute[j] = tasks[j].seconds;
    }

    SweepStats stats;
    r.final_state = compose_sweep(maps, problem.y0, exec.latency_per_receive, stats);
    r.T_total = total.seconds();

    r.T_comm = stats.T_comm;
    r.message_count = stats.message_count;
    r.bytes_communicated = stats.bytes_communicated;
    if (problem.exact_final) r.error_vs_exact = max_abs_diff(r.final_state, *problem.exact_final);
    r.error_vs_serial = relative_gap(r.final_state, serial);
    if (wants_modeled(exec.clock))
        r.modeled_time = modeled_time_nievergelt(r.per_slice_compute, exec.latency_per_receive,
                                                 stats.apply_cost);
    return r;
}

} // namespace pint
