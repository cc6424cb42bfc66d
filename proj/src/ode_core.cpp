#include "pint/ode_core.hpp"

#include <cassert>
#include <cmath>

namespace pint {

ScalarIVP make_model_problem() {
    ScalarIVP p;
    p.rhs = [](double, double y) { return y * y; };
    p.t0 = 0.0;
    p.T = 0.5;
    p.y0 = 1.0;
    p.exact = [](double t) { return 1.0 / (1.0 - t); };
    return p;
}

std::size_t steps_for(double width, double dt) {
    const double ratio = width / dt;
    // snap to an integer before ceiling so exact multiples stay exact
    const double snapped = ratio - 1e-9 * std::max(1.0, ratio);
    const auto n = static_cast<long long>(std::ceil(snapped));
    return n < 1 ? std::size_t{1} : static_cast<std::size_t>(n);
}

TimeSliceDecomposition decompose(double t0, double T, std::size_t N, double dt) {
    if (N == 0 || !(T > t0) || !(dt > 0.0)) throw BadGrid("decompose: need N >= 1, T > t0, dt > 0");
    TimeSliceDecomposition d;
    d.N = N;
    d.t0 = t0;
    d.T = T;
    d.dt_nominal = dt;
    d.slices.reserve(N);
    const double width = (T - t0) / static_cast<double>(N);
    for (std::size_t j = 0; j < N; ++j) {
        TimeSlice s;
        s.index = j;
        s.t_begin = t0 + static_cast<double>(j) * width;
        s.t_end = (j + 1 == N) ? T : t0 + static_cast<double>(j + 1) * width;
        s.steps = steps_for(s.t_end - s.t_begin, dt);
        s.dt = (s.t_end - s.t_begin) / static_cast<double>(s.steps);
        d.slices.push_back(s);
    }
    return d;
}

double be_step_scalar_riccati(double y, double dt) {
    const double disc = 1.0 - 4.0 * dt * y;
    if (disc < 0.0)
        throw NoRealRoot("be_step_scalar_riccati: 1 - 4 dt y = " + std::to_string(disc));
    // algebraically (1 - sqrt(disc)) / (2 dt), written to avoid cancellation near y = 0
    return 2.0 * y / (1.0 + std::sqrt(disc));
}

Vector be_step_linear(const LinearSystem& sys, const Vector& y, double t_next, double dt) {
    assert(y.size() == sys.dim);
    Vector rhs = y;
    if (sys.forcing) {
        const Vector b = sys.forcing(t_next);
        for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] += dt * b[i];
    }
    return sys.solve_implicit(t_next, dt, rhs);
}

std::pair<Vector, Vector> leapfrog_integrate(Vector y_curr, Vector y_prev, std::size_t n_steps,
                                             double dt,
                                             const std::function<Vector(const Vector&)>& apply_D2) {
    const double dt2 = dt * dt;
    for (std::size_t m = 0; m < n_steps; ++m) {
        Vector acc = apply_D2(y_curr);
        for (std::size_t i = 0; i < acc.size(); ++i)
            acc[i] = 2.0 * y_curr[i] - y_prev[i] + dt2 * acc[i];
        y_prev = std::move(y_curr);
        y_curr = std::move(acc);
    }
    return {std::move(y_curr), std::move(y_prev)};
}

} // namespace pint
