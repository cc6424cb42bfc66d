#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pint/errors.hpp"
#include "pint/linalg.hpp"

namespace pint {

/// Scalar initial value problem y' = f(t, y) on [t0, T].
struct ScalarIVP {
    std::function<double(double, double)> rhs;
    double t0 = 0.0;
    double T = 1.0;
    double y0 = 0.0;
    std::optional<std::function<double(double)>> exact; // exact solution when known
};

/// The model problem y' = y^2, y(0) = 1 on [0, 0.5]; exact y(t) = 1/(1-t).
ScalarIVP make_model_problem();

/// Linear(ized) system y' = A(t) y + b(t) with a pluggable implicit solve so the
/// tridiagonal heat operator avoids dense factorizations.
struct LinearSystem {
    enum class Structure { tridiagonal, dense };

    std::size_t dim = 0;
    Structure structure = Structure::dense;
    std::function<Vector(double t, const Vector& y)> apply_A;
    std::function<Vector(double t)> forcing;
    /// Solve (I - dt A(t)) x = rhs.
    std::function<Vector(double t, double dt, const Vector& rhs)> solve_implicit;
};

/// One time slice of a uniform decomposition, carrying its own step count and
/// effective step so that slice_width / dt_eff is an integer exactly.
struct TimeSlice {
    std::size_t index = 0;
    double t_begin = 0.0;
    double t_end = 0.0;
    std::size_t steps = 1;
    double dt = 0.0;
};

struct TimeSliceDecomposition {
    std::size_t N = 1;
    double t0 = 0.0, T = 0.0;
    double dt_nominal = 0.0;
    std::vector<TimeSlice> slices;
};

/// Number of steps covering `width` with nominal step `dt`: ceil(width/dt),
/// snapping to the nearest integer when width/dt is within 1e-9 (relative) of it.
std::size_t steps_for(double width, double dt);

/// Uniform slice boundaries T_j = t0 + j (T - t0)/N; every slice gets
/// steps_for(width, dt) steps and dt_eff = width / steps.
TimeSliceDecomposition decompose(double t0, double T, std::size_t N, double dt);

/// One backward-Euler step of y' = y^2: returns the root of z - dt z^2 = y that
/// tends to y as dt -> 0. Throws NoRealRoot when 1 - 4 dt y < 0.
double be_step_scalar_riccati(double y, double dt);

/// One backward-Euler step of the linear system: (I - dt A(t_next)) x = y + dt b(t_next).
Vector be_step_linear(const LinearSystem& sys, const Vector& y, double t_next, double dt);

/// March `step(y, t_next, dt) -> y` from t_start to t_end. The span must be an
/// integer number of steps within 1e-9 relative, else NonIntegerStepCount.
template <class State, class Stepper>
State integrate_slice(Stepper&& step, State y, double t_start, double t_end, double dt) {
    const double span = t_end - t_start;
    const double ratio = span / dt;
    const auto n = static_cast<std::size_t>(std::llround(ratio));
    if (n == 0 || std::abs(ratio - static_cast<double>(n)) > 1e-9 * std::max(1.0, std::abs(ratio)))
        throw NonIntegerStepCount("integrate_slice: (t_end - t_start)/dt = " + std::to_string(ratio));
    for (std::size_t i = 1; i <= n; ++i) {
        const double t_next = t_start + static_cast<double>(i) * dt;
        y = step(std::move(y), t_next, dt);
    }
    return y;
}

/// n_steps of leapfrog y^{m+1} = 2 y^m - y^{m-1} + dt^2 D2 y^m on the pair
/// (y_curr, y_prev); returns the updated pair. apply_D2 maps interior -> interior,
/// so homogeneous Dirichlet boundaries never enter the state.
std::pair<Vector, Vector> leapfrog_integrate(Vector y_curr, Vector y_prev, std::size_t n_steps,
                                             double dt,
                                             const std::function<Vector(const Vector&)>& apply_D2);

} // namespace pint
