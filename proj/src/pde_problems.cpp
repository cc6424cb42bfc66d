#include "pint/pde_problems.hpp"

#include <cmath>
#include <string>

#include "pint/errors.hpp"
#include "pint/interp.hpp"

namespace pint {

namespace {
constexpr double kPi = 3.14159265358979323846;

std::size_t interior_points(double dx) {
    const double inv = 1.0 / dx;
    const auto m = static_cast<std::size_t>(std::llround(inv));
    if (m < 2 || std::abs(inv - static_cast<double>(m)) > 1e-9 * inv)
        throw BadGrid("make_heat_system: 1/dx must be an integer >= 2, got dx = " +
                      std::to_string(dx));
    return m - 1;
}
} // namespace

double heat_coefficient(double t) { return 1.0 + 0.25 * std::sin(t); }

double heat_forcing(double x, double t) {
    const double sx = std::sin(kPi * x);
    return -std::sin(t) * sx + heat_coefficient(t) * kPi * kPi * std::cos(t) * sx;
}

LinearSystem make_heat_system(double dx) {
    const std::size_t m = interior_points(dx);
    const double inv_dx2 = 1.0 / (dx * dx);

    LinearSystem sys;
    sys.dim = m;
    sys.structure = LinearSystem::Structure::tridiagonal;
    sys.apply_A = [m, dx, inv_dx2](double t, const Vector& y) {
        const double a = heat_coefficient(t) * inv_dx2;
        Vector out(m);
        for (std::size_t i = 0; i < m; ++i) {
            const double left = i > 0 ? y[i - 1] : 0.0;
            const double right = i + 1 < m ? y[i + 1] : 0.0;
            out[i] = a * (left - 2.0 * y[i] + right);
        }
        return out;
    };
    sys.forcing = [m, dx](double t) {
        Vector b(m);
        for (std::size_t i = 0; i < m; ++i) b[i] = heat_forcing(static_cast<double>(i + 1) * dx, t);
        return b;
    };
    sys.solve_implicit = [m, inv_dx2](double t, double dt, const Vector& rhs) {
        const double r = dt * heat_coefficient(t) * inv_dx2;
        const Vector sub(m - 1, -r), sup(m - 1, -r), diag(m, 1.0 + 2.0 * r);
        return thomas_solve(sub, diag, sup, rhs);
    };
    return sys;
}

Vector heat_initial(double dx) {
    const std::size_t m = interior_points(dx);
    Vector u(m);
    for (std::size_t i = 0; i < m; ++i) u[i] = std::sin(kPi * static_cast<double>(i + 1) * dx);
    return u;
}

Vector heat_exact(double dx, double t) {
    const std::size_t m = interior_points(dx);
    Vector u(m);
    for (std::size_t i = 0; i < m; ++i)
        u[i] = std::cos(t) * std::sin(kPi * static_cast<double>(i + 1) * dx);
    return u;
}

LinearProblem make_heat_problem(double dx, double dt, double T) {
    LinearSystem sys = make_heat_system(dx);
    LinearProblem p;
    p.dim = sys.dim;
    p.t0 = 0.0;
    p.T = T;
    p.dt = dt;
    p.y0 = heat_initial(dx);
    p.exact_final = heat_exact(dx, T);
    p.name = "heat";
    p.integrate = [sys = std::move(sys)](const TimeSlice& s, Vector y, double step_nominal,
                                         bool with_forcing) {
        const std::size_t n = steps_for(s.t_end - s.t_begin, step_nominal);
        const double h = (s.t_end - s.t_begin) / static_cast<double>(n);
        auto step = [&sys, with_forcing](Vector state, double t_next, double dt_step) {
            if (with_forcing) {
                const Vector b = sys.forcing(t_next);
                for (std::size_t i = 0; i < state.size(); ++i) state[i] += dt_step * b[i];
            }
            return sys.solve_implicit(t_next, dt_step, state);
        };
        return integrate_slice(step, std::move(y), s.t_begin, s.t_end, h);
    };
    return p;
}

WaveProblem make_wave_problem(std::size_t M, double x0, double sigma) {
    if (M < 8 || M % 2 != 0)
        throw BadGrid("make_wave_problem: M must be even and >= 8, got " + std::to_string(M));
    WaveProblem w;
    w.M = M;
    w.dt = 8.0 / (static_cast<double>(M) * static_cast<double>(M));
    w.x0 = x0;
    w.sigma = sigma;

    const ChebDiff cd = cheb_diff_matrix(M, -1.0, 1.0);
    w.grid = cd.grid;
    const Matrix D2 = matmul(cd.D, cd.D);
    const std::size_t d = M - 1;
    w.D2_interior = Matrix(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) w.D2_interior(i, j) = D2(i + 1, j + 1);

    w.u0.resize(d);
    w.um1.resize(d);
    for (std::size_t i = 0; i < d; ++i) {
        const double x = w.grid[i + 1];
        w.u0[i] = std::exp(-sigma * (x - x0) * (x - x0));
        w.um1[i] = std::exp(-sigma * (x - w.dt - x0) * (x - w.dt - x0));
    }
    return w;
}

Matrix wave_step_matrix(const WaveProblem& w) {
    const std::size_t d = w.M - 1;
    const double dt2 = w.dt * w.dt;
    Matrix S(2 * d, 2 * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) S(i, j) = dt2 * w.D2_interior(i, j);
        S(i, i) += 2.0;
        S(i, d + i) = -1.0;
        S(d + i, i) = 1.0;
    }
    return S;
}

LinearProblem make_wave_linear_problem(const WaveProblem& w, double T) {
    const std::size_t d = w.M - 1;
    LinearProblem p;
    p.dim = 2 * d;
    p.t0 = 0.0;
    p.T = T;
    p.dt = w.dt;
    p.y0.resize(2 * d);
    for (std::size_t i = 0; i < d; ++i) {
        p.y0[i] = w.u0[i];
        p.y0[d + i] = w.um1[i];
    }
    p.name = "wave";
    p.integrate = [D2 = w.D2_interior, d, native_dt = w.dt](const TimeSlice& s, Vector y,
                                                            double step_nominal, bool) {
        const std::size_t n = steps_for(s.t_end - s.t_begin, step_nominal);
        const double h = (s.t_end - s.t_begin) / static_cast<double>(n);
        if (std::abs(h - native_dt) > 1e-9 * native_dt)
            throw BadGrid("wave: leapfrog runs only at the native step dt = 8/M^2");
        Vector curr(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(d));
        Vector prev(y.begin() + static_cast<std::ptrdiff_t>(d), y.end());
        auto [c, pv] = leapfrog_integrate(std::move(curr), std::move(prev), n, h,
                                          [&D2](const Vector& v) { return matvec(D2, v); });
        Vector out(2 * d);
        for (std::size_t i = 0; i < d; ++i) {
            out[i] = c[i];
            out[d + i] = pv[i];
        }
        return out;
    };
    return p;
}

} // namespace pint
