#pragma once

#include <cstddef>

#include "pint/linalg.hpp"
#include "pint/nievergelt.hpp"
#include "pint/ode_core.hpp"

namespace pint {

/// Heat equation u_t = a(t) u_xx + b(x, t) on (0,1), homogeneous Dirichlet,
/// manufactured so that u(x, t) = cos(t) sin(pi x).
double heat_coefficient(double t);
double heat_forcing(double x, double t);

/// Method-of-lines system on the 1/dx - 1 interior points of a uniform grid.
/// Requires 1/dx to be an integer (throws BadGrid).
LinearSystem make_heat_system(double dx);

Vector heat_initial(double dx);
Vector heat_exact(double dx, double t);

/// Bundle the heat system as a sliceable linear problem (backward Euler in time).
LinearProblem make_heat_problem(double dx, double dt, double T);

/// Second-order wave equation u_tt = u_xx on [-1, 1] discretized on the
/// (M+1)-point Chebyshev extrema grid, leapfrog in time with dt = 8/M^2.
/// State is the stacked pair (u^m, u^{m-1}) on the M-1 interior points.
struct WaveProblem {
    std::size_t M = 0;
    double dt = 0.0;
    double x0 = 0.0, sigma = 200.0;
    Vector grid;        // full grid, grid[0] = 1 down to grid[M] = -1
    Matrix D2_interior; // (M-1) x (M-1)
    Vector u0, um1;     // interior pulse at t = 0 and t = -dt
};

/// Throws BadGrid unless M >= 8 and even. The initial pulse is
/// u(x, 0) = exp(-sigma (x - x0)^2), displaced by one step for u at t = -dt.
WaveProblem make_wave_problem(std::size_t M, double x0 = 0.0, double sigma = 200.0);

/// Explicit one-step map on the stacked state: [[2I + dt^2 D2, -I], [I, 0]].
Matrix wave_step_matrix(const WaveProblem& w);

LinearProblem make_wave_linear_problem(const WaveProblem& w, double T);

} // namespace pint
