#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pint/exec_harness.hpp"
#include "pint/interp.hpp"
#include "pint/linalg.hpp"
#include "pint/ode_core.hpp"

namespace pint {

/// Interval of initial values sampled per slice for the nonlinear (scalar) method.
struct InitialValueSpace {
    double a = 0.0;
    double b = 2.0;
    std::size_t M = 6;
    NodeKind kind = NodeKind::second_kind;
};

/// Slice initial -> final map for a scalar problem: M sampled trajectories
/// condensed into one barycentric interpolant.
struct SliceMap {
    std::size_t slice_index = 0;
    InterpolantData interpolant;
};

/// Exact slice map y -> G y + c for linear problems.
struct AffinePropagator {
    std::size_t slice_index = 0;
    Matrix G;
    Vector c;
};

/// Everything a benchmark run reports. Errors: error_vs_exact is an absolute
/// max-norm against the known solution; error_vs_serial is relative to the
/// serial max-norm. T_total / T_comm are measured seconds (T_comm counts only
/// injected receive latency); modeled_time is the idealized schedule.
struct RunReport {
    Vector final_state;
    std::optional<double> error_vs_exact;
    std::optional<double> error_vs_serial;
    double T_total = 0.0;
    double T_comm = 0.0;
    std::optional<double> modeled_time;
    std::size_t message_count = 0;
    std::size_t bytes_communicated = 0;
    std::vector<double> per_slice_compute;
    int extrapolation_count = 0;

    std::string method;
    std::size_t N = 1;
    std::size_t M = 0; // Chebyshev points per slice (scalar runs)
    std::size_t k = 0; // parareal iterations
    double dt = 0.0;
    double DT = 0.0;
    double latency = 0.0;
    std::size_t workers = 1;
};

/// Linear problem in the shape both time-parallel methods consume: integrate
/// one slice from a given state at a given nominal step, with forcing on or off.
struct LinearProblem {
    std::size_t dim = 0;
    double t0 = 0.0, T = 0.0;
    double dt = 0.0; // fine step
    Vector y0;
    std::function<Vector(const TimeSlice&, Vector y, double step_nominal, bool with_forcing)> integrate;
    std::optional<Vector> exact_final;
    std::string name;
};

/// Sample space.M initial values, integrate each across the slice with nominal
/// step dt, and return the interpolated endpoint map.
SliceMap build_scalar_slice_map(const ScalarIVP& ivp, const TimeSlice& slice,
                                const InitialValueSpace& space, double dt);

/// Exact affine map of one slice: c from a forced run of the zero state, G
/// columns from homogeneous runs of the basis vectors.
AffinePropagator build_affine_propagator(const LinearProblem& problem, const TimeSlice& slice);

struct SweepStats {
    double T_comm = 0.0;
    std::size_t message_count = 0;
    std::size_t bytes_communicated = 0;
    int extrapolation_count = 0;
    double apply_cost = 0.0; // mean seconds per map application
};

/// Sequentially compose the slice maps from y0. Each map after the first is
/// received over the (simulated) wire: sleep `latency`, count one message.
double compose_sweep(const std::vector<SliceMap>& maps, double y0, double latency, SweepStats& stats);
Vector compose_sweep(const std::vector<AffinePropagator>& maps, Vector y0, double latency,
                     SweepStats& stats);

/// Full benchmark runs. N = 1 degenerates to plain serial stepping.
RunReport run_nievergelt(const ScalarIVP& ivp, std::size_t N, double dt,
                         const InitialValueSpace& space, const ExecConfig& exec);
RunReport run_nievergelt(const LinearProblem& problem, std::size_t N, const ExecConfig& exec);

/// Plain serial integration wrapped in the same report shape.
RunReport run_serial(const ScalarIVP& ivp, double dt);
RunReport run_serial(const LinearProblem& problem);

} // namespace pint
