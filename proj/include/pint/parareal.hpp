#pragma once

#include <cstddef>
#include <vector>

#include "pint/exec_harness.hpp"
#include "pint/nievergelt.hpp"
#include "pint/ode_core.hpp"

namespace pint {

/// Parareal run parameters. Slice widths must be integer multiples of both dt
/// and DT up to the usual 1e-9 snapping; both steps are re-snapped per slice.
struct PararealConfig {
    std::size_t N = 4;
    std::size_t k = 3;
    double dt = 1e-4; // fine step
    double DT = 0.1;  // coarse step
};

/// Coarse propagator: backward Euler across the slice with nominal step DT
/// (ceil step count, effective step = width / steps).
double coarse_propagate(const ScalarIVP& ivp, double lambda, const TimeSlice& slice, double DT);
Vector coarse_propagate(const LinearProblem& problem, Vector lambda, const TimeSlice& slice,
                        double DT);

/// Result of a full sweep: the final-time state after every iteration
/// (entry 0 is the coarse initialization) plus the usual report.
struct PararealResult {
    std::vector<Vector> final_per_iteration;
    RunReport report;
};

PararealResult parareal_sweep(const ScalarIVP& ivp, const PararealConfig& cfg,
                              const ExecConfig& exec);
PararealResult parareal_sweep(const LinearProblem& problem, const PararealConfig& cfg,
                              const ExecConfig& exec);

RunReport run_parareal(const ScalarIVP& ivp, const PararealConfig& cfg, const ExecConfig& exec);
RunReport run_parareal(const LinearProblem& problem, const PararealConfig& cfg,
                       const ExecConfig& exec);

/// Messages crossing slice boundaries: one per boundary for the coarse
/// initialization, two per boundary per iteration.
std::size_t parareal_message_count(std::size_t k, std::size_t N);

} // namespace pint
