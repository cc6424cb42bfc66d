#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace pint {

/// Per-step device/CPU costs (microseconds).
struct CostParams {
    double tau_F = 0.0;     // device cost per fine step per sampled trajectory
    double tau_N = 0.0;     // per-slice overhead (kernel launch, reduction)
    double tau_K = 0.0;     // fixed cost per run
    double tau_F_cpu = 0.0; // serial CPU cost per fine step
};

/// One benchmark observation: fine step, slices, sampled trajectories,
/// measured device time, and CPU/device time ratio.
struct CostObservation {
    double dt = 0.0;
    std::size_t N = 0;
    std::size_t M = 0;
    double total_us = 0.0;
    double ratio = 0.0;
};

/// C_G(n, N, M) = (M n / N) tau_F + N tau_N + tau_K, with n fine steps total.
double device_cost(double n, double N, double M, const CostParams& p);

/// C_C(n) = n tau_F_cpu.
double serial_cost(double n, const CostParams& p);

double speedup(double n, double N, double M, const CostParams& p);

/// Large-n approximation N n kappa_F / (M n + N^2 kappa_N) with
/// kappa_F = tau_F_cpu / tau_F and kappa_N = tau_N / tau_F.
double speedup_approx(double n, double N, double M, const CostParams& p);

struct OptimalSlices {
    double N_star = 0.0;           // sqrt(n^{1+alpha} / kappa_N), M = n^alpha
    std::size_t N_rounded = 0;
    double predicted_speedup = 0.0; // kappa_F / (2 sqrt(kappa_N)) * n^{(1-alpha)/2}
};

OptimalSlices optimal_slices(double n, double alpha, double kappa_N, double kappa_F);

struct FitResult {
    CostParams params;
    std::vector<double> predicted; // device_cost per observation under fitted params
    std::vector<double> residuals; // predicted - observed
};

/// Ordinary (unweighted) least squares for (tau_F, tau_N, tau_K) against the
/// measured totals; tau_F_cpu from the ratio column. n = horizon / dt.
/// Throws RankDeficient when the design does not pin down all three parameters.
FitResult fit_params(const std::vector<CostObservation>& obs, double horizon = 0.5);

/// Parse "dt, N, M, T_total, ratio" lines; '#' starts a comment, blanks skipped.
std::vector<CostObservation> load_observations(const std::string& path);

} // namespace pint
