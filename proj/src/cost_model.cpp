#include "pint/cost_model.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "pint/errors.hpp"
#include "pint/linalg.hpp"

namespace pint {

double device_cost(double n, double N, double M, const CostParams& p) {
    return (M * n / N) * p.tau_F + N * p.tau_N + p.tau_K;
}

double serial_cost(double n, const CostParams& p) { return n * p.tau_F_cpu; }

double speedup(double n, double N, double M, const CostParams& p) {
    return serial_cost(n, p) / device_cost(n, N, M, p);
}

double speedup_approx(double n, double N, double M, const CostParams& p) {
    const double kappa_F = p.tau_F_cpu / p.tau_F;
    const double kappa_N = p.tau_N / p.tau_F;
    return N * n * kappa_F / (M * n + N * N * kappa_N);
}

OptimalSlices optimal_slices(double n, double alpha, double kappa_N, double kappa_F) {
    OptimalSlices o;
    o.N_star = std::sqrt(std::pow(n, 1.0 + alpha) / kappa_N);
    o.N_rounded = static_cast<std::size_t>(std::llround(o.N_star));
    o.predicted_speedup = kappa_F / (2.0 * std::sqrt(kappa_N)) * std::pow(n, (1.0 - alpha) / 2.0);
    return o;
}

FitResult fit_params(const std::vector<CostObservation>& obs, double horizon) {
    if (obs.size() < 3) throw RankDeficient("fit_params: need at least 3 observations");

    // normal equations for the 3-parameter linear model
    Matrix AtA(3, 3);
    Vector Atb(3, 0.0);
    for (const auto& o : obs) {
        const double n = horizon / o.dt;
        const double row[3] = {static_cast<double>(o.M) * n / static_cast<double>(o.N),
                               static_cast<double>(o.N), 1.0};
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) AtA(i, j) += row[i] * row[j];
            Atb[i] += row[i] * o.total_us;
        }
    }

    FitResult fit;
    try {
        const Vector tau = lu_solve(AtA, Atb);
        fit.params.tau_F = tau[0];
        fit.params.tau_N = tau[1];
        fit.params.tau_K = tau[2];
    } catch (const SingularSystem&) {
        throw RankDeficient("fit_params: design matrix is rank deficient");
    }

    double num = 0.0, den = 0.0;
    for (const auto& o : obs) {
        if (o.ratio <= 0.0) continue;
        const double n = horizon / o.dt;
        num += n * (o.ratio * o.total_us);
        den += n * n;
    }
    fit.params.tau_F_cpu = den > 0.0 ? num / den : 0.0;

    fit.predicted.reserve(obs.size());
    fit.residuals.reserve(obs.size());
    for (const auto& o : obs) {
        const double n = horizon / o.dt;
        const double pred =
            device_cost(n, static_cast<double>(o.N), static_cast<double>(o.M), fit.params);
        fit.predicted.push_back(pred);
        fit.residuals.push_back(pred - o.total_us);
    }
    return fit;
}

std::vector<CostObservation> load_observations(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadGrid("load_observations: cannot open " + path);
    std::vector<CostObservation> obs;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        for (char& ch : line)
            if (ch == ',') ch = ' ';
        std::istringstream ss(line);
        CostObservation o;
        double N = 0.0, M = 0.0;
        if (!(ss >> o.dt >> N >> M >> o.total_us >> o.ratio)) continue;
        o.N = static_cast<std::size_t>(std::llround(N));
        o.M = static_cast<std::size_t>(std::llround(M));
        obs.push_back(o);
    }
    return obs;
}

} // namespace pint
