#include "pint/exec_harness.hpp"

#include <algorithm>

namespace pint {

double modeled_time_nievergelt(const std::vector<double>& per_slice_compute, double latency,
                               double apply_cost) {
    if (per_slice_compute.empty()) return 0.0;
    const double compute = *std::max_element(per_slice_compute.begin(), per_slice_compute.end());
    const auto n_msgs = static_cast<double>(per_slice_compute.size() - 1);
    return compute + n_msgs * latency + n_msgs * apply_cost;
}

double modeled_time_parareal(const std::vector<double>& fine_slice_times, double coarse_per_slice,
                             std::size_t k, std::size_t N, double latency) {
    const double fine_max = fine_slice_times.empty()
                                ? 0.0
                                : *std::max_element(fine_slice_times.begin(), fine_slice_times.end());
    const double kk = static_cast<double>(k);
    const double nn = static_cast<double>(N);
    const double messages = (2.0 * kk + 1.0) * (nn - 1.0);
    return kk * fine_max + (kk + 1.0) * nn * coarse_per_slice + messages * latency;
}

} // namespace pint
