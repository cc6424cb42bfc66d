#pragma once

#include <atomic>
#include <chrono>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

#include "pint/errors.hpp"

namespace pint {

enum class ClockMode { measured, modeled, both };

struct ExecConfig {
    std::size_t workers = 1;
    double latency_per_receive = 0.0; // seconds, injected by sleeping at each receive
    ClockMode clock = ClockMode::both;
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    [[nodiscard]] double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

/// Run f() and return (result, wall seconds).
template <class F>
auto timed(F&& f) {
    Stopwatch sw;
    auto r = f();
    return std::pair{std::move(r), sw.seconds()};
}

inline void inject_latency(double seconds) {
    if (seconds > 0.0)
        std::this_thread::sleep_for(std::chrono::duration<double>(seconds));
}

/// Apply task(i) for i in [0, n_tasks) on `workers` threads. Results are stored
/// by task index, so the output is identical for any worker count. If any task
/// throws, the whole call throws TaskFailure for the lowest failing index and
/// partial results are discarded.
template <class R, class Task>
std::vector<R> parallel_map(std::size_t n_tasks, std::size_t workers, Task&& task) {
    std::vector<R> results(n_tasks);
    if (n_tasks == 0) return results;
    if (workers <= 1 || n_tasks == 1) {
        for (std::size_t i = 0; i < n_tasks; ++i) {
            try {
                results[i] = task(i);
            } catch (const std::exception& e) {
                throw TaskFailure(i, e.what());
            }
        }
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(n_tasks);
    std::atomic<bool> failed{false};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n_tasks) return;
            try {
                results[i] = task(i);
            } catch (...) {
                errors[i] = std::current_exception();
                failed.store(true);
            }
        }
    };

    std::vector<std::thread> pool;
    const std::size_t n_threads = std::min(workers, n_tasks);
    pool.reserve(n_threads);
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    if (failed.load()) {
        for (std::size_t i = 0; i < n_tasks; ++i) {
            if (!errors[i]) continue;
            try {
                std::rethrow_exception(errors[i]);
            } catch (const std::exception& e) {
                throw TaskFailure(i, e.what());
            } catch (...) {
                throw TaskFailure(i, "unknown exception");
            }
        }
    }
    return results;
}

/// Idealized schedule for Nievergelt: all slices run concurrently, then one
/// sequential sweep that receives N-1 endpoint messages and applies N-1 maps.
double modeled_time_nievergelt(const std::vector<double>& per_slice_compute, double latency,
                               double apply_cost);

/// Idealized schedule for parareal with iteration-0 coarse initialization:
/// k fine waves of max duration, (k+1) sequential coarse sweeps, and
/// (2k+1)(N-1) received messages.
double modeled_time_parareal(const std::vector<double>& fine_slice_times, double coarse_per_slice,
                             std::size_t k, std::size_t N, double latency);

} // namespace pint
