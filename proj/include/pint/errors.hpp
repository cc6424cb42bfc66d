#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pint {

/// Implicit backward-Euler equation has no real root (step crossed a blow-up).
struct NoRealRoot : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Implicit or direct linear solve hit a (numerically) singular matrix.
struct SingularSystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Grid parameters are inconsistent (non-integer 1/dx, bad point counts, ...).
struct BadGrid : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Slice width is not an integer multiple of the step within tolerance.
struct NonIntegerStepCount : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DuplicateNodes : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Least-squares design matrix is rank deficient.
struct RankDeficient : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A task submitted to parallel_map threw; carries the failing task index.
struct TaskFailure : std::runtime_error {
    std::size_t task_index;
    TaskFailure(std::size_t index, const std::string& what)
        : std::runtime_error("task " + std::to_string(index) + ": " + what), task_index(index) {}
};

} // namespace pint
