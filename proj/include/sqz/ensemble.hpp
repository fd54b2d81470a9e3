#pragma once

#include <cstddef>
#include <exception>
#include <utility>

namespace sqz {

// Runs body(i) for i in [0, n), optionally OpenMP-parallel. Results must be
// written to preallocated per-index slots so serial and parallel runs are
// bit-identical. The first exception is rethrown after the loop.
template <class F>
void for_each_trajectory(std::size_t n, bool parallel, F&& body) {
    std::exception_ptr err;
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
            try {
                body(static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical
                if (!err) err = std::current_exception();
            }
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            try {
                body(i);
            } catch (...) {
                if (!err) err = std::current_exception();
            }
        }
    }
    if (err) std::rethrow_exception(err);
}

}  // namespace sqz
