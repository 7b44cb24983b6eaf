#pragma once

#include <exception>
#include <limits>

namespace trip {

// Sweeps run either as plain loops (the reference) or as OpenMP loops.
// Both paths produce identical, order-stable results.
enum class Exec { Serial, Parallel };

// body(i) for i in [0, n). An exception escaping an OpenMP region would terminate the process,
// so the parallel path stores the one from the lowest index and rethrows it after the loop,
// which is the exception the serial path would have thrown.
template <class F>
void for_each_index(long n, Exec exec, long chunk, F&& body) {
    if (exec == Exec::Serial) {
        for (long i = 0; i < n; ++i) body(i);
        return;
    }
    std::exception_ptr first;
    long first_at = std::numeric_limits<long>::max();
#pragma omp parallel for schedule(dynamic, chunk)
    for (long i = 0; i < n; ++i) {
        try {
            body(i);
        } catch (...) {
#pragma omp critical(trip_for_each_index)
            if (i < first_at) {
                first_at = i;
                first = std::current_exception();
            }
        }
    }
    if (first) std::rethrow_exception(first);
}

}  // namespace trip
