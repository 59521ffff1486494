#ifndef KOSTKA_EXEC_HPP
#define KOSTKA_EXEC_HPP

#include <cstddef>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kostka {

// Execution policy for the data-parallel kernels (omega entries, character
// table cells, K-minus columns). Exec::serial is the reference path; tests
// assert both produce identical bytes.
enum class Exec { serial, parallel };

// Runs fn(i) for i in [0, n). In parallel mode each index writes only its
// own output slot, so assembly order never affects the result. Exceptions
// must not unwind across the worker team; the first one is rethrown after
// the join.
template <typename Fn>
void parallel_for(Exec exec, std::size_t n, Fn&& fn) {
#ifdef _OPENMP
    if (exec == Exec::parallel) {
        std::exception_ptr failure;
        std::mutex failure_mutex;
        #pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            try {
                fn(static_cast<std::size_t>(i));
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
        return;
    }
#else
    (void)exec;
#endif
    for (std::size_t i = 0; i < n; ++i) fn(i);
}

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

inline void set_threads(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

} // namespace kostka

#endif
