#pragma once

#include <cstddef>

namespace lhom {

/// Serial is the reference path; Parallel distributes iterations over
/// OpenMP threads. Bodies must write only to their own slot, so both
/// modes produce identical results (asserted in tests, compared in the
/// bench tool).
enum class ExecMode { Serial, Parallel };

template <class F>
void for_each_index(std::size_t n, ExecMode mode, F&& body) {
#ifdef _OPENMP
    if (mode == ExecMode::Parallel) {
        #pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            body(static_cast<std::size_t>(i));
        return;
    }
#else
    (void)mode;
#endif
    for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace lhom
