#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace orq::par {

// Every kernel comes in an OpenMP flavour and a serial reference flavour.
// Reductions are max-based or per-slot writes, so results are bitwise
// identical across thread counts; tests compare the two flavours directly.

inline bool openmp_enabled() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

template <class F>
double max_reduce_serial(std::size_t n, F&& f) {
    double acc = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
        double v = f(i);
        if (v > acc) acc = v;
    }
    return acc;
}

template <class F>
double max_reduce(std::size_t n, F&& f) {
#ifdef _OPENMP
    double acc = -1.0;
#pragma omp parallel for schedule(dynamic, 8) reduction(max : acc)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
        double v = f(static_cast<std::size_t>(i));
        if (v > acc) acc = v;
    }
    return acc;
#else
    return max_reduce_serial(n, f);
#endif
}

template <class F>
void for_each_index_serial(std::size_t n, F&& f) {
    for (std::size_t i = 0; i < n; ++i) f(i);
}

template <class F>
void for_each_index(std::size_t n, F&& f) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i)
        f(static_cast<std::size_t>(i));
#else
    for_each_index_serial(n, f);
#endif
}

/// Per-slot transform: out[i] = f(i). Slot writes are independent, so the
/// parallel result equals the serial one exactly.
template <class T, class F>
std::vector<T> transform_indexed(std::size_t n, F&& f) {
    std::vector<T> out(n);
    for_each_index(n, [&](std::size_t i) { out[i] = f(i); });
    return out;
}

template <class T, class F>
std::vector<T> transform_indexed_serial(std::size_t n, F&& f) {
    std::vector<T> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
}

}  // namespace orq::par
