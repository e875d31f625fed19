#include "bergman/parallel.hpp"

#include <atomic>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bergman::par {

namespace {
std::atomic<bool> g_parallel{true};
}

bool parallel_enabled() {
#ifdef _OPENMP
    return g_parallel.load(std::memory_order_relaxed);
#else
    return false;
#endif
}

void set_parallel_enabled(bool on) { g_parallel.store(on, std::memory_order_relaxed); }

ScopedSerial::ScopedSerial() : previous_(g_parallel.load(std::memory_order_relaxed)) {
    set_parallel_enabled(false);
}

ScopedSerial::~ScopedSerial() { set_parallel_enabled(previous_); }

namespace {

// Reduction is always in index order; only the fill may be parallel.
template <typename T>
T buffered_sum(std::size_t n, const std::function<T(std::size_t)>& term, bool parallel) {
    if (n == 0) return T{};
    std::vector<T> buf(n);
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            buf[static_cast<std::size_t>(i)] = term(static_cast<std::size_t>(i));
#else
        for (std::size_t i = 0; i < n; ++i) buf[i] = term(i);
#endif
    } else {
        for (std::size_t i = 0; i < n; ++i) buf[i] = term(i);
    }
    T sum{};
    for (std::size_t i = 0; i < n; ++i) sum += buf[i];
    return sum;
}

} // namespace

double indexed_sum(std::size_t n, const std::function<double(std::size_t)>& term) {
    return buffered_sum<double>(n, term, parallel_enabled());
}

std::complex<double> indexed_sum_complex(
    std::size_t n, const std::function<std::complex<double>(std::size_t)>& term) {
    return buffered_sum<std::complex<double>>(n, term, parallel_enabled());
}

double indexed_sum_serial(std::size_t n, const std::function<double(std::size_t)>& term) {
    return buffered_sum<double>(n, term, false);
}

std::complex<double> indexed_sum_complex_serial(
    std::size_t n, const std::function<std::complex<double>(std::size_t)>& term) {
    return buffered_sum<std::complex<double>>(n, term, false);
}

} // namespace bergman::par
