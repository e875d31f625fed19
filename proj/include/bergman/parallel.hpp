#pragma once

#include <complex>
#include <cstddef>
#include <functional>

namespace bergman::par {

/// Returns true if the OpenMP path is compiled in and enabled at runtime.
bool parallel_enabled();

/// Globally enable/disable the OpenMP kernels (serial reference otherwise).
void set_parallel_enabled(bool on);

/// RAII override of the parallel switch, for tests and benchmarks.
class ScopedSerial {
public:
    ScopedSerial();
    ~ScopedSerial();
    ScopedSerial(const ScopedSerial&) = delete;
    ScopedSerial& operator=(const ScopedSerial&) = delete;

private:
    bool previous_;
};

// Sum of term(i) for i in [0, n).
//
// The parallel path evaluates terms out of order into a buffer indexed by i
// and then reduces in index order, so the result is bit-identical to the
// serial reference regardless of thread count. Terms are expected to be
// coarse (a panel or cell integral each), not single flops.
double indexed_sum(std::size_t n, const std::function<double(std::size_t)>& term);
std::complex<double> indexed_sum_complex(
    std::size_t n, const std::function<std::complex<double>(std::size_t)>& term);

/// Serial reference implementations (always run on one thread).
double indexed_sum_serial(std::size_t n, const std::function<double(std::size_t)>& term);
std::complex<double> indexed_sum_complex_serial(
    std::size_t n, const std::function<std::complex<double>(std::size_t)>& term);

} // namespace bergman::par
