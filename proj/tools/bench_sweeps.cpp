// Timing comparison between the parallel frequency-sweep kernels and their
// serial reference implementations.

#include <chrono>
#include <cstdio>
#include <vector>

#include "qpkg/resonance.hpp"
#include "qpkg/tline.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

template <typename F>
double time_ms(F&& fn, int reps) {
    const auto t0 = clock_type::now();
    for (int i = 0; i < reps; ++i) fn();
    const auto t1 = clock_type::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main() {
    const int npts = 200000;
    std::vector<double> freqs(npts);
    for (int i = 0; i < npts; ++i) freqs[i] = 1e9 + 9e9 * i / (npts - 1);

    std::vector<qpkg::NetworkElement> chain;
    for (int i = 0; i < 8; ++i) {
        chain.push_back(qpkg::Line{50.0, 6.25, 2e-3, 0.1});
        chain.push_back(qpkg::SeriesInductor{40e-12});
        chain.push_back(qpkg::ShuntCapacitor{15e-15});
    }

    const int reps = 5;
    const double cascade_serial_ms =
        time_ms([&] { qpkg::cascade_serial(chain, freqs, 50.0); }, reps);
    const double cascade_parallel_ms = time_ms([&] { qpkg::cascade(chain, freqs, 50.0); }, reps);

    qpkg::NotchParams notch{6e9, 2e5, 1e5, 0.1};
    const double notch_serial_ms =
        time_ms([&] { qpkg::simulate_notch_serial(notch, freqs); }, reps);
    const double notch_parallel_ms = time_ms([&] { qpkg::simulate_notch(notch, freqs); }, reps);

    std::printf("%-16s %12s %12s %8s\n", "kernel", "serial ms", "parallel ms", "speedup");
    std::printf("%-16s %12.2f %12.2f %7.2fx\n", "cascade", cascade_serial_ms, cascade_parallel_ms,
                cascade_serial_ms / cascade_parallel_ms);
    std::printf("%-16s %12.2f %12.2f %7.2fx\n", "notch", notch_serial_ms, notch_parallel_ms,
                notch_serial_ms / notch_parallel_ms);
    return 0;
}
