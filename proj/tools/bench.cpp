// Compares the OpenMP kernels against their serial references on a large
// Fibonacci prefix: index construction, recurrence profile, power-free scan.
#include <chrono>
#include <cstdlib>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "wordlab/factor_index.hpp"
#include "wordlab/word_models.hpp"

using namespace wordlab;
using Clock = std::chrono::steady_clock;

static double secs(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

int main(int argc, char** argv) {
    size_t L = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 200000;
    size_t n_max = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 64;

#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (OpenMP disabled)\n";
#endif

    WordSpec fib{2, SturmianSpec{{}, {1}}};
    auto t0 = Clock::now();
    Word w = prefix(fib, L);
    auto t1 = Clock::now();
    FactorIndex index(std::move(w));
    auto t2 = Clock::now();
    std::cout << "prefix L=" << L << ": " << secs(t0, t1) << " s\n";
    std::cout << "build_index: " << secs(t1, t2) << " s\n";

    auto t3 = Clock::now();
    auto serial = index.recurrence_profile_serial(n_max);
    auto t4 = Clock::now();
    auto parallel = index.recurrence_profile(n_max);
    auto t5 = Clock::now();
    if (serial != parallel) {
        std::cerr << "MISMATCH: recurrence profiles disagree\n";
        return 1;
    }
    std::cout << "recurrence_profile n<=" << n_max << " serial: " << secs(t3, t4)
              << " s, parallel: " << secs(t4, t5) << " s\n";

    auto t6 = Clock::now();
    auto pf_serial = index.is_power_free_serial(4, 200);
    auto t7 = Clock::now();
    auto pf_parallel = index.is_power_free(4, 200);
    auto t8 = Clock::now();
    if (pf_serial.free != pf_parallel.free || pf_serial.witness != pf_parallel.witness) {
        std::cerr << "MISMATCH: power-free scans disagree\n";
        return 1;
    }
    std::cout << "power_free r=4 max-root=200 serial: " << secs(t6, t7)
              << " s, parallel: " << secs(t7, t8) << " s\n";
    return 0;
}
