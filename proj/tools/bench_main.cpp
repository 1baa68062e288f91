// Serial vs OpenMP lane-kernel benchmark. The per-cycle butterfly loop is
// the hot path of the whole simulator; both policies must agree bit-exactly
// (the unit tests assert that), this tool only measures throughput.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include "fftsim/fft1d_processor.hpp"
#include "fftsim/signal_gen.hpp"
#include "fftsim/simulator.hpp"

using namespace fftsim;

namespace {

struct BenchResult {
    double seconds = 0.0;
    std::uint64_t butterflies = 0;
};

template <typename Kernel>
BenchResult bench_1d(int n, int frames, ExecPolicy policy, Kernel kernel) {
    TwiddleRom<Kernel> rom(n, kernel);
    Fft1dProcessor<Kernel> proc(n, kernel, rom, policy);

    const auto raw = random_vector(n, 99);
    std::vector<typename Kernel::value_type> input;
    input.reserve(raw.size());
    for (const auto& v : raw)
        input.push_back(kernel.from_complex(v));

    const auto t0 = std::chrono::steady_clock::now();
    for (int f = 0; f < frames; ++f)
        proc.run_frame(input);
    const auto t1 = std::chrono::steady_clock::now();

    BenchResult r;
    r.seconds = std::chrono::duration<double>(t1 - t0).count();
    r.butterflies = proc.butterflies_executed();
    return r;
}

void report(const char* label, int n, const BenchResult& serial, const BenchResult& omp) {
    const double s_rate = static_cast<double>(serial.butterflies) / serial.seconds / 1e6;
    const double p_rate = static_cast<double>(omp.butterflies) / omp.seconds / 1e6;
    std::printf("%-12s n=%-6d serial %8.2f Mbfly/s   openmp %8.2f Mbfly/s   speedup %.2fx\n",
                label, n, s_rate, p_rate, serial.seconds / omp.seconds);
}

} // namespace

int main(int argc, char** argv) {
    bool quick = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--quick") == 0)
            quick = true;

#if defined(_OPENMP)
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp: not compiled in, both lanes run serial code\n");
#endif

    const std::vector<int> sizes = quick ? std::vector<int>{64, 256}
                                         : std::vector<int>{256, 1024, 4096};
    for (int n : sizes) {
        // enough frames to spend ~a hundred ms per measurement
        const int frames = quick ? 50 : std::max(20, 1 << 22 >> log2_exact(n));
        report("fixed Q1.15", n,
               bench_1d(n, frames, ExecPolicy::serial, FixedKernel{}),
               bench_1d(n, frames, ExecPolicy::openmp, FixedKernel{}));
        report("exact float", n,
               bench_1d(n, frames, ExecPolicy::serial, FloatKernel{}),
               bench_1d(n, frames, ExecPolicy::openmp, FloatKernel{}));
    }

    // whole-pipeline sanity point: one 2D frame both ways
    {
        const int n = quick ? 16 : 64;
        const Frame2d img = random_frame(n, 7);
        SimConfig serial_cfg;
        serial_cfg.mode = NumericMode::fixed();
        SimConfig omp_cfg = serial_cfg;
        omp_cfg.policy = ExecPolicy::openmp;

        const auto t0 = std::chrono::steady_clock::now();
        const auto a = run_2d(img, serial_cfg);
        const auto t1 = std::chrono::steady_clock::now();
        const auto b = run_2d(img, omp_cfg);
        const auto t2 = std::chrono::steady_clock::now();

        const bool match = a.spectrum.data == b.spectrum.data;
        std::printf("fft2d        n=%-6d serial %8.2f ms        openmp %8.2f ms        results %s\n",
                    n, std::chrono::duration<double, std::milli>(t1 - t0).count(),
                    std::chrono::duration<double, std::milli>(t2 - t1).count(),
                    match ? "identical" : "DIFFER");
        if (!match)
            return 1;
    }
    return 0;
}
