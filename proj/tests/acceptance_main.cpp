// Acceptance suite for the 2D FFT processor simulator. Each criterion
// prints exactly one PASS/FAIL line; the binary exits nonzero if any
// criterion fails. Thresholds are pinned here, not configurable.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <limits>
#include <string>
#include <vector>

#include "fftsim/dft_reference.hpp"
#include "fftsim/frame_io.hpp"
#include "fftsim/resource_model.hpp"
#include "fftsim/signal_gen.hpp"
#include "fftsim/simulator.hpp"
#include "fftsim/trace_io.hpp"

using namespace fftsim;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
    if (!pass)
        ++g_failures;
}

// 1. Butterfly/multiplier/adder formulas and the reduction factor, exact.
void criterion_1() {
    bool ok = true;
    std::string detail = "resource formulas exact for N in {8,16,64,1024}";
    for (int n : {8, 16, 64, 1024}) {
        const std::int64_t stages = log2_exact(n);
        const auto p2 = resources(n, Design::proposed, Scope::fft2d);
        const auto t2 = resources(n, Design::traditional, Scope::fft2d);
        const auto p1 = resources(n, Design::proposed, Scope::fft1d);
        const auto t1 = resources(n, Design::traditional, Scope::fft1d);
        ok = ok && p2.butterfly_units == n && p2.multipliers == n && p2.adders == 2 * n;
        ok = ok && t2.butterfly_units == n * stages && t2.multipliers == n * stages &&
             t2.adders == 2 * n * stages;
        ok = ok && p1.butterfly_units == n / 2 && t1.butterfly_units == (n / 2) * stages;
        ok = ok && reduction_factor(n) == Fraction{1, static_cast<std::int64_t>(stages)};
        ok = ok && p2.butterfly_units * stages == t2.butterfly_units;
    }
    ok = ok && reduction_factor(8) == Fraction{1, 3} && reduction_factor(1024) == Fraction{1, 10};
    report(1, ok, detail);
}

// 2. The machine instantiates exactly the model's lane count.
void criterion_2() {
    bool ok = true;
    for (int n = 2; n <= 1024; n *= 2)
        ok = ok && instantiated_lane_count(n) == n / 2 &&
             instantiated_lane_count(n) ==
                 resources(n, Design::proposed, Scope::fft1d).butterfly_units;
    report(2, ok, "instantiated butterfly lanes equal N/2 for N in {2..1024}");
}

// 3. 1D oracle equivalence: 100 seeded vectors per length, <= 1e-9 relative.
void criterion_3() {
    bool ok = true;
    double worst = 0.0;
    SimConfig cfg;
    cfg.mode = NumericMode::exact_float();
    for (int n : {2, 4, 8, 16, 32, 64}) {
        for (int t = 0; t < 100; ++t) {
            const auto x = random_vector(n, 1000 + static_cast<std::uint64_t>(t));
            const auto sim = run_1d(x, cfg);
            const auto ref = dft_oracle(x);
            const double rel = relative_error(sim.output, ref, 1.0);
            worst = std::max(worst, rel);
            ok = ok && rel <= 1e-9;
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "1D exact-float vs direct sum, 100 vectors x N in {2..64}, worst rel %.3g",
                  worst);
    report(3, ok, buf);
}

// 4. 2D oracle equivalence: 20 seeded frames per size vs the O(N^4) sum.
void criterion_4() {
    bool ok = true;
    double worst = 0.0;
    SimConfig cfg;
    cfg.mode = NumericMode::exact_float();
    for (int n : {4, 8, 16}) {
        for (int t = 0; t < 20; ++t) {
            const Frame2d img = random_frame(n, 2000 + static_cast<std::uint64_t>(t));
            const auto res = run_2d(img, cfg);
            const Frame2d ref = dft2d_oracle(img);
            const double rel = relative_error(res.spectrum.data, ref.data, 1.0);
            worst = std::max(worst, rel);
            ok = ok && rel <= 1e-9;
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "2D exact-float vs direct double sum, 20 frames x N in {4,8,16}, worst rel %.3g",
                  worst);
    report(4, ok, buf);
}

// 5. Q1.15 quality: SNR of the scaled 8x8 transform at or above 60 dB.
void criterion_5() {
    bool ok = true;
    double worst = std::numeric_limits<double>::infinity();
    SimConfig cfg;
    cfg.mode = NumericMode::fixed();
    const int n = 8;
    for (int t = 0; t < 20; ++t) {
        const Frame2d img = random_frame(n, 3000 + static_cast<std::uint64_t>(t));
        const auto res = run_2d(img, cfg);
        const Frame2d ref = dft2d_oracle(img);
        const ErrorMetrics m = compare(res.spectrum, ref, cfg.output_scale_2d(n));
        worst = std::min(worst, m.snr_db);
        ok = ok && m.snr_db >= 60.0;
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "Q1.15 8x8 SNR vs 1/N^2-scaled oracle, worst %.2f dB (>= 60)",
                  worst);
    report(5, ok, buf);
}

// 6. Fig-7-style control behavior for N=8, checked from the emitted CSV.
// Row frames are the 3-cycle windows ending at each blk1 DONE pulse.
void criterion_6() {
    const int n = 8;
    SimConfig cfg;
    cfg.mode = NumericMode::fixed();
    const auto res = run_2d(random_frame(n, 41), cfg);

    const std::filesystem::path path =
        std::filesystem::temp_directory_path() / "fftsim_acceptance_trace6.csv";
    write_trace_csv(res.trace, path);
    const auto rows = read_trace_csv(path);
    std::filesystem::remove(path);

    bool ok = rows.size() == res.trace.size();

    std::vector<std::size_t> done_at;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].block1.done)
            done_at.push_back(i);
    ok = ok && static_cast<int>(done_at.size()) == n; // one row frame per image row

    std::vector<bool> in_frame(rows.size(), false);
    for (std::size_t end : done_at) {
        ok = ok && end >= 2;
        if (end < 2) break;
        for (int s = 0; s < 3; ++s) { // each row frame takes exactly 3 stage-cycles
            const ControlState& c = rows[end - 2 + static_cast<std::size_t>(s)].block1;
            in_frame[end - 2 + static_cast<std::size_t>(s)] = true;
            ok = ok && c.stage == s;            // SB counts 0,1,2
            ok = ok && c.isl == (s != 0);       // ISL low only at stage 0
            ok = ok && c.osl == (s == 2);       // OSL high exactly at stage 2
            ok = ok && c.done == c.osl;
        }
    }
    // outside row frames block 1 is idle with all lines low
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (in_frame[i]) continue;
        const ControlState& c = rows[i].block1;
        ok = ok && c.stage == 0 && !c.isl && !c.osl && !c.done;
    }

    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "N=8 rows take 3 stage-cycles, SB 0,1,2, ISL low only at stage 0, "
                  "OSL=DONE at stage 2 (%zu row frames)",
                  done_at.size());
    report(6, ok, buf);
}

// 7. RAM controller conformance over a 3-frame stream.
void criterion_7() {
    const int n = 8;
    SimConfig cfg;
    cfg.mode = NumericMode::fixed();
    std::vector<Frame2d> frames;
    for (int f = 0; f < 3; ++f)
        frames.push_back(random_frame(n, 5000 + static_cast<std::uint64_t>(f)));
    const auto res = run_stream(frames, cfg);

    const std::filesystem::path path =
        std::filesystem::temp_directory_path() / "fftsim_acceptance_trace7.csv";
    write_trace_csv(res.trace, path);
    const auto rows = read_trace_csv(path);
    std::filesystem::remove(path);

    bool ok = !rows.empty() && rows.front().sel == 0;

    // toggle sequence: 0 -> 1 -> 0 -> 1 at the three both-banks-complete
    // boundaries of a 3-frame stream
    std::vector<int> seq{rows.front().sel};
    std::vector<std::size_t> boundaries{0};
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].sel != rows[i - 1].sel) {
            seq.push_back(rows[i].sel);
            boundaries.push_back(i);
        }
    }
    boundaries.push_back(rows.size());
    ok = ok && seq == std::vector<int>{0, 1, 0, 1};

    // boundaries sit exactly at frame-period multiples
    const std::uint64_t period = static_cast<std::uint64_t>(n) * 3;
    for (std::size_t i = 1; i + 1 < boundaries.size(); ++i)
        ok = ok && rows[boundaries[i]].cycle % period == 0;

    // Per sel window, every write (blk1 DONE) targets the sel bank and
    // every read (blk2 frame) pulls from the other one, so a window whose
    // access counts match the expected fill/steady/drain pattern never
    // had a bank on both sides of a cycle. Expected per window of a
    // 3-frame stream: writes n,n,n,0 and column reads 0,n,n,n.
    const std::vector<std::uint64_t> want_writes{8, 8, 8, 0};
    const std::vector<std::uint64_t> want_reads{0, 8, 8, 8};
    ok = ok && boundaries.size() == 5; // 4 windows
    for (std::size_t w = 0; w + 1 < boundaries.size() && w < 4; ++w) {
        std::uint64_t writes = 0;
        std::uint64_t reads = 0;
        for (std::size_t i = boundaries[w]; i < boundaries[w + 1]; ++i) {
            if (rows[i].block1.done) ++writes;
            if (rows[i].block2.done) ++reads; // one DONE per column frame
        }
        ok = ok && writes == want_writes[w] && reads == want_reads[w];
    }

    report(7, ok, "sel starts 0, toggles 0->1->0->1 at both-complete boundaries, "
                  "window access counts match fill/steady/drain");
}

// 8. Steady-state throughput: (k+1) frame periods for k frames.
void criterion_8() {
    const int n = 8;
    const int k = 10;
    SimConfig cfg;
    cfg.mode = NumericMode::fixed();
    std::vector<Frame2d> frames;
    for (int f = 0; f < k; ++f)
        frames.push_back(random_frame(n, 6000 + static_cast<std::uint64_t>(f)));
    const auto res = run_stream(frames, cfg);

    const std::uint64_t period = static_cast<std::uint64_t>(n) * 3;
    const std::uint64_t expected = static_cast<std::uint64_t>(k + 1) * period;
    const bool ok = res.cycles + period >= expected && res.cycles <= expected + period;
    char buf[160];
    std::snprintf(buf, sizeof buf, "N=8, k=10 stream runs %llu cycles (expected %llu +/- %llu)",
                  static_cast<unsigned long long>(res.cycles),
                  static_cast<unsigned long long>(expected),
                  static_cast<unsigned long long>(period));
    report(8, ok, buf);
}

} // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();

    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    std::printf("SKIP criterion 9: device-level utilization/delay/power need vendor synthesis; "
                "covered at formula level by criteria 1-2 and behavior level by 6-8\n");

    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s (%d/8 criteria passed, %.2f s)\n", g_failures == 0 ? "SUCCESS" : "FAILURE",
                8 - g_failures, secs);
    return g_failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
