#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>

#include "fftsim/frame_io.hpp"
#include "fftsim/trace_io.hpp"

using namespace fftsim;
namespace fs = std::filesystem;

namespace {

struct CliRun {
    int exit_code = -1;
    std::string out;
};

fs::path scratch_dir() {
    static const fs::path dir = [] {
        fs::path p = fs::temp_directory_path() /
                     ("fftsim_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

CliRun run_cli(const std::string& args) {
    const fs::path log = scratch_dir() / "last_run.log";
    const std::string cmd =
        std::string(FFTSIM_CLI_PATH) + " " + args + " > " + log.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    CliRun r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(log);
    std::ostringstream buf;
    buf << in.rdbuf();
    r.out = buf.str();
    return r;
}

std::string make_impulse_csv(int n, const char* amplitude = "1") {
    const fs::path p = scratch_dir() /
                       ("impulse" + std::to_string(n) + "_" + amplitude + ".csv");
    std::ofstream out(p);
    out << n << "\n" << amplitude << ",0\n";
    for (int i = 1; i < n * n; ++i)
        out << "0,0\n";
    return p.string();
}

} // namespace

TEST_CASE("cli fft2d: impulse frame gives the all-ones spectrum") {
    const std::string input = make_impulse_csv(8);
    const fs::path spec = scratch_dir() / "impulse_spec.csv";
    const auto r = run_cli("fft2d --input " + input + " --mode float --output " + spec.string());
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("cycles: 48") != std::string::npos);
    CHECK(r.out.find("spectrum_written:") != std::string::npos);

    const Frame2d f = load_frame({spec, InputFormat::csv_complex, Normalize::raw});
    REQUIRE(f.n == 8);
    for (const auto& v : f.data) {
        CHECK(v.real() == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(v.imag() == doctest::Approx(0.0).epsilon(1e-9));
    }
}

TEST_CASE("cli fft2d: fixed mode reports the overflow flag") {
    // amplitude 0.5 keeps the impulse inside Q1.15
    const std::string input = make_impulse_csv(8, "0.5");
    const fs::path spec = scratch_dir() / "q15_spec.csv";
    const auto r = run_cli("fft2d --input " + input + " --output " + spec.string());
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("overflow_flag:") != std::string::npos);
}

TEST_CASE("cli fft2d: fixed mode rejects out-of-range samples") {
    const std::string input = make_impulse_csv(8); // amplitude 1.0 exceeds Q1.15
    const auto r = run_cli("fft2d --input " + input + " --output /tmp/ignored_q15.csv");
    CHECK(r.exit_code != 0);
    CHECK(r.out.find("outside the fixed-point range") != std::string::npos);
}

TEST_CASE("cli fft2d: missing input file fails with an error") {
    const auto r = run_cli("fft2d --input /nonexistent/input.pgm --output /tmp/ignored.csv");
    CHECK(r.exit_code != 0);
    CHECK(r.out.find("error:") != std::string::npos);
}

TEST_CASE("cli fft1d runs a generated vector") {
    const fs::path out = scratch_dir() / "vec_out.csv";
    const auto r = run_cli("fft1d --n 16 --seed 5 --mode float --output " + out.string());
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("cycles: 4") != std::string::npos);
    const auto v = load_vector_csv(out);
    CHECK(v.size() == 16);
}

TEST_CASE("cli verify: float passes, n=6 is a config error") {
    auto r = run_cli("verify --n 8 --mode float --seed 3 --trials 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("verify: PASS") != std::string::npos);

    r = run_cli("verify --n 6 --mode float --seed 3");
    CHECK(r.exit_code != 0);
    CHECK(r.out.find("power of two") != std::string::npos);
}

TEST_CASE("cli verify: fixed mode prints SNR against the threshold") {
    auto r = run_cli("verify --n 8 --seed 3 --trials 5 --jobs 2");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("worst_snr_db:") != std::string::npos);
    CHECK(r.out.find("snr_threshold_db: 60") != std::string::npos);

    // an absurd threshold must flip the exit code, not the metrics
    r = run_cli("verify --n 8 --seed 3 --trials 5 --snr-threshold 10000");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("verify: FAIL") != std::string::npos);
}

TEST_CASE("cli trace: done pulses and sel toggles for streams") {
    const fs::path trace1 = scratch_dir() / "t1.csv";
    auto r = run_cli("trace --n 8 --frames 1 --trace-out " + trace1.string());
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("blk1_done_pulses: 8") != std::string::npos);

    const auto rows = read_trace_csv(trace1);
    const TraceSummary s = summarize_trace(rows);
    CHECK(s.blk1_done_pulses == 8);
    CHECK(s.blk2_done_pulses == 8);

    const fs::path trace2 = scratch_dir() / "t2.csv";
    r = run_cli("trace --n 8 --frames 2 --trace-out " + trace2.string());
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("sel_toggles: 2") != std::string::npos);

    // n=2 has a single stage, so SB stays 0 everywhere
    const fs::path trace3 = scratch_dir() / "t3.csv";
    r = run_cli("trace --n 2 --frames 1 --trace-out " + trace3.string());
    REQUIRE(r.exit_code == 0);
    for (const SystemTraceRow& row : read_trace_csv(trace3)) {
        CHECK(row.block1.stage == 0);
        CHECK(row.block2.stage == 0);
    }
}

TEST_CASE("cli resources: json report and sweep csv") {
    auto r = run_cli("resources --n 8");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("\"reduction_factor\"") != std::string::npos);
    CHECK(r.out.find("\"den\": 3") != std::string::npos);

    r = run_cli("resources --sweep 8,16,32");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("n,proposed_bu") != std::string::npos);
    CHECK(r.out.find("8,8,8,16,24,24,48,1,3,") != std::string::npos);

    r = run_cli("resources");
    CHECK(r.exit_code != 0);
}

TEST_CASE("cli: seed env fallback is honored") {
    const fs::path a = scratch_dir() / "env_a.csv";
    const fs::path b = scratch_dir() / "env_b.csv";
    ::setenv("FFTSIM_SEED", "777", 1);
    auto r1 = run_cli("fft1d --n 8 --mode float --output " + a.string());
    ::unsetenv("FFTSIM_SEED");
    auto r2 = run_cli("fft1d --n 8 --seed 777 --mode float --output " + b.string());
    REQUIRE(r1.exit_code == 0);
    REQUIRE(r2.exit_code == 0);
    const auto va = load_vector_csv(a);
    const auto vb = load_vector_csv(b);
    REQUIRE(va.size() == vb.size());
    for (std::size_t i = 0; i < va.size(); ++i)
        CHECK(va[i] == vb[i]);
}
