#include <CLI11.hpp>

#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include "fftsim/dft_reference.hpp"
#include "fftsim/frame_io.hpp"
#include "fftsim/resource_model.hpp"
#include "fftsim/signal_gen.hpp"
#include "fftsim/simulator.hpp"
#include "fftsim/trace_io.hpp"
#include "fftsim/util.hpp"

namespace {

using namespace fftsim;

struct CommonOpts {
    std::string mode = "fixed";
    int width = 16;
    int frac = 15;
    bool no_scaling = false;
    std::uint64_t seed = 1;
    int jobs = 1;
};

SimConfig make_config(const CommonOpts& o) {
    SimConfig cfg;
    cfg.mode = o.mode == "float" ? NumericMode::exact_float()
                                 : NumericMode::fixed(FxFormat::make(o.width, o.frac));
    if (o.no_scaling)
        cfg.scaling = false;
    return cfg;
}

void add_mode_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--mode", o.mode, "Arithmetic mode: fixed or float")
        ->check(CLI::IsMember({"fixed", "float"}))
        ->capture_default_str();
    cmd->add_option("--width", o.width, "Fixed-point word width in bits")
        ->capture_default_str();
    cmd->add_option("--frac", o.frac, "Fixed-point fractional bits")->capture_default_str();
    cmd->add_flag("--no-scaling", o.no_scaling,
                  "Disable the per-stage scale-by-half (fixed mode scales by default)");
}

void add_seed_flag(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--seed", o.seed, "Seed for generated inputs")
        ->envname("FFTSIM_SEED")
        ->capture_default_str();
}

InputFormat parse_format(const std::string& fmt, const std::string& path) {
    if (fmt == "pgm") return InputFormat::pgm;
    if (fmt == "csv") return InputFormat::csv_complex;
    // infer from the extension when not forced
    const auto dot = path.rfind('.');
    const std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    if (ext == "pgm") return InputFormat::pgm;
    if (ext == "csv") return InputFormat::csv_complex;
    throw ConfigError("cli: cannot infer input format of '" + path +
                      "'; pass --format pgm|csv");
}

void print_overflow(const SimConfig& cfg, bool overflow) {
    if (cfg.mode.is_fixed())
        std::cout << "overflow_flag: " << (overflow ? "set" : "clear") << "\n";
}

int cmd_fft2d(const CommonOpts& o, const std::string& input, const std::string& format,
              const std::string& normalize, const std::string& output,
              const std::string& layout, const std::string& trace_out) {
    const SimConfig cfg = make_config(o);
    InputSpec spec;
    spec.path = input;
    spec.format = parse_format(format, input);
    spec.normalize = normalize == "raw" ? Normalize::raw : Normalize::unit_range;

    const Frame2d image = load_frame(spec);
    const auto res = run_2d(image, cfg);

    const int stages = log2_exact(image.n);
    std::cout << "n: " << image.n << "\n"
              << "cycles: " << res.cycles << "\n"
              << "frame_latency_cycles: " << res.cycles << "\n"
              << "frame_period_cycles: " << static_cast<std::uint64_t>(image.n) * stages << "\n";
    print_overflow(cfg, res.overflow);

    store_spectrum(res.spectrum, output,
                   layout == "mag" ? SpectrumLayout::magnitude_csv
                                   : SpectrumLayout::real_imag_csv);
    std::cout << "spectrum_written: " << output << "\n";
    if (!trace_out.empty()) {
        write_trace_csv(res.trace, trace_out);
        std::cout << "trace_written: " << trace_out << "\n";
    }
    return 0;
}

int cmd_fft1d(const CommonOpts& o, int n, const std::string& input,
              const std::string& output) {
    const SimConfig cfg = make_config(o);
    std::vector<std::complex<double>> x;
    if (!input.empty()) {
        x = load_vector_csv(input);
    } else {
        if (n <= 0)
            throw ConfigError("cli: fft1d needs --input or --n");
        require_fft_length(n, "cli");
        x = random_vector(n, o.seed);
    }
    const auto res = run_1d(x, cfg);
    std::cout << "n: " << x.size() << "\n"
              << "cycles: " << res.trace.size() << "\n";
    print_overflow(cfg, res.overflow);
    if (!output.empty()) {
        store_vector_csv(res.output, output);
        std::cout << "output_written: " << output << "\n";
    }
    return 0;
}

int cmd_verify(const CommonOpts& o, int n, int trials, double snr_threshold) {
    require_fft_length(n, "cli");
    const SimConfig cfg = make_config(o);
    const double scale = cfg.output_scale_2d(n);

    std::vector<ErrorMetrics> metrics(static_cast<std::size_t>(trials));
    std::vector<double> rel(static_cast<std::size_t>(trials), 0.0);
    std::vector<std::string> failures(static_cast<std::size_t>(trials));

#if defined(_OPENMP)
    if (o.jobs > 1)
        omp_set_num_threads(o.jobs);
#pragma omp parallel for schedule(dynamic) if (o.jobs > 1)
#endif
    for (int t = 0; t < trials; ++t) {
        try {
            const Frame2d img = random_frame(n, o.seed + static_cast<std::uint64_t>(t));
            const auto res = run_2d(img, cfg);
            const Frame2d ref = dft2d_oracle(img);
            metrics[static_cast<std::size_t>(t)] = compare(res.spectrum, ref, scale);
            rel[static_cast<std::size_t>(t)] = relative_error(res.spectrum.data, ref.data, scale);
        } catch (const std::exception& e) {
            failures[static_cast<std::size_t>(t)] = e.what();
        }
    }
    for (const std::string& f : failures)
        if (!f.empty())
            throw SimError(f);

    double worst_rel = 0.0;
    double worst_snr = std::numeric_limits<double>::infinity();
    double worst_max_abs = 0.0;
    for (int t = 0; t < trials; ++t) {
        worst_rel = std::max(worst_rel, rel[static_cast<std::size_t>(t)]);
        worst_snr = std::min(worst_snr, metrics[static_cast<std::size_t>(t)].snr_db);
        worst_max_abs = std::max(worst_max_abs, metrics[static_cast<std::size_t>(t)].max_abs);
    }

    std::cout << "n: " << n << "\ntrials: " << trials << "\nmode: " << o.mode << "\n";
    std::cout << "worst_max_abs: " << worst_max_abs << "\n";
    std::cout << "worst_rel_error: " << worst_rel << "\n";
    std::cout << "worst_snr_db: " << worst_snr << "\n";

    bool pass = false;
    if (cfg.mode.is_fixed()) {
        std::cout << "snr_threshold_db: " << snr_threshold << "\n";
        pass = worst_snr >= snr_threshold;
    } else {
        std::cout << "rel_threshold: 1e-09\n";
        pass = worst_rel <= 1e-9;
    }
    std::cout << (pass ? "verify: PASS" : "verify: FAIL") << "\n";
    return pass ? 0 : 1;
}

int cmd_trace(const CommonOpts& o, int n, int frames, const std::string& trace_out) {
    require_fft_length(n, "cli");
    if (frames < 1)
        throw ConfigError("cli: --frames must be >= 1");
    const SimConfig cfg = make_config(o);

    std::vector<Frame2d> stream;
    stream.reserve(static_cast<std::size_t>(frames));
    for (int f = 0; f < frames; ++f)
        stream.push_back(random_frame(n, o.seed + static_cast<std::uint64_t>(f)));

    const auto res = run_stream(stream, cfg);
    write_trace_csv(res.trace, trace_out);

    const TraceSummary s = summarize_trace(res.trace);
    std::cout << "n: " << n << "\n"
              << "frames: " << frames << "\n"
              << "cycles: " << s.cycles << "\n"
              << "sel_toggles: " << s.sel_toggles << "\n"
              << "blk1_done_pulses: " << s.blk1_done_pulses << "\n"
              << "blk2_done_pulses: " << s.blk2_done_pulses << "\n"
              << "trace_written: " << trace_out << "\n";
    print_overflow(cfg, res.overflow);
    return 0;
}

int cmd_resources(int n, const std::string& sweep, const std::string& output) {
    if (n <= 0 && sweep.empty())
        throw ConfigError("cli: resources needs --n or --sweep");

    std::string text;
    if (!sweep.empty()) {
        std::vector<int> values;
        std::size_t pos = 0;
        while (pos <= sweep.size()) {
            const std::size_t next = sweep.find(',', pos);
            const std::string tok =
                sweep.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
            try {
                values.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw ConfigError("cli: malformed --sweep entry '" + tok + "'");
            }
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        text = sweep_to_csv(sweep_report(values));
    } else {
        text = resources_to_json(n) + "\n";
    }

    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output, std::ios::binary);
        if (!out)
            throw IoError("cli: cannot write '" + output + "'");
        out << text;
        std::cout << "report_written: " << output << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cycle-accurate 2D radix-2 FFT processor simulator"};
    app.require_subcommand(1);

    CommonOpts o;

    // fft2d
    auto* fft2d_cmd = app.add_subcommand("fft2d", "Transform one frame through the 2D pipeline");
    std::string input;
    std::string format = "auto";
    std::string normalize = "unit";
    std::string output;
    std::string layout = "reim";
    std::string trace_out;
    fft2d_cmd->add_option("--input", input, "Input frame (PGM or complex CSV)")->required();
    fft2d_cmd->add_option("--format", format, "Input format: pgm or csv (default: by extension)")
        ->check(CLI::IsMember({"pgm", "csv", "auto"}));
    fft2d_cmd->add_option("--normalize", normalize, "PGM mapping: unit (p/max - 0.5) or raw")
        ->check(CLI::IsMember({"unit", "raw"}));
    fft2d_cmd->add_option("--output", output, "Spectrum CSV path")->required();
    fft2d_cmd->add_option("--layout", layout, "Spectrum layout: reim or mag")
        ->check(CLI::IsMember({"reim", "mag"}));
    fft2d_cmd->add_option("--trace-out", trace_out, "Also write the cycle trace CSV");
    add_mode_flags(fft2d_cmd, o);

    // fft1d
    auto* fft1d_cmd = app.add_subcommand("fft1d", "Run one 1D frame through a single block");
    int n1 = 0;
    std::string input1;
    std::string output1;
    fft1d_cmd->add_option("--n", n1, "Length for a generated random input");
    fft1d_cmd->add_option("--input", input1, "Complex CSV input vector");
    fft1d_cmd->add_option("--output", output1, "Output CSV path");
    add_mode_flags(fft1d_cmd, o);
    add_seed_flag(fft1d_cmd, o);

    // verify
    auto* verify_cmd =
        app.add_subcommand("verify", "Compare simulator output against the brute-force DFT");
    int nv = 0;
    int trials = 10;
    double snr_threshold = 60.0;
    verify_cmd->add_option("--n", nv, "Frame side length")->required();
    verify_cmd->add_option("--trials", trials, "Seeded random frames to check")
        ->capture_default_str();
    verify_cmd->add_option("--snr-threshold", snr_threshold,
                           "Minimum SNR in dB for fixed mode")
        ->capture_default_str();
    verify_cmd->add_option("--jobs", o.jobs, "Parallelize independent trials")
        ->capture_default_str();
    add_mode_flags(verify_cmd, o);
    add_seed_flag(verify_cmd, o);

    // trace
    auto* trace_cmd = app.add_subcommand("trace", "Stream frames and dump the cycle trace");
    int nt = 0;
    int frames = 1;
    std::string trace_path;
    trace_cmd->add_option("--n", nt, "Frame side length")->required();
    trace_cmd->add_option("--frames", frames, "Frames in the stream")->capture_default_str();
    trace_cmd->add_option("--trace-out", trace_path, "Trace CSV path")->required();
    add_mode_flags(trace_cmd, o);
    add_seed_flag(trace_cmd, o);

    // resources
    auto* res_cmd = app.add_subcommand("resources", "Hardware cost model report");
    int nr = 0;
    std::string sweep;
    std::string res_out;
    res_cmd->add_option("--n", nr, "Report one size as JSON");
    res_cmd->add_option("--sweep", sweep, "Comma-separated sizes, emits the CSV table");
    res_cmd->add_option("--output", res_out, "Write the report here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(fft2d_cmd))
            return cmd_fft2d(o, input, format, normalize, output, layout, trace_out);
        if (app.got_subcommand(fft1d_cmd))
            return cmd_fft1d(o, n1, input1, output1);
        if (app.got_subcommand(verify_cmd))
            return cmd_verify(o, nv, trials, snr_threshold);
        if (app.got_subcommand(trace_cmd))
            return cmd_trace(o, nt, frames, trace_path);
        if (app.got_subcommand(res_cmd))
            return cmd_resources(nr, sweep, res_out);
    } catch (const SimError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
