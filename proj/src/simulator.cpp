#include "fftsim/simulator.hpp"

namespace fftsim {

namespace {

template <typename Kernel>
Kernel make_kernel(const SimConfig& cfg);

template <>
FixedKernel make_kernel<FixedKernel>(const SimConfig& cfg) {
    return FixedKernel(cfg.mode.format, cfg.scaling_enabled());
}

template <>
FloatKernel make_kernel<FloatKernel>(const SimConfig& cfg) {
    return FloatKernel(cfg.scaling_enabled());
}

template <typename Kernel>
Run1dResult run_1d_with(std::span<const std::complex<double>> input, const SimConfig& cfg) {
    const int n = static_cast<int>(input.size());
    require_fft_length(n, "fft1d_core");
    Kernel kernel = make_kernel<Kernel>(cfg);
    TwiddleRom<Kernel> rom(n, kernel);
    Fft1dProcessor<Kernel> proc(n, kernel, rom, cfg.policy);

    std::vector<typename Kernel::value_type> samples;
    samples.reserve(input.size());
    for (const auto& v : input)
        samples.push_back(kernel.from_complex(v));

    auto [raw_out, trace] = proc.run_frame(samples);

    Run1dResult result;
    result.output.reserve(raw_out.size());
    for (const auto& v : raw_out)
        result.output.push_back(kernel.to_complex(v));
    result.trace = std::move(trace);
    result.overflow = kernel.overflow_seen();
    return result;
}

template <typename Kernel>
Run2dResult run_2d_with(const Frame2d& image, const SimConfig& cfg) {
    image.require_valid("fft2d_system");
    Kernel kernel = make_kernel<Kernel>(cfg);
    TwiddleRom<Kernel> rom(image.n, kernel);
    Fft2dPipeline<Kernel> pipe(image.n, kernel, rom, cfg.policy);
    pipe.push_frame(image);

    Run2dResult result;
    result.trace = pipe.run_to_completion();
    result.cycles = pipe.cycle();
    result.spectrum = pipe.pop_spectrum();
    result.overflow = kernel.overflow_seen();
    return result;
}

template <typename Kernel>
StreamResult run_stream_with(std::span<const Frame2d> images, const SimConfig& cfg) {
    if (images.empty())
        throw InputError("fft2d_system: empty frame stream");
    const int n = images.front().n;
    for (const Frame2d& f : images) {
        f.require_valid("fft2d_system");
        if (f.n != n)
            throw InputError("fft2d_system: mixed frame sizes in stream (" + std::to_string(n) +
                             " vs " + std::to_string(f.n) + ")");
    }
    Kernel kernel = make_kernel<Kernel>(cfg);
    TwiddleRom<Kernel> rom(n, kernel);
    Fft2dPipeline<Kernel> pipe(n, kernel, rom, cfg.policy);
    for (const Frame2d& f : images)
        pipe.push_frame(f);

    StreamResult result;
    result.trace = pipe.run_to_completion();
    result.cycles = pipe.cycle();
    while (pipe.spectra_ready() > 0)
        result.spectra.push_back(pipe.pop_spectrum());
    result.overflow = kernel.overflow_seen();
    return result;
}

} // namespace

Run1dResult run_1d(std::span<const std::complex<double>> input, const SimConfig& cfg) {
    return cfg.mode.is_fixed() ? run_1d_with<FixedKernel>(input, cfg)
                               : run_1d_with<FloatKernel>(input, cfg);
}

Run2dResult run_2d(const Frame2d& image, const SimConfig& cfg) {
    return cfg.mode.is_fixed() ? run_2d_with<FixedKernel>(image, cfg)
                               : run_2d_with<FloatKernel>(image, cfg);
}

StreamResult run_stream(std::span<const Frame2d> images, const SimConfig& cfg) {
    return cfg.mode.is_fixed() ? run_stream_with<FixedKernel>(images, cfg)
                               : run_stream_with<FloatKernel>(images, cfg);
}

int instantiated_lane_count(int n) {
    FloatKernel kernel;
    TwiddleRom<FloatKernel> rom(n, kernel);
    Fft1dProcessor<FloatKernel> proc(n, kernel, rom);
    return proc.lane_count();
}

} // namespace fftsim
