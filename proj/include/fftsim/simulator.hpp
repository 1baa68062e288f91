#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fftsim/fft2d_pipeline.hpp"
#include "fftsim/frame.hpp"
#include "fftsim/numeric_kernel.hpp"

namespace fftsim {

// Everything a single simulation run needs to know. `scaling` left unset
// picks the mode default: scale-by-half on for fixed point, off for
// exact float.
struct SimConfig {
    NumericMode mode = NumericMode::fixed();
    std::optional<bool> scaling;
    ExecPolicy policy = ExecPolicy::serial;

    bool scaling_enabled() const { return scaling.value_or(mode.is_fixed()); }

    // Factor the simulator output carries relative to the unscaled DFT.
    double output_scale_1d(int n) const {
        return scaling_enabled() ? 1.0 / static_cast<double>(n) : 1.0;
    }
    double output_scale_2d(int n) const {
        const double s = output_scale_1d(n);
        return s * s;
    }
};

struct Run1dResult {
    std::vector<std::complex<double>> output;
    std::vector<ControlState> trace;
    bool overflow = false;
};

struct Run2dResult {
    Frame2d spectrum;
    std::vector<SystemTraceRow> trace;
    std::uint64_t cycles = 0;
    bool overflow = false;
};

struct StreamResult {
    std::vector<Frame2d> spectra;
    std::vector<SystemTraceRow> trace;
    std::uint64_t cycles = 0;
    bool overflow = false;
};

Run1dResult run_1d(std::span<const std::complex<double>> input, const SimConfig& cfg);
Run2dResult run_2d(const Frame2d& image, const SimConfig& cfg);
StreamResult run_stream(std::span<const Frame2d> images, const SimConfig& cfg);

// Butterfly lanes one 1D block of this size instantiates (model/machine
// agreement is an acceptance criterion).
int instantiated_lane_count(int n);

} // namespace fftsim
