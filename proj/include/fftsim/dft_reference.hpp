#pragma once

#include <complex>
#include <span>
#include <vector>

#include "fftsim/frame.hpp"

namespace fftsim {

// Brute-force DFT references, deliberately independent of the simulator:
// coefficients come straight from trigonometric calls, no twiddle ROM, no
// shared dataflow. Slow on purpose.

// Direct O(N^2) sum  Y(k) = sum_n x(n) e^(-j*2*pi*n*k/N), long double
// accumulation. Any N >= 1.
std::vector<std::complex<double>> dft_oracle(std::span<const std::complex<double>> x);

// Direct O(N^4) double sum over the whole frame.
Frame2d dft2d_oracle(const Frame2d& image);

// Same transform as 1D oracle over every row, then every column; the two
// routes must agree, which is the oracle's own consistency check.
Frame2d dft2d_oracle_rowcol(const Frame2d& image);

// Deviation statistics between a simulated result and a scaled reference.
struct ErrorMetrics {
    double max_abs = 0.0;
    double rms = 0.0;
    double snr_db = 0.0;
    bool bit_exact = false; // snr_db is +inf only in this case
};

ErrorMetrics compare(std::span<const std::complex<double>> sim,
                     std::span<const std::complex<double>> oracle, double scale);

inline ErrorMetrics compare(const Frame2d& sim, const Frame2d& oracle, double scale) {
    if (sim.n != oracle.n)
        throw InputError("reference_oracle: frame shapes differ (" + std::to_string(sim.n) +
                         " vs " + std::to_string(oracle.n) + ")");
    return compare(std::span<const std::complex<double>>(sim.data),
                   std::span<const std::complex<double>>(oracle.data), scale);
}

// max |a-b| over max |b|, the relative-error figure used by verification.
double relative_error(std::span<const std::complex<double>> sim,
                      std::span<const std::complex<double>> reference, double scale);

} // namespace fftsim
