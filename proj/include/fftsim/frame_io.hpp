#pragma once

#include <complex>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "fftsim/frame.hpp"

namespace fftsim {

enum class InputFormat { pgm, csv_complex };
enum class Normalize { unit_range, raw };
enum class SpectrumLayout { real_imag_csv, magnitude_csv };

struct InputSpec {
    std::filesystem::path path;
    InputFormat format = InputFormat::pgm;
    Normalize normalize = Normalize::unit_range;
};

// Load a square power-of-two frame. PGM pixels p with maxval M map to
// p/M - 0.5 under unit_range (imaginary part zero); CSV files carry a
// leading side-length line and then n*n `re,im` rows in row-major order.
Frame2d load_frame(const InputSpec& spec);

// 1D variant of the complex CSV: header line n, then n `re,im` rows.
std::vector<std::complex<double>> load_vector_csv(const std::filesystem::path& path);

// real_imag_csv round-trips bit-identically with load_frame; magnitude_csv
// writes sqrt(re^2+im^2) with 9 significant digits.
void store_spectrum(const Frame2d& frame, const std::filesystem::path& path,
                    SpectrumLayout layout);

void store_vector_csv(std::span<const std::complex<double>> v,
                      const std::filesystem::path& path);

} // namespace fftsim
