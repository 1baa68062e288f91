#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "fftsim/frame.hpp"

namespace fftsim {

// Seed-reproducible test signals. Components are uniform in
// [-amplitude, amplitude]; the default keeps every sample safely inside
// Q1.15 so fixed-mode ingestion never rejects a generated frame.
std::vector<std::complex<double>> random_vector(int n, std::uint64_t seed,
                                                double amplitude = 0.5);
Frame2d random_frame(int n, std::uint64_t seed, double amplitude = 0.5);

} // namespace fftsim
