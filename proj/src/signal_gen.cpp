#include "fftsim/signal_gen.hpp"

#include <random>

namespace fftsim {

std::vector<std::complex<double>> random_vector(int n, std::uint64_t seed, double amplitude) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-amplitude, amplitude);
    std::vector<std::complex<double>> out(static_cast<std::size_t>(n));
    for (auto& v : out) {
        const double re = dist(rng);
        const double im = dist(rng);
        v = {re, im};
    }
    return out;
}

Frame2d random_frame(int n, std::uint64_t seed, double amplitude) {
    Frame2d frame(n);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-amplitude, amplitude);
    for (auto& v : frame.data) {
        const double re = dist(rng);
        const double im = dist(rng);
        v = {re, im};
    }
    return frame;
}

} // namespace fftsim
