#pragma once

#include <string>

#include "fftsim/errors.hpp"

namespace fftsim {

inline bool is_power_of_two(long n) { return n >= 1 && (n & (n - 1)) == 0; }

inline int log2_exact(long n) {
    int lg = 0;
    while ((1L << lg) < n) ++lg;
    return lg;
}

inline void require_fft_length(long n, const char* who) {
    if (n < 2 || !is_power_of_two(n))
        throw ConfigError(std::string(who) + ": FFT length must be a power of two >= 2, got " +
                          std::to_string(n));
}

} // namespace fftsim
