#pragma once

#include <complex>
#include <string>
#include <vector>

#include "fftsim/errors.hpp"
#include "fftsim/util.hpp"

namespace fftsim {

// Square n x n complex frame, row-major. The public unit of 2D input and
// output; internal pipeline buffers carry kernel samples instead.
struct Frame2d {
    int n = 0;
    std::vector<std::complex<double>> data; // n*n entries, row-major

    Frame2d() = default;
    explicit Frame2d(int side)
        : n(side), data(static_cast<std::size_t>(side) * static_cast<std::size_t>(side)) {
        require_fft_length(side, "fft2d_system");
    }

    std::complex<double>& at(int row, int col) {
        return data[static_cast<std::size_t>(row) * static_cast<std::size_t>(n) +
                    static_cast<std::size_t>(col)];
    }
    const std::complex<double>& at(int row, int col) const {
        return data[static_cast<std::size_t>(row) * static_cast<std::size_t>(n) +
                    static_cast<std::size_t>(col)];
    }

    void require_valid(const char* who) const {
        require_fft_length(n, who);
        if (data.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
            throw InputError(std::string(who) + ": frame holds " + std::to_string(data.size()) +
                             " samples, expected " + std::to_string(n) + "x" + std::to_string(n));
    }
};

} // namespace fftsim
