#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "fftsim/numeric_kernel.hpp"
#include "fftsim/util.hpp"

namespace fftsim {

// Precomputed coefficients e^(-j*2*pi*k/n) for k in [0, n/2), quantized
// under the kernel's numeric mode. Shared read-only by all lanes.
template <typename Kernel>
class TwiddleRom {
public:
    using value_type = typename Kernel::value_type;

    TwiddleRom(int n, const Kernel& kernel) : n_(n) {
        require_fft_length(n, "butterfly");
        entries_.reserve(static_cast<std::size_t>(n) / 2);
        OverflowFlag scratch;
        for (int k = 0; k < n / 2; ++k) {
            const double angle = -2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n);
            entries_.push_back(
                kernel.from_complex_with({std::cos(angle), std::sin(angle)}, scratch));
        }
    }

    int n() const { return n_; }
    const value_type& operator[](std::size_t k) const { return entries_.at(k); }
    std::size_t size() const { return entries_.size(); }
    const std::vector<value_type>& entries() const { return entries_; }

private:
    int n_;
    std::vector<value_type> entries_;
};

} // namespace fftsim
