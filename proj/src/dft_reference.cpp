#include "fftsim/dft_reference.hpp"

#include <cmath>
#include <limits>

namespace fftsim {

namespace {

using LComplex = std::complex<long double>;

constexpr long double kTwoPi = 6.283185307179586476925286766559005768L;

LComplex unit_phasor(long double turns) {
    const long double angle = -kTwoPi * turns;
    return {std::cos(angle), std::sin(angle)};
}

} // namespace

std::vector<std::complex<double>> dft_oracle(std::span<const std::complex<double>> x) {
    const std::size_t n = x.size();
    if (n == 0)
        throw InputError("reference_oracle: empty input vector");
    std::vector<std::complex<double>> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        LComplex acc{0.0L, 0.0L};
        for (std::size_t i = 0; i < n; ++i) {
            const long double turns =
                static_cast<long double>((i * k) % n) / static_cast<long double>(n);
            acc += LComplex(x[i].real(), x[i].imag()) * unit_phasor(turns);
        }
        out[k] = {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
    }
    return out;
}

Frame2d dft2d_oracle(const Frame2d& image) {
    image.require_valid("reference_oracle");
    const int n = image.n;
    Frame2d out(n);
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            LComplex acc{0.0L, 0.0L};
            for (int x = 0; x < n; ++x) {
                for (int y = 0; y < n; ++y) {
                    const long double turns =
                        static_cast<long double>((u * x) % n + (v * y) % n) /
                        static_cast<long double>(n);
                    const std::complex<double>& s = image.at(x, y);
                    acc += LComplex(s.real(), s.imag()) * unit_phasor(turns);
                }
            }
            out.at(u, v) = {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
        }
    }
    return out;
}

Frame2d dft2d_oracle_rowcol(const Frame2d& image) {
    image.require_valid("reference_oracle");
    const int n = image.n;
    Frame2d mid(n);
    std::vector<std::complex<double>> line(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y)
            line[static_cast<std::size_t>(y)] = image.at(x, y);
        auto t = dft_oracle(line);
        for (int v = 0; v < n; ++v)
            mid.at(x, v) = t[static_cast<std::size_t>(v)];
    }
    Frame2d out(n);
    for (int v = 0; v < n; ++v) {
        for (int x = 0; x < n; ++x)
            line[static_cast<std::size_t>(x)] = mid.at(x, v);
        auto t = dft_oracle(line);
        for (int u = 0; u < n; ++u)
            out.at(u, v) = t[static_cast<std::size_t>(u)];
    }
    return out;
}

ErrorMetrics compare(std::span<const std::complex<double>> sim,
                     std::span<const std::complex<double>> oracle, double scale) {
    if (sim.size() != oracle.size())
        throw InputError("reference_oracle: shapes differ (" + std::to_string(sim.size()) +
                         " vs " + std::to_string(oracle.size()) + " samples)");
    if (sim.empty())
        throw InputError("reference_oracle: empty comparison");

    long double err_power = 0.0L;
    long double sig_power = 0.0L;
    long double max_abs = 0.0L;
    for (std::size_t i = 0; i < sim.size(); ++i) {
        const LComplex ref = LComplex(oracle[i].real(), oracle[i].imag()) *
                             static_cast<long double>(scale);
        const LComplex err = LComplex(sim[i].real(), sim[i].imag()) - ref;
        const long double e2 = err.real() * err.real() + err.imag() * err.imag();
        err_power += e2;
        sig_power += ref.real() * ref.real() + ref.imag() * ref.imag();
        max_abs = std::max(max_abs, std::abs(err));
    }

    ErrorMetrics m;
    m.max_abs = static_cast<double>(max_abs);
    m.rms = static_cast<double>(std::sqrt(err_power / static_cast<long double>(sim.size())));
    if (err_power == 0.0L) {
        m.bit_exact = true;
        m.snr_db = std::numeric_limits<double>::infinity();
    } else {
        m.snr_db = static_cast<double>(10.0L * std::log10(sig_power / err_power));
    }
    return m;
}

double relative_error(std::span<const std::complex<double>> sim,
                      std::span<const std::complex<double>> reference, double scale) {
    if (sim.size() != reference.size())
        throw InputError("reference_oracle: shapes differ in relative_error");
    long double max_err = 0.0L;
    long double max_ref = 0.0L;
    for (std::size_t i = 0; i < sim.size(); ++i) {
        const LComplex ref = LComplex(reference[i].real(), reference[i].imag()) *
                             static_cast<long double>(scale);
        const LComplex err = LComplex(sim[i].real(), sim[i].imag()) - ref;
        max_err = std::max(max_err, std::abs(err));
        max_ref = std::max(max_ref, std::abs(ref));
    }
    if (max_ref == 0.0L)
        return max_err == 0.0L ? 0.0 : std::numeric_limits<double>::infinity();
    return static_cast<double>(max_err / max_ref);
}

} // namespace fftsim
