#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "fftsim/dft_reference.hpp"
#include "fftsim/signal_gen.hpp"

using namespace fftsim;
using cd = std::complex<double>;

TEST_CASE("dft oracle: impulse, constant, rotating phasor") {
    const std::vector<cd> impulse{1.0, 0.0, 0.0, 0.0};
    auto y = dft_oracle(impulse);
    for (const cd& v : y) {
        CHECK(v.real() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(v.imag() == doctest::Approx(0.0).epsilon(1e-12));
    }

    const std::vector<cd> ones{1.0, 1.0, 1.0, 1.0};
    y = dft_oracle(ones);
    CHECK(y[0].real() == doctest::Approx(4.0));
    for (int k = 1; k < 4; ++k)
        CHECK(std::abs(y[static_cast<std::size_t>(k)]) < 1e-12);

    const std::vector<cd> phasor{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    y = dft_oracle(phasor);
    CHECK(std::abs(y[0]) < 1e-12);
    CHECK(y[1].real() == doctest::Approx(4.0));
    CHECK(std::abs(y[1].imag()) < 1e-12);
    CHECK(std::abs(y[2]) < 1e-12);
    CHECK(std::abs(y[3]) < 1e-12);
}

TEST_CASE("2d oracle: impulse at origin and a single row of ones") {
    Frame2d impulse(8);
    impulse.at(0, 0) = 1.0;
    Frame2d y = dft2d_oracle(impulse);
    for (const cd& v : y.data)
        CHECK(std::abs(v - cd{1.0, 0.0}) < 1e-12);

    // row x0 all ones: energy confined to the v = 0 column, value n*W^(u*x0)
    const int n = 8;
    const int x0 = 3;
    Frame2d rowimg(n);
    for (int y_i = 0; y_i < n; ++y_i)
        rowimg.at(x0, y_i) = 1.0;
    Frame2d s = dft2d_oracle(rowimg);
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (v == 0)
                CHECK(std::abs(s.at(u, v)) == doctest::Approx(8.0).epsilon(1e-10));
            else
                CHECK(std::abs(s.at(u, v)) < 1e-9);
        }
    }
}

TEST_CASE("2d oracle self-consistency: direct sum vs row-column route") {
    for (int n : {2, 4, 8, 16}) {
        for (std::uint64_t seed : {1u, 2u, 3u}) {
            const Frame2d img = random_frame(n, seed);
            const Frame2d direct = dft2d_oracle(img);
            const Frame2d rowcol = dft2d_oracle_rowcol(img);
            double max_ref = 0.0;
            double max_err = 0.0;
            for (std::size_t i = 0; i < direct.data.size(); ++i) {
                max_ref = std::max(max_ref, std::abs(direct.data[i]));
                max_err = std::max(max_err, std::abs(direct.data[i] - rowcol.data[i]));
            }
            CHECK(max_err <= 1e-10 * std::max(1.0, max_ref));
        }
    }
}

TEST_CASE("inverse via conjugation recovers the input") {
    const int n = 16;
    const auto x = random_vector(n, 78);
    const auto spectrum = dft_oracle(x);
    std::vector<cd> conj_spec(spectrum.size());
    for (std::size_t i = 0; i < spectrum.size(); ++i)
        conj_spec[i] = std::conj(spectrum[i]);
    const auto t = dft_oracle(conj_spec);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const cd rec = std::conj(t[i]) / static_cast<double>(n);
        CHECK(std::abs(rec - x[i]) <= 1e-9);
    }
}

TEST_CASE("compare metrics: identical, offset, and scaled") {
    const std::vector<cd> ref{1.0, {0.0, 2.0}, -3.0, {4.0, -4.0}, 0.5, 1.5, -0.25, 2.25};
    ErrorMetrics m = compare(ref, ref, 1.0);
    CHECK(m.bit_exact);
    CHECK(m.max_abs == 0.0);
    CHECK(m.rms == 0.0);
    CHECK(std::isinf(m.snr_db));

    std::vector<cd> sim = ref;
    sim[3] += 1e-3;
    m = compare(sim, ref, 1.0);
    CHECK_FALSE(m.bit_exact);
    CHECK(m.max_abs == doctest::Approx(1e-3).epsilon(1e-9));
    CHECK(m.rms == doctest::Approx(1e-3 / std::sqrt(8.0)).epsilon(1e-9));
    CHECK(std::isfinite(m.snr_db));
    CHECK(m.snr_db > 0.0);

    // scale compensates a 1/N simulator scaling
    std::vector<cd> half(ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i)
        half[i] = ref[i] * 0.5;
    m = compare(half, ref, 0.5);
    CHECK(m.bit_exact);
}

TEST_CASE("compare rejects shape mismatches") {
    const std::vector<cd> a{1.0, 2.0};
    const std::vector<cd> b{1.0, 2.0, 3.0};
    CHECK_THROWS_AS(compare(a, b, 1.0), InputError);
}
