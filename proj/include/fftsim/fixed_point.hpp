#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "fftsim/errors.hpp"

namespace fftsim {

enum class Rounding { half_even };
enum class Overflow { saturate };

// Two's-complement fixed-point format: total_bits signed word,
// frac_bits of fraction. Q1.15 is {16, 15}.
struct FxFormat {
    int total_bits = 16;
    int frac_bits = 15;
    Rounding rounding = Rounding::half_even;
    Overflow overflow = Overflow::saturate;

    static FxFormat q1_15() { return FxFormat{16, 15}; }

    static FxFormat make(int total_bits, int frac_bits) {
        if (total_bits < 2 || total_bits > 32)
            throw ConfigError("numeric_kernel: total_bits must be in [2, 32], got " +
                              std::to_string(total_bits));
        if (frac_bits < 0 || frac_bits > total_bits - 1)
            throw ConfigError("numeric_kernel: frac_bits must be in [0, total_bits-1], got " +
                              std::to_string(frac_bits));
        return FxFormat{total_bits, frac_bits};
    }

    std::int64_t max_raw() const { return (std::int64_t{1} << (total_bits - 1)) - 1; }
    std::int64_t min_raw() const { return -(std::int64_t{1} << (total_bits - 1)); }
    double lsb() const { return std::ldexp(1.0, -frac_bits); }
    double max_value() const { return static_cast<double>(max_raw()) * lsb(); }
    double min_value() const { return static_cast<double>(min_raw()) * lsb(); }

    bool operator==(const FxFormat&) const = default;
};

// Sticky saturation indicator. One per simulator instance; never cleared
// by the arithmetic itself.
struct OverflowFlag {
    bool value = false;
    void set() { value = true; }
    void clear() { value = false; }
    explicit operator bool() const { return value; }
};

// Quantized complex sample. Raw components are in units of 2^-frac_bits
// and always fit the format's word.
struct FxComplex {
    std::int32_t re_raw = 0;
    std::int32_t im_raw = 0;
    FxFormat format;

    double re() const { return static_cast<double>(re_raw) * format.lsb(); }
    double im() const { return static_cast<double>(im_raw) * format.lsb(); }

    bool operator==(const FxComplex&) const = default;
};

namespace detail {

// Round v/2^shift to nearest, ties to even. Exact on the integer lattice.
inline std::int64_t round_half_even_shift(__int128 v, int shift) {
    if (shift <= 0) return static_cast<std::int64_t>(v);
    const __int128 one = 1;
    __int128 floor_q = v >> shift;
    __int128 rem = v - (floor_q << shift); // in [0, 2^shift)
    const __int128 half = one << (shift - 1);
    if (rem > half || (rem == half && (floor_q & 1)))
        ++floor_q;
    return static_cast<std::int64_t>(floor_q);
}

inline std::int32_t saturate_raw(std::int64_t raw, const FxFormat& fmt, OverflowFlag& flag) {
    if (raw > fmt.max_raw()) {
        flag.set();
        return static_cast<std::int32_t>(fmt.max_raw());
    }
    if (raw < fmt.min_raw()) {
        flag.set();
        return static_cast<std::int32_t>(fmt.min_raw());
    }
    return static_cast<std::int32_t>(raw);
}

inline void require_same_format(const FxComplex& a, const FxComplex& b) {
    if (!(a.format == b.format))
        throw ConfigError("numeric_kernel: operand fixed-point formats differ");
}

} // namespace detail

// Nearest representable value, ties to even; out-of-range saturates and
// sets the sticky flag.
inline std::int32_t fx_quantize_raw(double value, const FxFormat& fmt, OverflowFlag& flag) {
    const double scaled = std::ldexp(value, fmt.frac_bits);
    if (std::isnan(scaled)) {
        flag.set();
        return 0;
    }
    // Clamp in the double domain first so the int64 conversion below is safe.
    // max_raw is odd, so a tie at max_raw + 0.5 rounds away and saturates;
    // min_raw is even, so the tie at min_raw - 0.5 rounds back in range.
    if (scaled >= static_cast<double>(fmt.max_raw()) + 0.5) {
        flag.set();
        return static_cast<std::int32_t>(fmt.max_raw());
    }
    if (scaled < static_cast<double>(fmt.min_raw()) - 0.5) {
        flag.set();
        return static_cast<std::int32_t>(fmt.min_raw());
    }
    const double fl = std::floor(scaled);
    const double frac = scaled - fl;
    std::int64_t raw = static_cast<std::int64_t>(fl);
    if (frac > 0.5 || (frac == 0.5 && (raw & 1)))
        ++raw;
    return detail::saturate_raw(raw, fmt, flag);
}

inline FxComplex fx_quantize(double re, double im, const FxFormat& fmt, OverflowFlag& flag) {
    return FxComplex{fx_quantize_raw(re, fmt, flag), fx_quantize_raw(im, fmt, flag), fmt};
}

// Component-wise saturating add.
inline FxComplex fx_add(const FxComplex& a, const FxComplex& b, OverflowFlag& flag) {
    detail::require_same_format(a, b);
    const std::int64_t re = std::int64_t{a.re_raw} + b.re_raw;
    const std::int64_t im = std::int64_t{a.im_raw} + b.im_raw;
    return FxComplex{detail::saturate_raw(re, a.format, flag),
                     detail::saturate_raw(im, a.format, flag), a.format};
}

inline FxComplex fx_sub(const FxComplex& a, const FxComplex& b, OverflowFlag& flag) {
    detail::require_same_format(a, b);
    const std::int64_t re = std::int64_t{a.re_raw} - b.re_raw;
    const std::int64_t im = std::int64_t{a.im_raw} - b.im_raw;
    return FxComplex{detail::saturate_raw(re, a.format, flag),
                     detail::saturate_raw(im, a.format, flag), a.format};
}

// Full-precision complex product (ac-bd) + j(ad+bc), rounded half-even back
// to the format and saturated. The accumulation is done in 128-bit so even
// 32-bit formats cannot wrap before rounding.
inline FxComplex fx_mul(const FxComplex& a, const FxComplex& b, OverflowFlag& flag) {
    detail::require_same_format(a, b);
    const __int128 ac = static_cast<__int128>(a.re_raw) * b.re_raw;
    const __int128 bd = static_cast<__int128>(a.im_raw) * b.im_raw;
    const __int128 ad = static_cast<__int128>(a.re_raw) * b.im_raw;
    const __int128 bc = static_cast<__int128>(a.im_raw) * b.re_raw;
    const int shift = a.format.frac_bits;
    const std::int64_t re = detail::round_half_even_shift(ac - bd, shift);
    const std::int64_t im = detail::round_half_even_shift(ad + bc, shift);
    return FxComplex{detail::saturate_raw(re, a.format, flag),
                     detail::saturate_raw(im, a.format, flag), a.format};
}

// Halve a raw component, rounding the lost bit half-even.
inline std::int32_t fx_halve_raw(std::int64_t raw) {
    return static_cast<std::int32_t>(detail::round_half_even_shift(raw, 1));
}

} // namespace fftsim
