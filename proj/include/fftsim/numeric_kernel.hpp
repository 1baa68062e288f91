#pragma once

#include <complex>
#include <utility>

#include "fftsim/fixed_point.hpp"

namespace fftsim {

// Runtime selector for the arithmetic the simulated datapath runs on.
// exact_float performs no quantization anywhere in the pipeline, which
// separates dataflow bugs from quantization noise.
struct NumericMode {
    enum class Kind { fixed_point, exact_float };
    Kind kind = Kind::fixed_point;
    FxFormat format; // meaningful only for fixed_point

    static NumericMode fixed(FxFormat fmt = FxFormat::q1_15()) {
        return NumericMode{Kind::fixed_point, fmt};
    }
    static NumericMode exact_float() {
        return NumericMode{Kind::exact_float, FxFormat{}};
    }
    bool is_fixed() const { return kind == Kind::fixed_point; }
};

// Quantized arithmetic kernel. Owns the format, the per-instance sticky
// overflow flag and the per-stage scale-by-half switch.
class FixedKernel {
public:
    using value_type = FxComplex;

    explicit FixedKernel(FxFormat fmt = FxFormat::q1_15(), bool scale_half = true)
        : format_(fmt), scale_half_(scale_half) {}

    value_type zero() const { return FxComplex{0, 0, format_}; }

    value_type from_complex(std::complex<double> v) {
        return fx_quantize(v.real(), v.imag(), format_, flag_);
    }

    // Quantize against a caller-supplied flag; ROM construction uses this
    // so coefficient rounding does not trip the instance's sticky flag.
    value_type from_complex_with(std::complex<double> v, OverflowFlag& flag) const {
        return fx_quantize(v.real(), v.imag(), format_, flag);
    }

    std::complex<double> to_complex(const value_type& v) const { return {v.re(), v.im()}; }

    value_type add(const value_type& a, const value_type& b) { return fx_add(a, b, flag_); }
    value_type sub(const value_type& a, const value_type& b) { return fx_sub(a, b, flag_); }
    value_type mul(const value_type& a, const value_type& b) { return fx_mul(a, b, flag_); }

    // a + t and a - t for the butterfly write-back. When scale-by-half is
    // on, the halving happens on the unsaturated wide sum, so scaled
    // outputs of in-format operands can never saturate.
    std::pair<value_type, value_type> combine(const value_type& a, const value_type& t,
                                              OverflowFlag& flag) const {
        detail::require_same_format(a, t);
        std::int64_t sum_re = std::int64_t{a.re_raw} + t.re_raw;
        std::int64_t sum_im = std::int64_t{a.im_raw} + t.im_raw;
        std::int64_t dif_re = std::int64_t{a.re_raw} - t.re_raw;
        std::int64_t dif_im = std::int64_t{a.im_raw} - t.im_raw;
        if (scale_half_) {
            sum_re = fx_halve_raw(sum_re);
            sum_im = fx_halve_raw(sum_im);
            dif_re = fx_halve_raw(dif_re);
            dif_im = fx_halve_raw(dif_im);
        }
        value_type sum{detail::saturate_raw(sum_re, format_, flag),
                       detail::saturate_raw(sum_im, format_, flag), format_};
        value_type dif{detail::saturate_raw(dif_re, format_, flag),
                       detail::saturate_raw(dif_im, format_, flag), format_};
        return {sum, dif};
    }

    std::pair<value_type, value_type> combine(const value_type& a, const value_type& t) {
        return combine(a, t, flag_);
    }

    value_type mul_with(const value_type& a, const value_type& b, OverflowFlag& flag) const {
        return fx_mul(a, b, flag);
    }

    const FxFormat& format() const { return format_; }
    bool scaling() const { return scale_half_; }
    void set_scaling(bool on) { scale_half_ = on; }

    bool overflow_seen() const { return flag_.value; }
    void note_overflow(bool any) { flag_.value = flag_.value || any; }
    void clear_overflow() { flag_.clear(); }
    OverflowFlag& flag() { return flag_; }

private:
    FxFormat format_;
    bool scale_half_;
    OverflowFlag flag_;
};

// Exact floating-point kernel: plain complex double arithmetic, optional
// scale-by-half kept for scaled-output experiments (off by default).
class FloatKernel {
public:
    using value_type = std::complex<double>;

    explicit FloatKernel(bool scale_half = false) : scale_half_(scale_half) {}

    value_type zero() const { return {0.0, 0.0}; }
    value_type from_complex(std::complex<double> v) { return v; }
    value_type from_complex_with(std::complex<double> v, OverflowFlag&) const { return v; }
    std::complex<double> to_complex(const value_type& v) const { return v; }

    value_type add(const value_type& a, const value_type& b) { return a + b; }
    value_type sub(const value_type& a, const value_type& b) { return a - b; }
    value_type mul(const value_type& a, const value_type& b) { return a * b; }

    std::pair<value_type, value_type> combine(const value_type& a, const value_type& t,
                                              OverflowFlag&) const {
        value_type sum = a + t;
        value_type dif = a - t;
        if (scale_half_) {
            sum *= 0.5;
            dif *= 0.5;
        }
        return {sum, dif};
    }

    std::pair<value_type, value_type> combine(const value_type& a, const value_type& t) {
        OverflowFlag unused;
        return combine(a, t, unused);
    }

    value_type mul_with(const value_type& a, const value_type& b, OverflowFlag&) const {
        return a * b;
    }

    bool scaling() const { return scale_half_; }
    void set_scaling(bool on) { scale_half_ = on; }

    bool overflow_seen() const { return false; }
    void note_overflow(bool) {}
    void clear_overflow() {}

private:
    bool scale_half_;
};

} // namespace fftsim
