#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "fftsim/fft1d_processor.hpp"
#include "fftsim/frame.hpp"
#include "fftsim/ping_pong_store.hpp"

namespace fftsim {

// One line of the system trace: both blocks' control state plus the RAM
// controller's sel for that cycle (sampled before the end-of-cycle tick).
struct SystemTraceRow {
    std::uint64_t cycle = 0;
    ControlState block1;
    ControlState block2;
    int sel = 0;
};

// The full 2D machine: block 1 transforms rows into the ping-pong store,
// block 2 pulls columns out of the opposite bank, the controller flips
// `sel` whenever both banks hit their frame limits. One step() is one
// simulated clock for the whole system.
template <typename Kernel>
class Fft2dPipeline {
public:
    using value_type = typename Kernel::value_type;

    Fft2dPipeline(int n, Kernel& kernel, const TwiddleRom<Kernel>& rom,
                  ExecPolicy policy = ExecPolicy::serial)
        : n_(n), kernel_(&kernel),
          block1_(n, kernel, rom, policy),
          block2_(n, kernel, rom, policy),
          store_(n),
          assembly_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kernel.zero()) {}

    int n() const { return n_; }
    std::uint64_t cycle() const { return cycle_; }
    const PingPongStore<value_type>& store() const { return store_; }
    const Fft1dProcessor<Kernel>& block1() const { return block1_; }
    const Fft1dProcessor<Kernel>& block2() const { return block2_; }

    // Queue an input frame. In fixed mode any sample outside the
    // representable range is an input error, never a silent saturation.
    void push_frame(const Frame2d& image) {
        image.require_valid("fft2d_system");
        if (image.n != n_)
            throw InputError("fft2d_system: frame side " + std::to_string(image.n) +
                             " does not match pipeline side " + std::to_string(n_));
        std::vector<value_type> quantized;
        quantized.reserve(image.data.size());
        for (int r = 0; r < n_; ++r) {
            for (int c = 0; c < n_; ++c) {
                const std::complex<double> v = image.at(r, c);
                check_in_range(v, r, c);
                quantized.push_back(kernel_->from_complex(v));
            }
        }
        pending_inputs_.push_back(std::move(quantized));
        ++frames_expected_;
    }

    bool output_pending() const { return frames_emitted_ < frames_expected_; }
    std::size_t spectra_ready() const { return spectra_.size(); }

    // Pop the oldest finished spectrum.
    Frame2d pop_spectrum() {
        if (spectra_.empty())
            throw ProtocolError("fft2d_system: no finished spectrum to pop");
        Frame2d out = std::move(spectra_.front());
        spectra_.pop_front();
        return out;
    }

    // Advance the whole system one simulated clock.
    SystemTraceRow step() {
        SystemTraceRow row;
        row.cycle = cycle_;

        // Block 1: start the next row when idle; row 0 of a frame waits
        // for a freshly flipped (empty) write bank.
        if (!block1_.busy() && !pending_inputs_.empty()) {
            if (row_cursor_ > 0 || store_.write_count() == 0) {
                const std::vector<value_type>& frame = pending_inputs_.front();
                row_span_.assign(frame.begin() + static_cast<std::ptrdiff_t>(row_cursor_) * n_,
                                 frame.begin() + (static_cast<std::ptrdiff_t>(row_cursor_) + 1) * n_);
                block1_.load_frame(row_span_);
                row_in_flight_ = row_cursor_;
                ++row_cursor_;
            }
        }
        if (block1_.busy()) {
            row.block1 = block1_.step_cycle();
            if (row.block1.done) {
                store_.write_row(row_in_flight_, block1_.registers());
                if (row_cursor_ == n_) {
                    pending_inputs_.pop_front();
                    row_cursor_ = 0;
                }
            }
        }

        // Block 2: start the next column when idle and a full frame sits
        // in the read bank. The column read is the stage-0 external input.
        if (!block2_.busy() && output_pending() && col_cursor_ < n_ && store_.read_bank_valid()) {
            std::vector<value_type> col = store_.read_column(col_cursor_);
            block2_.load_frame(col);
            col_in_flight_ = col_cursor_;
            ++col_cursor_;
        }
        if (block2_.busy()) {
            row.block2 = block2_.step_cycle();
            if (row.block2.done) {
                auto regs = block2_.registers();
                for (int r = 0; r < n_; ++r)
                    assembly_[static_cast<std::size_t>(r) * n_ +
                              static_cast<std::size_t>(col_in_flight_)] = regs[static_cast<std::size_t>(r)];
                if (col_in_flight_ == n_ - 1)
                    finalize_spectrum();
            }
        }

        row.sel = store_.sel();
        store_.controller_tick(); // after DONE sampling
        ++cycle_;
        return row;
    }

    // Run until every queued frame has produced its spectrum.
    std::vector<SystemTraceRow> run_to_completion() {
        std::vector<SystemTraceRow> trace;
        while (output_pending()) {
            trace.push_back(step());
            if (cycle_ > stall_limit())
                throw ProtocolError("fft2d_system: pipeline stalled (scheduler bug)");
        }
        return trace;
    }

private:
    void check_in_range(std::complex<double> v, int r, int c) const {
        if constexpr (std::is_same_v<value_type, FxComplex>) {
            const FxFormat& fmt = kernel_->format();
            const auto out = [&](double x) { return x > fmt.max_value() || x < fmt.min_value(); };
            if (out(v.real()) || out(v.imag()))
                throw InputError("fft2d_system: sample at row " + std::to_string(r) + ", col " +
                                 std::to_string(c) + " is outside the fixed-point range");
        }
    }

    void finalize_spectrum() {
        Frame2d out(n_);
        for (std::size_t i = 0; i < assembly_.size(); ++i)
            out.data[i] = kernel_->to_complex(assembly_[i]);
        spectra_.push_back(std::move(out));
        ++frames_emitted_;
        col_cursor_ = 0;
    }

    std::uint64_t stall_limit() const {
        const std::uint64_t period = static_cast<std::uint64_t>(n_) *
                                     static_cast<std::uint64_t>(block1_.stage_count());
        return (frames_expected_ + 4) * period + 64;
    }

    int n_;
    Kernel* kernel_;
    Fft1dProcessor<Kernel> block1_;
    Fft1dProcessor<Kernel> block2_;
    PingPongStore<value_type> store_;

    std::deque<std::vector<value_type>> pending_inputs_;
    std::deque<Frame2d> spectra_;
    std::vector<value_type> assembly_; // spectrum under construction
    std::vector<value_type> row_span_; // scratch for the current row load

    int row_cursor_ = 0;    // next row of the front input frame
    int row_in_flight_ = 0; // row index block 1 is computing
    int col_cursor_ = 0;    // next column of the current output frame
    int col_in_flight_ = 0; // column index block 2 is computing
    std::uint64_t frames_expected_ = 0;
    std::uint64_t frames_emitted_ = 0;
    std::uint64_t cycle_ = 0;
};

} // namespace fftsim
