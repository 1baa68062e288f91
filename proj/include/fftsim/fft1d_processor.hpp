#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fftsim/butterfly.hpp"
#include "fftsim/errors.hpp"
#include "fftsim/twiddle_rom.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace fftsim {

// Control-unit outputs for one simulated cycle.
//   sb   - stage bus, counts 0 .. log2(n)-1
//   isl  - input select: 0 on stage 0 (external input), 1 on feedback stages
//   osl  - output select: 1 on the last stage (results leave the block)
//   done - output-valid pulse, mirrors osl
struct ControlState {
    int stage = 0;
    bool isl = false;
    bool osl = false;
    bool done = false;
};

// One butterfly lane assignment for a stage.
struct LanePair {
    int index_a = 0;       // odd-sample register, receives a + w*b
    int index_b = 0;       // even-sample register, receives a - w*b
    int twiddle_index = 0; // ROM entry feeding this lane
};

// Register pairing for one stage: n/2 lanes covering every register once.
struct StageSchedule {
    int stage = 0;
    std::vector<LanePair> pairs;
};

// Decimation-in-time pairing for the given stage: partner distance 2^stage,
// twiddle stride n/2^(stage+1).
StageSchedule routing_network(int stage, int n);

// Reverse the low `bits` bits of index i.
unsigned bit_reverse(unsigned i, int bits);

// How the per-cycle lane loop executes. Results are bit-identical either
// way; lanes of one stage write disjoint register pairs.
enum class ExecPolicy { serial, openmp };

// One 1D FFT block: n/2 butterfly lanes reused across log2(n) stages, a
// register array, and the ISL/OSL/SB/DONE control unit. Stepped externally,
// one stage per simulated clock.
template <typename Kernel>
class Fft1dProcessor {
public:
    using value_type = typename Kernel::value_type;

    Fft1dProcessor(int n, Kernel& kernel, const TwiddleRom<Kernel>& rom,
                   ExecPolicy policy = ExecPolicy::serial)
        : n_(n), kernel_(&kernel), rom_(&rom), policy_(policy) {
        require_fft_length(n, "fft1d_core");
        if (rom.n() != n)
            throw ConfigError("fft1d_core: twiddle ROM length " + std::to_string(rom.n()) +
                              " does not match FFT length " + std::to_string(n));
        log2n_ = log2_exact(n);
        registers_.assign(static_cast<std::size_t>(n), kernel.zero());
        schedules_.reserve(static_cast<std::size_t>(log2n_));
        for (int s = 0; s < log2n_; ++s)
            schedules_.push_back(routing_network(s, n));
    }

    int n() const { return n_; }
    int stage_count() const { return log2n_; }
    int lane_count() const { return n_ / 2; }
    bool busy() const { return frame_loaded_; }
    ExecPolicy policy() const { return policy_; }
    void set_policy(ExecPolicy p) { policy_ = p; }
    std::span<const value_type> registers() const { return registers_; }
    std::uint64_t butterflies_executed() const { return butterflies_executed_; }

    // Bit-reverse the input into the register array. ISL is low for the
    // stage-0 cycle that consumes it.
    void load_frame(std::span<const value_type> input) {
        if (frame_loaded_)
            throw ProtocolError("fft1d_core: load_frame while a frame is mid-flight");
        if (static_cast<int>(input.size()) != n_)
            throw InputError("fft1d_core: input length " + std::to_string(input.size()) +
                             " does not match FFT length " + std::to_string(n_));
        for (int i = 0; i < n_; ++i)
            registers_[bit_reverse(static_cast<unsigned>(i), log2n_)] = input[i];
        stage_ = 0;
        frame_loaded_ = true;
    }

    // Execute one simulated clock: all n/2 butterflies of the current
    // stage, write-back in place, control lines per the stage counter.
    ControlState step_cycle() {
        if (!frame_loaded_)
            throw ProtocolError("fft1d_core: step_cycle with no frame loaded");
        const StageSchedule& sched = schedules_[static_cast<std::size_t>(stage_)];
        const int lanes = lane_count();

        if (policy_ == ExecPolicy::openmp) {
            int saturated = 0;
#if defined(_OPENMP)
#pragma omp parallel for schedule(static) reduction(| : saturated)
#endif
            for (int lane = 0; lane < lanes; ++lane) {
                OverflowFlag local;
                const LanePair& p = sched.pairs[static_cast<std::size_t>(lane)];
                auto [odd_out, even_out] = butterfly_exec(
                    static_cast<const Kernel&>(*kernel_),
                    registers_[static_cast<std::size_t>(p.index_a)],
                    registers_[static_cast<std::size_t>(p.index_b)],
                    (*rom_)[static_cast<std::size_t>(p.twiddle_index)], local);
                registers_[static_cast<std::size_t>(p.index_a)] = odd_out;
                registers_[static_cast<std::size_t>(p.index_b)] = even_out;
                saturated |= local.value ? 1 : 0;
            }
            kernel_->note_overflow(saturated != 0);
        } else {
            for (int lane = 0; lane < lanes; ++lane) {
                const LanePair& p = sched.pairs[static_cast<std::size_t>(lane)];
                auto [odd_out, even_out] =
                    butterfly_exec(*kernel_, registers_[static_cast<std::size_t>(p.index_a)],
                                   registers_[static_cast<std::size_t>(p.index_b)],
                                   (*rom_)[static_cast<std::size_t>(p.twiddle_index)]);
                registers_[static_cast<std::size_t>(p.index_a)] = odd_out;
                registers_[static_cast<std::size_t>(p.index_b)] = even_out;
            }
        }
        butterflies_executed_ += static_cast<std::uint64_t>(lanes);

        ControlState out;
        out.stage = stage_;
        out.isl = stage_ != 0;
        out.osl = stage_ == log2n_ - 1;
        out.done = out.osl;
        if (out.done) {
            stage_ = 0;
            frame_loaded_ = false; // natural-order result stays in registers_
        } else {
            ++stage_;
        }
        return out;
    }

    // Load-and-step convenience: the whole frame in log2(n) cycles.
    std::pair<std::vector<value_type>, std::vector<ControlState>>
    run_frame(std::span<const value_type> input) {
        load_frame(input);
        std::vector<ControlState> trace;
        trace.reserve(static_cast<std::size_t>(log2n_));
        for (int s = 0; s < log2n_; ++s)
            trace.push_back(step_cycle());
        return {std::vector<value_type>(registers_.begin(), registers_.end()), std::move(trace)};
    }

private:
    int n_;
    int log2n_ = 0;
    Kernel* kernel_;
    const TwiddleRom<Kernel>* rom_;
    ExecPolicy policy_;
    std::vector<value_type> registers_;
    std::vector<StageSchedule> schedules_;
    int stage_ = 0;
    bool frame_loaded_ = false;
    std::uint64_t butterflies_executed_ = 0;
};

} // namespace fftsim
