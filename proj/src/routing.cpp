#include "fftsim/fft1d_processor.hpp"

namespace fftsim {

unsigned bit_reverse(unsigned i, int bits) {
    unsigned r = 0;
    for (int k = 0; k < bits; ++k) {
        r = (r << 1) | (i & 1u);
        i >>= 1;
    }
    return r;
}

StageSchedule routing_network(int stage, int n) {
    require_fft_length(n, "fft1d_core");
    const int stages = log2_exact(n);
    if (stage < 0 || stage >= stages)
        throw ConfigError("fft1d_core: stage " + std::to_string(stage) +
                          " out of range for log2(n) = " + std::to_string(stages));

    StageSchedule sched;
    sched.stage = stage;
    sched.pairs.reserve(static_cast<std::size_t>(n) / 2);
    const int span = 1 << stage;            // partner distance
    const int tw_stride = n / (span * 2);   // ROM step between adjacent lanes
    for (int group = 0; group < n; group += span * 2) {
        for (int j = 0; j < span; ++j) {
            sched.pairs.push_back(LanePair{group + j, group + j + span, j * tw_stride});
        }
    }
    return sched;
}

} // namespace fftsim
