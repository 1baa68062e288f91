#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "fftsim/fft2d_pipeline.hpp"

namespace fftsim {

// Column order is part of the external contract:
// cycle,blk1_sb,blk1_isl,blk1_osl,blk1_done,blk2_sb,blk2_isl,blk2_osl,blk2_done,sel
extern const char* const kTraceCsvHeader;

std::string trace_to_csv(std::span<const SystemTraceRow> trace);
void write_trace_csv(std::span<const SystemTraceRow> trace, const std::filesystem::path& path);

// Inverse of trace_to_csv, used by trace-driven checks.
std::vector<SystemTraceRow> parse_trace_csv(const std::string& text);
std::vector<SystemTraceRow> read_trace_csv(const std::filesystem::path& path);

struct TraceSummary {
    std::uint64_t cycles = 0;
    std::uint64_t blk1_done_pulses = 0;
    std::uint64_t blk2_done_pulses = 0;
    std::uint64_t sel_toggles = 0;
    int final_sel = 0;
};

TraceSummary summarize_trace(std::span<const SystemTraceRow> trace);

} // namespace fftsim
