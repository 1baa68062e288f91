#include "fftsim/trace_io.hpp"

#include <array>
#include <fstream>
#include <sstream>

namespace fftsim {

const char* const kTraceCsvHeader =
    "cycle,blk1_sb,blk1_isl,blk1_osl,blk1_done,blk2_sb,blk2_isl,blk2_osl,blk2_done,sel";

std::string trace_to_csv(std::span<const SystemTraceRow> trace) {
    std::ostringstream out;
    out << kTraceCsvHeader << '\n';
    for (const SystemTraceRow& r : trace) {
        out << r.cycle << ',' << r.block1.stage << ',' << int(r.block1.isl) << ','
            << int(r.block1.osl) << ',' << int(r.block1.done) << ',' << r.block2.stage << ','
            << int(r.block2.isl) << ',' << int(r.block2.osl) << ',' << int(r.block2.done) << ','
            << r.sel << '\n';
    }
    return out.str();
}

void write_trace_csv(std::span<const SystemTraceRow> trace, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("fft2d_system: cannot write trace '" + path.string() + "'");
    out << trace_to_csv(trace);
    if (!out)
        throw IoError("fft2d_system: trace write failed for '" + path.string() + "'");
}

std::vector<SystemTraceRow> parse_trace_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        throw InputError("fft2d_system: empty trace");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    if (line != kTraceCsvHeader)
        throw InputError("fft2d_system: unexpected trace header '" + line + "'");

    std::vector<SystemTraceRow> rows;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        std::array<long long, 10> f{};
        std::size_t pos = 0;
        for (int i = 0; i < 10; ++i) {
            const std::size_t next = line.find(',', pos);
            const std::string tok = line.substr(pos, next == std::string::npos
                                                         ? std::string::npos
                                                         : next - pos);
            try {
                f[static_cast<std::size_t>(i)] = std::stoll(tok);
            } catch (const std::exception&) {
                throw InputError("fft2d_system: malformed trace field '" + tok + "'");
            }
            if (i < 9) {
                if (next == std::string::npos)
                    throw InputError("fft2d_system: trace row has too few fields: '" + line + "'");
                pos = next + 1;
            }
        }
        SystemTraceRow r;
        r.cycle = static_cast<std::uint64_t>(f[0]);
        r.block1 = ControlState{static_cast<int>(f[1]), f[2] != 0, f[3] != 0, f[4] != 0};
        r.block2 = ControlState{static_cast<int>(f[5]), f[6] != 0, f[7] != 0, f[8] != 0};
        r.sel = static_cast<int>(f[9]);
        rows.push_back(r);
    }
    return rows;
}

std::vector<SystemTraceRow> read_trace_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("fft2d_system: cannot open trace '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_trace_csv(buf.str());
}

TraceSummary summarize_trace(std::span<const SystemTraceRow> trace) {
    TraceSummary s;
    s.cycles = trace.size();
    int prev_sel = 0;
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const SystemTraceRow& r = trace[i];
        if (r.block1.done) ++s.blk1_done_pulses;
        if (r.block2.done) ++s.blk2_done_pulses;
        if (i > 0 && r.sel != prev_sel) ++s.sel_toggles;
        prev_sel = r.sel;
        s.final_sel = r.sel;
    }
    return s;
}

} // namespace fftsim
