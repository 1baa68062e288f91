#include "fftsim/frame_io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace fftsim {

namespace {

std::string at_cell(int row, int col) {
    return " at row " + std::to_string(row) + ", col " + std::to_string(col);
}

// PGM token reader: whitespace-separated fields, '#' comments to end of line.
class PgmTokens {
public:
    explicit PgmTokens(std::istream& in) : in_(in) {}

    std::string next(const char* what) {
        skip_separators();
        std::string tok;
        int c;
        while ((c = in_.get()) != EOF && !std::isspace(c))
            tok.push_back(static_cast<char>(c));
        if (tok.empty())
            throw InputError(std::string("frame_io: missing ") + what + " in PGM header");
        return tok;
    }

    long next_long(const char* what) {
        const std::string tok = next(what);
        try {
            std::size_t used = 0;
            const long v = std::stol(tok, &used);
            if (used != tok.size())
                throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            throw InputError(std::string("frame_io: malformed ") + what + " '" + tok +
                             "' in PGM header");
        }
    }

private:
    void skip_separators() {
        int c;
        while ((c = in_.peek()) != EOF) {
            if (c == '#') {
                while ((c = in_.get()) != EOF && c != '\n') {
                }
            } else if (std::isspace(c)) {
                in_.get();
            } else {
                break;
            }
        }
    }

    std::istream& in_;
};

Frame2d load_pgm(const std::filesystem::path& path, Normalize normalize) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("frame_io: cannot open '" + path.string() + "'");

    PgmTokens tokens(in);
    const std::string magic = tokens.next("magic");
    const bool ascii = magic == "P2";
    if (!ascii && magic != "P5")
        throw InputError("frame_io: '" + path.string() + "' is not a P2/P5 PGM (magic '" +
                         magic + "')");

    const long width = tokens.next_long("width");
    const long height = tokens.next_long("height");
    const long maxval = tokens.next_long("maxval");
    if (width <= 0 || height <= 0)
        throw InputError("frame_io: non-positive PGM dimensions " + std::to_string(width) + "x" +
                         std::to_string(height));
    if (width != height)
        throw InputError("frame_io: non-square PGM " + std::to_string(width) + "x" +
                         std::to_string(height));
    if (!is_power_of_two(width) || width < 2)
        throw InputError("frame_io: PGM side " + std::to_string(width) +
                         " is not a power of two >= 2");
    if (maxval <= 0 || maxval > 65535)
        throw InputError("frame_io: PGM maxval " + std::to_string(maxval) + " out of [1, 65535]");

    const int n = static_cast<int>(width);
    Frame2d frame(n);

    auto store_pixel = [&](int r, int c, long p) {
        if (p < 0 || p > maxval)
            throw InputError("frame_io: pixel value " + std::to_string(p) + " exceeds maxval " +
                             std::to_string(maxval) + at_cell(r, c));
        const double real = normalize == Normalize::unit_range
                                ? static_cast<double>(p) / static_cast<double>(maxval) - 0.5
                                : static_cast<double>(p);
        frame.at(r, c) = {real, 0.0};
    };

    if (ascii) {
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                store_pixel(r, c, tokens.next_long("pixel"));
    } else {
        // Binary samples follow a single whitespace byte after maxval.
        const int bytes = maxval > 255 ? 2 : 1;
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c) {
                long p = 0;
                for (int b = 0; b < bytes; ++b) {
                    const int ch = in.get();
                    if (ch == EOF)
                        throw InputError("frame_io: truncated PGM raster" + at_cell(r, c));
                    p = (p << 8) | ch; // big-endian per the format
                }
                store_pixel(r, c, p);
            }
        }
    }
    return frame;
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("frame_io: cannot open '" + path.string() + "'");
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        lines.push_back(line);
    }
    while (!lines.empty() && lines.back().empty())
        lines.pop_back();
    return lines;
}

std::complex<double> parse_complex_line(const std::string& line, int row, int col) {
    const auto comma = line.find(',');
    if (comma == std::string::npos)
        throw InputError("frame_io: expected 're,im'" + at_cell(row, col) + ", got '" + line +
                         "'");
    const std::string re_s = line.substr(0, comma);
    const std::string im_s = line.substr(comma + 1);
    try {
        std::size_t used = 0;
        const double re = std::stod(re_s, &used);
        if (used != re_s.size())
            throw std::invalid_argument(re_s);
        used = 0;
        const double im = std::stod(im_s, &used);
        if (used != im_s.size())
            throw std::invalid_argument(im_s);
        return {re, im};
    } catch (const std::exception&) {
        throw InputError("frame_io: malformed complex sample '" + line + "'" + at_cell(row, col));
    }
}

long parse_header_count(const std::vector<std::string>& lines, const std::filesystem::path& path) {
    if (lines.empty())
        throw InputError("frame_io: '" + path.string() + "' is empty");
    try {
        std::size_t used = 0;
        const long n = std::stol(lines.front(), &used);
        if (used != lines.front().size())
            throw std::invalid_argument(lines.front());
        return n;
    } catch (const std::exception&) {
        throw InputError("frame_io: malformed size header '" + lines.front() + "' in '" +
                         path.string() + "'");
    }
}

Frame2d load_csv(const std::filesystem::path& path) {
    const auto lines = read_lines(path);
    const long n = parse_header_count(lines, path);
    if (n < 2 || !is_power_of_two(n))
        throw InputError("frame_io: CSV side " + std::to_string(n) +
                         " is not a power of two >= 2");
    const std::size_t expected = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    if (lines.size() - 1 != expected)
        throw InputError("frame_io: CSV holds " + std::to_string(lines.size() - 1) +
                         " samples, expected " + std::to_string(expected));
    Frame2d frame(static_cast<int>(n));
    for (std::size_t i = 0; i < expected; ++i) {
        const int r = static_cast<int>(i / static_cast<std::size_t>(n));
        const int c = static_cast<int>(i % static_cast<std::size_t>(n));
        frame.at(r, c) = parse_complex_line(lines[i + 1], r, c);
    }
    return frame;
}

void format_double(char* buf, std::size_t cap, double v, int digits) {
    std::snprintf(buf, cap, "%.*g", digits, v);
}

} // namespace

Frame2d load_frame(const InputSpec& spec) {
    switch (spec.format) {
    case InputFormat::pgm:
        return load_pgm(spec.path, spec.normalize);
    case InputFormat::csv_complex:
        return load_csv(spec.path);
    }
    throw ConfigError("frame_io: unknown input format");
}

std::vector<std::complex<double>> load_vector_csv(const std::filesystem::path& path) {
    const auto lines = read_lines(path);
    const long n = parse_header_count(lines, path);
    if (n < 2 || !is_power_of_two(n))
        throw InputError("frame_io: CSV length " + std::to_string(n) +
                         " is not a power of two >= 2");
    if (lines.size() - 1 != static_cast<std::size_t>(n))
        throw InputError("frame_io: CSV holds " + std::to_string(lines.size() - 1) +
                         " samples, expected " + std::to_string(n));
    std::vector<std::complex<double>> out(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = parse_complex_line(lines[static_cast<std::size_t>(i) + 1], 0,
                                                              static_cast<int>(i));
    return out;
}

void store_spectrum(const Frame2d& frame, const std::filesystem::path& path,
                    SpectrumLayout layout) {
    frame.require_valid("frame_io");
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("frame_io: cannot write '" + path.string() + "'");
    out << frame.n << '\n';
    char a[64];
    char b[64];
    for (const std::complex<double>& v : frame.data) {
        if (layout == SpectrumLayout::real_imag_csv) {
            // 17 significant digits: parses back to the identical double.
            format_double(a, sizeof a, v.real(), 17);
            format_double(b, sizeof b, v.imag(), 17);
            out << a << ',' << b << '\n';
        } else {
            format_double(a, sizeof a, std::abs(v), 9);
            out << a << '\n';
        }
    }
    if (!out)
        throw IoError("frame_io: write failed for '" + path.string() + "'");
}

void store_vector_csv(std::span<const std::complex<double>> v,
                      const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("frame_io: cannot write '" + path.string() + "'");
    out << v.size() << '\n';
    char a[64];
    char b[64];
    for (const std::complex<double>& s : v) {
        format_double(a, sizeof a, s.real(), 17);
        format_double(b, sizeof b, s.imag(), 17);
        out << a << ',' << b << '\n';
    }
    if (!out)
        throw IoError("frame_io: write failed for '" + path.string() + "'");
}

} // namespace fftsim
