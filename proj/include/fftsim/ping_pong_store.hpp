#pragma once

#include <span>
#include <string>
#include <vector>

#include "fftsim/errors.hpp"

namespace fftsim {

// Double-buffered intermediate storage between the two 1D blocks.
// Writes land row-major in the bank picked by `sel`; reads pull columns
// from the other bank, which realizes the transpose between the passes.
// The controller inverts `sel` once both banks hit their frame limits.
template <typename T>
class PingPongStore {
public:
    explicit PingPongStore(int n) : n_(n) {
        require_fft_length(n, "fft2d_system");
        const std::size_t cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
        banks_[0].assign(cells, T{});
        banks_[1].assign(cells, T{});
        reset();
    }

    // Cold start: sel = 0, write bank empty, read bank treated as fully
    // drained so the first fill can flip the controller.
    void reset() {
        sel_ = 0;
        write_count_ = 0;
        read_count_ = n_;
        bank_valid_[0] = false;
        bank_valid_[1] = false;
    }

    int n() const { return n_; }
    int sel() const { return sel_; }
    int write_count() const { return write_count_; }
    int read_count() const { return read_count_; }
    bool read_bank_valid() const { return bank_valid_[1 - sel_]; }

    void write_row(int row_index, std::span<const T> row) {
        if (write_count_ >= n_)
            throw ProtocolError("fft2d_system: write into a full RAM bank (controller bug)");
        if (row_index < 0 || row_index >= n_)
            throw ProtocolError("fft2d_system: row index " + std::to_string(row_index) +
                                " out of range for bank of " + std::to_string(n_) + " rows");
        if (static_cast<int>(row.size()) != n_)
            throw InputError("fft2d_system: row length " + std::to_string(row.size()) +
                             " does not match frame side " + std::to_string(n_));
        T* dst = banks_[sel_].data() + static_cast<std::size_t>(row_index) * n_;
        for (int i = 0; i < n_; ++i)
            dst[i] = row[static_cast<std::size_t>(i)];
        ++write_count_;
    }

    std::vector<T> read_column(int col_index) {
        if (!read_bank_valid())
            throw ProtocolError("fft2d_system: column read from an incomplete RAM bank");
        if (read_count_ >= n_)
            throw ProtocolError("fft2d_system: column reads exceed the frame (controller bug)");
        if (col_index < 0 || col_index >= n_)
            throw ProtocolError("fft2d_system: column index " + std::to_string(col_index) +
                                " out of range for bank of " + std::to_string(n_) + " columns");
        const std::vector<T>& bank = banks_[1 - sel_];
        std::vector<T> col(static_cast<std::size_t>(n_));
        for (int r = 0; r < n_; ++r)
            col[static_cast<std::size_t>(r)] = bank[static_cast<std::size_t>(r) * n_ +
                                                    static_cast<std::size_t>(col_index)];
        ++read_count_;
        return col;
    }

    // End-of-cycle controller action, run after DONE sampling: invert sel
    // and reset both counters once write and read sides are both at their
    // limits. Returns true when a flip happened.
    bool controller_tick() {
        if (write_count_ == n_ && read_count_ == n_) {
            bank_valid_[sel_] = true;      // just filled
            bank_valid_[1 - sel_] = false; // just drained
            sel_ = 1 - sel_;
            write_count_ = 0;
            read_count_ = 0;
            return true;
        }
        return false;
    }

private:
    int n_;
    std::vector<T> banks_[2];
    int sel_ = 0;
    int write_count_ = 0;
    int read_count_ = 0;
    bool bank_valid_[2] = {false, false};
};

} // namespace fftsim
