#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "satmat/errors.hpp"

namespace satmat {

// Dense 0-1 matrix. Each row is bit-packed into one 64-bit word (bit j =
// column j), which caps both dimensions at 64 so every rotation stays
// representable. Indices are 0-based in code; all text I/O and diagnostics
// are 1-based.
class Matrix {
public:
    static constexpr int max_dim = 64;

    Matrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int i, int j) const { return row_bits_[i] >> j & 1; }
    void set(int i, int j, bool v) {
        if (v)
            row_bits_[i] |= std::uint64_t{1} << j;
        else
            row_bits_[i] &= ~(std::uint64_t{1} << j);
    }

    std::uint64_t row_bits(int i) const { return row_bits_[i]; }

    void clear() { row_bits_.assign(rows_, 0); }

    int weight() const;
    bool all_zero() const;
    bool row_empty(int i) const { return row_bits_[i] == 0; }
    bool col_empty(int j) const;

    bool operator==(const Matrix&) const = default;

private:
    int rows_, cols_;
    std::vector<std::uint64_t> row_bits_;
};

// Total order used for canonical forms and deterministic tie-breaks: fewer
// rows first, then fewer columns, then row-major cell order with 0 < 1.
bool matrix_less(const Matrix& a, const Matrix& b);

enum class SymmetryOp {
    identity,
    rotate90cw,
    rotate90ccw,
    rotate180,
    transpose,
    reflect_rows,
    reflect_cols,
};

Matrix apply_symmetry(const Matrix& m, SymmetryOp op);

// Text format: one row per line, '.'/'0' for 0 and '1'/'X' for 1; blank
// lines and lines starting with '#' are skipped. Throws FormatError with a
// 1-based position on bad input.
Matrix parse_matrix(const std::string& text);

// Canonical rendering: '.' and '1', rows joined by '\n', no trailing newline.
std::string format_matrix(const Matrix& m);

}  // namespace satmat
