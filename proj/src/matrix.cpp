#include "satmat/matrix.hpp"

#include <bit>
#include <sstream>

namespace satmat {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols), row_bits_(0) {
    if (rows < 1 || cols < 1)
        throw ContractError("matrix dimensions must be positive");
    if (rows > max_dim || cols > max_dim)
        throw ContractError("matrix dimensions are limited to 64");
    row_bits_.assign(rows, 0);
}

int Matrix::weight() const {
    int w = 0;
    for (auto bits : row_bits_) w += std::popcount(bits);
    return w;
}

bool Matrix::all_zero() const {
    for (auto bits : row_bits_)
        if (bits) return false;
    return true;
}

bool Matrix::col_empty(int j) const {
    for (auto bits : row_bits_)
        if (bits >> j & 1) return false;
    return true;
}

bool matrix_less(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) return a.rows() < b.rows();
    if (a.cols() != b.cols()) return a.cols() < b.cols();
    for (int i = 0; i < a.rows(); ++i) {
        std::uint64_t x = a.row_bits(i), y = b.row_bits(i);
        if (x != y) {
            int j = std::countr_zero(x ^ y);  // first column where they differ
            return !(x >> j & 1);             // 0 sorts before 1
        }
    }
    return false;
}

Matrix apply_symmetry(const Matrix& m, SymmetryOp op) {
    int r = m.rows(), c = m.cols();
    auto remapped = [&](int nr, int nc, auto cell) {
        Matrix out(nr, nc);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                if (m.get(i, j)) {
                    auto [ni, nj] = cell(i, j);
                    out.set(ni, nj, true);
                }
        return out;
    };
    using P = std::pair<int, int>;
    switch (op) {
        case SymmetryOp::identity:
            return m;
        case SymmetryOp::rotate90cw:
            return remapped(c, r, [&](int i, int j) { return P{j, r - 1 - i}; });
        case SymmetryOp::rotate90ccw:
            return remapped(c, r, [&](int i, int j) { return P{c - 1 - j, i}; });
        case SymmetryOp::rotate180:
            return remapped(r, c, [&](int i, int j) { return P{r - 1 - i, c - 1 - j}; });
        case SymmetryOp::transpose:
            return remapped(c, r, [&](int i, int j) { return P{j, i}; });
        case SymmetryOp::reflect_rows:
            return remapped(r, c, [&](int i, int j) { return P{r - 1 - i, j}; });
        case SymmetryOp::reflect_cols:
            return remapped(r, c, [&](int i, int j) { return P{i, c - 1 - j}; });
    }
    throw ContractError("apply_symmetry: unknown operation");
}

Matrix parse_matrix(const std::string& text) {
    struct Line {
        std::string data;
        int number;  // 1-based position in the input
    };
    std::vector<Line> rows;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        bool blank = line.find_first_not_of(" \t") == std::string::npos;
        if (blank || line[0] == '#') continue;
        rows.push_back({line, lineno});
    }
    if (rows.empty()) throw FormatError("no matrix rows in input");
    if ((int)rows.size() > Matrix::max_dim)
        throw FormatError("too many rows (limit " + std::to_string(Matrix::max_dim) + ")");
    std::size_t width = rows[0].data.size();
    if ((int)width > Matrix::max_dim)
        throw FormatError("too many columns (limit " + std::to_string(Matrix::max_dim) + ")");
    Matrix out((int)rows.size(), (int)width);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& [data, number] = rows[i];
        if (data.size() != width)
            throw FormatError("line " + std::to_string(number) + ": expected " +
                              std::to_string(width) + " columns, got " +
                              std::to_string(data.size()));
        for (std::size_t j = 0; j < width; ++j) {
            char ch = data[j];
            if (ch == '1' || ch == 'X')
                out.set((int)i, (int)j, true);
            else if (ch != '.' && ch != '0')
                throw FormatError("line " + std::to_string(number) + ", column " +
                                  std::to_string(j + 1) + ": bad character '" +
                                  std::string(1, ch) + "'");
        }
    }
    return out;
}

std::string format_matrix(const Matrix& m) {
    std::string out;
    out.reserve((std::size_t)m.rows() * (m.cols() + 1));
    for (int i = 0; i < m.rows(); ++i) {
        if (i) out += '\n';
        for (int j = 0; j < m.cols(); ++j) out += m.get(i, j) ? '1' : '.';
    }
    return out;
}

}  // namespace satmat
