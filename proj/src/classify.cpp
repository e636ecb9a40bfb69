#include "satmat/classify.hpp"

#include <algorithm>
#include <bit>

namespace satmat {

namespace {

constexpr std::uint64_t low_mask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

bool has_empty_line(const Matrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        if (m.row_empty(i)) return true;
    for (int j = 0; j < m.cols(); ++j)
        if (m.col_empty(j)) return true;
    return false;
}

// Exact relative order of the outer 1-entries of one matrix, no reflections.
OuterClass outer_exact(const Matrix& m) {
    std::vector<std::pair<int, int>> outer;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.get(i, j) &&
                (i == 0 || i == m.rows() - 1 || j == 0 || j == m.cols() - 1))
                outer.push_back({i, j});
    if (outer.size() != 4) return OuterClass::neither;
    std::vector<int> rows, cols;
    for (auto [i, j] : outer) rows.push_back(i), cols.push_back(j);
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    if (std::unique(rows.begin(), rows.end()) != rows.end()) return OuterClass::neither;
    if (std::unique(cols.begin(), cols.end()) != cols.end()) return OuterClass::neither;
    // collapse to the 4x4 relative configuration
    int word[4];  // word[row rank] = column rank
    for (auto [i, j] : outer) {
        int ri = (int)(std::lower_bound(rows.begin(), rows.end(), i) - rows.begin());
        int cj = (int)(std::lower_bound(cols.begin(), cols.end(), j) - cols.begin());
        word[ri] = cj;
    }
    if (word[0] == 1 && word[1] == 0 && word[2] == 3 && word[3] == 2)
        return OuterClass::q0_like;
    if (word[0] == 2 && word[1] == 0 && word[2] == 3 && word[3] == 1)
        return OuterClass::q1_like;
    return OuterClass::neither;
}

}  // namespace

bool is_permutation(const Pattern& p) {
    const Matrix& m = p.matrix();
    if (m.rows() != m.cols()) return false;
    std::uint64_t seen = 0;
    for (int i = 0; i < m.rows(); ++i) {
        std::uint64_t bits = m.row_bits(i);
        if (std::popcount(bits) != 1) return false;
        if (seen & bits) return false;
        seen |= bits;
    }
    return seen == low_mask(m.cols());
}

std::optional<Split> is_once_separable(const Pattern& p) {
    const Matrix& m = p.matrix();
    for (int r = 1; r < m.rows(); ++r)
        for (int c = 1; c < m.cols(); ++c) {
            std::uint64_t left = low_mask(c);
            std::uint64_t top_left = 0, top_right = 0, bottom_left = 0, bottom_right = 0;
            for (int i = 0; i < r; ++i) {
                top_left |= m.row_bits(i) & left;
                top_right |= m.row_bits(i) & ~left;
            }
            for (int i = r; i < m.rows(); ++i) {
                bottom_left |= m.row_bits(i) & left;
                bottom_right |= m.row_bits(i) & ~left;
            }
            if (top_left && bottom_right && !top_right && !bottom_left)
                return Split{r, c, SplitOrientation::diagonal};
            if (top_right && bottom_left && !top_left && !bottom_right)
                return Split{r, c, SplitOrientation::antidiagonal};
        }
    return std::nullopt;
}

bool is_trivial(const Pattern& p) {
    const Matrix& m = p.matrix();
    bool lone_first_col = false, lone_last_col = false;
    bool lone_first_row = false, lone_last_row = false;
    for (int i = 0; i < m.rows(); ++i) {
        std::uint64_t bits = m.row_bits(i);
        if (std::popcount(bits) != 1) continue;
        int j = std::countr_zero(bits);
        if (j == 0) lone_first_col = true;
        if (j == m.cols() - 1) lone_last_col = true;
    }
    for (int j = 0; j < m.cols(); ++j) {
        int count = 0, row = -1;
        for (int i = 0; i < m.rows(); ++i)
            if (m.get(i, j)) ++count, row = i;
        if (count != 1) continue;
        if (row == 0) lone_first_row = true;
        if (row == m.rows() - 1) lone_last_row = true;
    }
    return !(lone_first_col && lone_last_col && lone_first_row && lone_last_row);
}

std::pair<OuterClass, OuterClass> outer_class(const Pattern& p) {
    const Matrix& m = p.matrix();
    if (has_empty_line(m))
        throw ContractError("outer_class: pattern has an empty row or column");
    OuterClass primary = outer_exact(m);
    OuterClass up_to = primary;
    if (up_to == OuterClass::neither)
        up_to = outer_exact(apply_symmetry(m, SymmetryOp::reflect_rows));
    if (up_to == OuterClass::neither)
        up_to = outer_exact(apply_symmetry(m, SymmetryOp::reflect_cols));
    return {primary, up_to};
}

std::vector<AntiIdentityOccurrence> anti_identity_occurrences(const Matrix& m,
                                                              int min_height) {
    if (min_height < 2)
        throw ContractError("anti_identity_occurrences: min height must be >= 2");
    std::vector<std::pair<int, int>> ones;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.get(i, j)) ones.push_back({i, j});
    std::vector<AntiIdentityOccurrence> out;
    for (auto [ti, tj] : ones)
        for (auto [bi, bj] : ones)
            if (bi > ti && bj < tj && bi - ti + 1 >= min_height)
                out.push_back({ti, tj, bi, bj, bi - ti + 1});
    return out;
}

int max_anti_identity_height(const Matrix& m) {
    std::vector<std::pair<int, int>> ones;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.get(i, j)) ones.push_back({i, j});
    int best = 0;
    for (auto [ti, tj] : ones)
        for (auto [bi, bj] : ones)
            if (bi > ti && bj < tj) best = std::max(best, bi - ti + 1);
    return best;
}

ClassLabel classify(const Pattern& p) {
    ClassLabel out;
    out.is_permutation = is_permutation(p);
    out.once_separable = is_once_separable(p).has_value();
    out.trivial = is_trivial(p);
    if (!has_empty_line(p.matrix())) {
        auto [exact, up_to] = outer_class(p);
        out.outer_class = exact;
        out.outer_class_up_to_reflection = up_to;
    }
    out.max_anti_identity_height = max_anti_identity_height(p.matrix());
    return out;
}

const char* to_string(OuterClass c) {
    switch (c) {
        case OuterClass::q0_like: return "Q0like";
        case OuterClass::q1_like: return "Q1like";
        case OuterClass::neither: return "neither";
    }
    return "?";
}

const char* to_string(SplitOrientation o) {
    return o == SplitOrientation::diagonal ? "diagonal" : "antidiagonal";
}

}  // namespace satmat
