#include "satmat/witness.hpp"

#include <algorithm>
#include <string>

#include "satmat/classify.hpp"
#include "satmat/search.hpp"

namespace satmat {

namespace {

// Row of the unique 1-entry in column j, or -1 if the count differs from 1.
int lone_row_in_col(const Matrix& m, int j) {
    int row = -1;
    for (int i = 0; i < m.rows(); ++i)
        if (m.get(i, j)) {
            if (row >= 0) return -1;
            row = i;
        }
    return row;
}

int lone_col_in_row(const Matrix& m, int i) {
    int col = -1;
    for (int j = 0; j < m.cols(); ++j)
        if (m.get(i, j)) {
            if (col >= 0) return -1;
            col = j;
        }
    return col;
}

std::vector<int> one_based(std::vector<int> v) {
    for (int& x : v) ++x;
    return v;
}

// Checks that flipping (i, j) — currently 0 — creates an occurrence through
// it. Restores the cell before returning.
bool flip_creates(Matrix& scratch, const Pattern& p, int i, int j) {
    scratch.set(i, j, true);
    bool hit = contains_using(scratch, p, i, j).has_value();
    scratch.set(i, j, false);
    return hit;
}

bool line_expandable(const Matrix& m, const Pattern& p, int index, bool row,
                     Exec exec) {
    int span = row ? m.cols() : m.rows();
    bool all_hit = true;
    if (exec == Exec::parallel) {
#pragma omp parallel
        {
            Matrix scratch = m;
#pragma omp for reduction(&& : all_hit)
            for (int x = 0; x < span; ++x) {
                int i = row ? index : x;
                int j = row ? x : index;
                all_hit = all_hit && flip_creates(scratch, p, i, j);
            }
        }
    } else {
        Matrix scratch = m;
        for (int x = 0; x < span && all_hit; ++x) {
            int i = row ? index : x;
            int j = row ? x : index;
            all_hit = flip_creates(scratch, p, i, j);
        }
    }
    return all_hit;
}

}  // namespace

WConstruction construct_w(const Pattern& p) {
    const Matrix& pm = p.matrix();
    int k = pm.rows();
    if (pm.rows() != pm.cols())
        throw ContractError("construct_w: pattern must be square");
    if (k < 2) throw ContractError("construct_w: pattern size must be at least 2");
    int s = lone_row_in_col(pm, 0);
    int t = lone_row_in_col(pm, k - 1);
    if (s < 0)
        throw ContractError("construct_w: first column must have exactly one 1-entry");
    if (t < 0)
        throw ContractError("construct_w: last column must have exactly one 1-entry");
    if (s == t)
        throw ContractError(
            "construct_w: the outer-column 1-entries must lie in distinct rows");

    WConstruction out{Matrix(1, 1)};
    out.k = k;
    out.reflected = s > t;
    Matrix base = out.reflected ? apply_symmetry(pm, SymmetryOp::reflect_rows) : pm;
    if (out.reflected) {
        s = k - 1 - s;
        t = k - 1 - t;
    }
    out.s = s;
    out.t = t;
    out.empty_row = t;

    int shift = t - s;
    Matrix w(k + shift, 2 * k - 2);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k - 1; ++j)
            if (base.get(i, j)) w.set(i, j, true);
    for (int i = 0; i < k; ++i)
        for (int j = 1; j < k; ++j)
            if (base.get(i, j)) w.set(i + shift, j + k - 2, true);
    out.result = std::move(w);
    return out;
}

std::vector<int> expandable_rows(const Matrix& m, const Pattern& p, Exec exec) {
    std::vector<int> out;
    for (int i = 0; i < m.rows(); ++i)
        if (m.row_empty(i) && line_expandable(m, p, i, /*row=*/true, exec))
            out.push_back(i);
    return out;
}

std::vector<int> expandable_cols(const Matrix& m, const Pattern& p, Exec exec) {
    std::vector<int> out;
    for (int j = 0; j < m.cols(); ++j)
        if (m.col_empty(j) && line_expandable(m, p, j, /*row=*/false, exec))
            out.push_back(j);
    return out;
}

WitnessReport verify_witness(const Matrix& m, const Pattern& p, Exec exec) {
    WitnessReport rep;
    rep.pattern_rows = p.rows();
    rep.pattern_cols = p.cols();
    rep.matrix_rows = m.rows();
    rep.matrix_cols = m.cols();
    rep.avoids = !contains(m, p).has_value();
    rep.expandable_rows = expandable_rows(m, p, exec);
    rep.expandable_cols = expandable_cols(m, p, exec);
    rep.vertical = rep.avoids && !rep.expandable_rows.empty();
    rep.horizontal = rep.avoids && !rep.expandable_cols.empty();
    rep.full = rep.vertical && rep.horizontal;
    rep.explicit_witness = rep.full && is_saturated(m, p, exec);
    return rep;
}

Matrix saturate(Matrix m, const Pattern& p) {
    if (contains(m, p))
        throw ContractError("saturate: matrix already contains the pattern");
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (m.get(i, j)) continue;
            m.set(i, j, true);
            if (contains_using(m, p, i, j)) m.set(i, j, false);
        }
    return m;
}

Matrix compose_witnesses(const Matrix& horizontal, const Matrix& vertical,
                         const Pattern& p, Exec exec) {
    const Matrix& pm = p.matrix();
    for (int i = 0; i < pm.rows(); ++i)
        if (pm.row_empty(i))
            throw ContractError("compose_witnesses: pattern has an empty row");
    for (int j = 0; j < pm.cols(); ++j)
        if (pm.col_empty(j))
            throw ContractError("compose_witnesses: pattern has an empty column");
    if (is_once_separable(p))
        throw ContractError("compose_witnesses: pattern is once-separable");
    if (lone_col_in_row(pm, pm.rows() - 1) < 0)
        throw ContractError(
            "compose_witnesses: pattern's last row must have exactly one 1-entry");
    if (lone_row_in_col(pm, pm.cols() - 1) < 0)
        throw ContractError(
            "compose_witnesses: pattern's last column must have exactly one 1-entry");
    if (!verify_witness(horizontal, p, exec).horizontal)
        throw ContractError(
            "compose_witnesses: first argument is not a horizontal witness");
    if (!verify_witness(vertical, p, exec).vertical)
        throw ContractError(
            "compose_witnesses: second argument is not a vertical witness");

    int top_rows = horizontal.rows(), left_cols = vertical.cols();
    Matrix out(top_rows + vertical.rows(), left_cols + horizontal.cols());
    for (int i = 0; i < horizontal.rows(); ++i)
        for (int j = 0; j < horizontal.cols(); ++j)
            if (horizontal.get(i, j)) out.set(i, left_cols + j, true);
    for (int i = 0; i < vertical.rows(); ++i)
        for (int j = 0; j < vertical.cols(); ++j)
            if (vertical.get(i, j)) out.set(top_rows + i, j, true);

    if (auto occ = contains(out, p))
        throw VerificationError("compose_witnesses: result contains the pattern",
                                one_based(occ->row_map), one_based(occ->col_map));
    if (!verify_witness(out, p, exec).full)
        throw VerificationError("compose_witnesses: result is not a full witness");
    return out;
}

Matrix extend_witness(const Matrix& w, ExtendSide side, int count,
                      const Pattern& p, Exec exec) {
    if (count < 1) throw ContractError("extend_witness: count must be positive");
    const Matrix& pm = p.matrix();
    for (int i = 0; i < pm.rows(); ++i)
        if (pm.row_empty(i))
            throw ContractError("extend_witness: pattern has an empty row");
    for (int j = 0; j < pm.cols(); ++j)
        if (pm.col_empty(j))
            throw ContractError("extend_witness: pattern has an empty column");
    if (side == ExtendSide::bottom) {
        if (lone_col_in_row(pm, pm.rows() - 1) < 0)
            throw ContractError(
                "extend_witness: pattern's last row must have exactly one 1-entry");
        if (!verify_witness(w, p, exec).horizontal)
            throw ContractError("extend_witness: matrix is not a horizontal witness");
        Matrix out(w.rows() + count, w.cols());
        for (int i = 0; i < w.rows(); ++i)
            for (int j = 0; j < w.cols(); ++j)
                if (w.get(i, j)) out.set(i, j, true);
        if (auto occ = contains(out, p))
            throw VerificationError("extend_witness: result contains the pattern",
                                    one_based(occ->row_map), one_based(occ->col_map));
        if (!verify_witness(out, p, exec).horizontal)
            throw VerificationError(
                "extend_witness: result is not a horizontal witness");
        return out;
    }
    if (lone_row_in_col(pm, pm.cols() - 1) < 0)
        throw ContractError(
            "extend_witness: pattern's last column must have exactly one 1-entry");
    if (!verify_witness(w, p, exec).vertical)
        throw ContractError("extend_witness: matrix is not a vertical witness");
    Matrix out(w.rows(), w.cols() + count);
    for (int i = 0; i < w.rows(); ++i)
        for (int j = 0; j < w.cols(); ++j)
            if (w.get(i, j)) out.set(i, j, true);
    if (auto occ = contains(out, p))
        throw VerificationError("extend_witness: result contains the pattern",
                                one_based(occ->row_map), one_based(occ->col_map));
    if (!verify_witness(out, p, exec).vertical)
        throw VerificationError("extend_witness: result is not a vertical witness");
    return out;
}

}  // namespace satmat
