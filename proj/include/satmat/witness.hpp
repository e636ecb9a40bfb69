#pragma once

#include <vector>

#include "satmat/contains.hpp"
#include "satmat/exec.hpp"

namespace satmat {

struct WitnessReport {
    bool avoids = false;
    std::vector<int> expandable_rows;  // 0-based
    std::vector<int> expandable_cols;
    bool vertical = false;    // avoids and has an expandable row
    bool horizontal = false;  // avoids and has an expandable column
    bool full = false;        // both
    bool explicit_witness = false;  // full and saturated
    int pattern_rows = 0, pattern_cols = 0;
    int matrix_rows = 0, matrix_cols = 0;
};

// Doubling construction for a k x k pattern whose first and last columns each
// hold exactly one 1-entry, in distinct rows s < t (the pattern is reflected
// upside down first when s > t). Output is (k + t - s) x (2k - 2): two
// overlapping copies of the pattern minus its outer columns, the second
// shifted down by t - s, leaving row t empty. 0-based fields.
struct WConstruction {
    Matrix result;
    int k = 0;
    int s = 0, t = 0;      // after any reflection, so s < t
    int empty_row = 0;     // == t
    bool reflected = false;
};

WConstruction construct_w(const Pattern& p);

// Empty rows (resp. columns) where every single added 1 creates a new
// occurrence of p through the added cell.
std::vector<int> expandable_rows(const Matrix& m, const Pattern& p,
                                 Exec exec = Exec::parallel);
std::vector<int> expandable_cols(const Matrix& m, const Pattern& p,
                                 Exec exec = Exec::parallel);

WitnessReport verify_witness(const Matrix& m, const Pattern& p,
                             Exec exec = Exec::parallel);

// Greedy completion: flips every 0 whose flip creates no occurrence, in
// row-major order. Input must avoid p; result is saturated.
Matrix saturate(Matrix m, const Pattern& p);

// Puts a horizontal witness top-right and a vertical witness bottom-left of
// a zero diagonal, yielding a full witness. Requires p strict (no empty
// lines), not once-separable, with exactly one 1-entry in its last row and
// exactly one in its last column. The result is re-verified; a failure
// throws VerificationError with the offending occurrence.
Matrix compose_witnesses(const Matrix& horizontal, const Matrix& vertical,
                         const Pattern& p, Exec exec = Exec::parallel);

enum class ExtendSide { bottom, right };

// Appends `count` zero rows below a horizontal witness (side == bottom,
// requires a unique 1-entry in p's last row) or zero columns after a
// vertical witness (side == right, unique 1-entry in p's last column).
// p must be strict. The extension is re-verified before returning.
Matrix extend_witness(const Matrix& w, ExtendSide side, int count,
                      const Pattern& p, Exec exec = Exec::parallel);

}  // namespace satmat
