#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "satmat/contains.hpp"

namespace satmat {

// Relative order of the four outer 1-entries, when there are exactly four in
// distinct rows and columns.
enum class OuterClass { q0_like, q1_like, neither };

enum class SplitOrientation { diagonal, antidiagonal };

// Witness of once-separability: the pattern splits into two nonzero blocks
// after `row` rows and `col` columns, the other two blocks all zero.
// diagonal puts the blocks top-left/bottom-right, antidiagonal the other way.
struct Split {
    int row = 0;  // rows in the top part, 1 <= row < total rows
    int col = 0;  // columns in the left part
    SplitOrientation orientation = SplitOrientation::diagonal;
};

// Pair of 1-entries with the bottom one strictly left of the top one.
// 0-based cells; height = bottom_row - top_row + 1.
struct AntiIdentityOccurrence {
    int top_row, top_col;
    int bottom_row, bottom_col;
    int height;
};

struct ClassLabel {
    bool is_permutation = false;
    bool once_separable = false;
    bool trivial = false;
    OuterClass outer_class = OuterClass::neither;
    OuterClass outer_class_up_to_reflection = OuterClass::neither;
    int max_anti_identity_height = 0;
};

bool is_permutation(const Pattern& p);

// First split found scanning row, then column, diagonal before antidiagonal.
std::optional<Split> is_once_separable(const Pattern& p);

// A pattern is non-trivial when some row's unique 1 sits in the first
// column, some row's unique 1 in the last column, some column's unique 1 in
// the first row, and some column's unique 1 in the last row.
bool is_trivial(const Pattern& p);

// (exact class, class up to row/column reflection). Requires no empty rows
// or columns, else ContractError.
std::pair<OuterClass, OuterClass> outer_class(const Pattern& p);

// All anti-identity pairs of height >= min_height (>= 2, else ContractError),
// ordered by top cell then bottom cell, row-major.
std::vector<AntiIdentityOccurrence> anti_identity_occurrences(const Matrix& m,
                                                              int min_height);

// Largest height over all anti-identity pairs; 0 if none.
int max_anti_identity_height(const Matrix& m);

ClassLabel classify(const Pattern& p);

const char* to_string(OuterClass c);
const char* to_string(SplitOrientation o);

}  // namespace satmat
