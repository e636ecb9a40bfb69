#pragma once

#include <chrono>
#include <vector>

#include "satmat/contains.hpp"
#include "satmat/exec.hpp"

namespace satmat {

struct SearchBudget {
    int max_cells = 20;  // refuse grids with more cells than this
    std::chrono::duration<double> time_limit{0};  // <= 0 means unlimited
};

enum class SymmetryGroup {
    reflections_only,          // row/column reflections and their closure
    rotations_and_reflections, // the full dihedral group of the square
    full,                      // rotations, reflections and transposition
};

struct SearchResult {
    int value = 0;
    Matrix attaining;  // lexicographically least matrix attaining value
};

// True when m avoids p and flipping any 0 creates an occurrence through it.
bool is_saturated(const Matrix& m, const Pattern& p, Exec exec = Exec::parallel);

// Minimum weight of a saturated rows x cols matrix, with the least attaining
// matrix. Exhaustive over weight classes in increasing order. Throws
// ResourceError (carrying the best proven bound) if the budget runs out.
SearchResult sat_exact(const Pattern& p, int rows, int cols,
                       const SearchBudget& budget = {}, Exec exec = Exec::parallel);

// Maximum weight of an avoiding rows x cols matrix, with the least attaining
// matrix.
SearchResult ex_exact(const Pattern& p, int rows, int cols,
                      const SearchBudget& budget = {}, Exec exec = Exec::parallel);

// All k x k permutation matrices in lexicographic order of the permutation
// word; k in 1..8, else ContractError.
std::vector<Pattern> enumerate_permutations(int k);

std::vector<Matrix> symmetry_orbit(const Matrix& m, SymmetryGroup g);

// Least orbit member under matrix_less.
Matrix canonical_form(const Matrix& m, SymmetryGroup g);

}  // namespace satmat
