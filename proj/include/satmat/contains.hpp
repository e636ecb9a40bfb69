#pragma once

#include <optional>
#include <vector>

#include "satmat/pattern.hpp"

namespace satmat {

// Strictly increasing row and column maps taking every 1-entry of a pattern
// to a 1-entry of the host. 0-based.
struct Occurrence {
    std::vector<int> row_map;
    std::vector<int> col_map;
};

// Finds the lexicographically first occurrence of p in host (by row map,
// then column map), or nullopt if host avoids p.
std::optional<Occurrence> contains(const Matrix& host, const Pattern& p);

// Like contains, but the occurrence must use host cell (row, col) — a
// 1-entry, else ContractError — as the image of some 1-entry of p.
std::optional<Occurrence> contains_using(const Matrix& host, const Pattern& p,
                                         int row, int col);

// Independent re-check that occ embeds p into host.
bool occurrence_valid(const Matrix& host, const Pattern& p, const Occurrence& occ);

}  // namespace satmat
