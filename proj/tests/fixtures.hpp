#pragma once

// Shared test fixtures: the expected 6x6 survey classes and frozen expected
// values for the tiny sat/ex instances.

#include <array>
#include <string>
#include <vector>

#include "satmat/matrix.hpp"

namespace satmat::fixtures {

// The sixteen 6x6 entries of the small-pattern classification table (the
// not-once-separable Q0-like classes up to reflection), plus whether each is
// covered by a named witness rather than the height-(k-1) argument.
struct TableEntry {
    const char* text;
    const char* witness;  // nullptr when the height argument applies
    bool wp_avoids;       // does the doubling construction avoid the aligned member
};

inline const std::vector<TableEntry>& size6_q0_table() {
    static const std::vector<TableEntry> table = {
        {"...1..\n1.....\n.1....\n.....1\n..1...\n....1.", nullptr, true},
        {"..1...\n1.....\n.....1\n.1....\n...1..\n....1.", "W6", true},
        {"..1...\n1.....\n....1.\n.1....\n.....1\n...1..", "W8", true},
        {"..1...\n1.....\n.....1\n.1....\n....1.\n...1..", "W7", true},
        {"...1..\n1.....\n.....1\n.1....\n..1...\n....1.", nullptr, true},
        {"..1...\n1.....\n...1..\n.....1\n.1....\n....1.", nullptr, true},
        {"..1...\n1.....\n.....1\n...1..\n.1....\n....1.", nullptr, true},
        {"..1...\n1.....\n....1.\n.....1\n.1....\n...1..", nullptr, true},
        {"..1...\n1.....\n.....1\n....1.\n.1....\n...1..", nullptr, true},
        {"...1..\n1.....\n..1...\n.....1\n.1....\n....1.", nullptr, true},
        {"...1..\n1.....\n.....1\n..1...\n.1....\n....1.", nullptr, true},
        {".1....\n...1..\n1.....\n.....1\n..1...\n....1.", "W9", false},
        {".1....\n....1.\n1.....\n.....1\n..1...\n...1..", nullptr, true},
        {".1....\n...1..\n1.....\n.....1\n....1.\n..1...", nullptr, true},
        {".1....\n....1.\n1.....\n.....1\n...1..\n..1...", nullptr, true},
        {"..1...\n....1.\n1.....\n.....1\n.1....\n...1..", nullptr, true},
    };
    return table;
}

// A pair that differs only in the last row: the first keeps a column whose
// unique 1 sits in the first row, the second does not.
inline Matrix nontrivial_example() {
    return parse_matrix("..1.\n1...\n...1\n11..");
}

inline Matrix trivial_example() {
    return parse_matrix("..1.\n1...\n...1\n.11.");
}

// Frozen values from an independent exhaustive computation: sat and ex agree
// on every grid up to 4x4 for these four patterns.
inline int expected_tiny_value(const std::string& pattern, int rows, int cols) {
    if (pattern == "1") return 0;
    if (pattern == "11") return rows;
    if (pattern == "1.\n.1" || pattern == ".1\n1.") return rows + cols - 1;
    return -1;
}

}  // namespace satmat::fixtures
