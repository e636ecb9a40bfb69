#pragma once

#include <string>
#include <utility>
#include <vector>

#include "satmat/classify.hpp"
#include "satmat/search.hpp"

namespace satmat {

struct NamedMatrix {
    std::string name;
    Matrix matrix;
    std::string note;
};

// Built-in matrix by name (case-sensitive). Throws LookupError listing the
// known names when absent.
const NamedMatrix& builtin(const std::string& name);

std::vector<std::string> builtin_names();

// One row of the classification survey.
struct ClassRecord {
    explicit ClassRecord(Matrix canonical_form) : canonical(std::move(canonical_form)) {}

    Matrix canonical;
    int size = 0;
    bool once_separable = false;  // always false: separable classes are skipped
    OuterClass outer_class_up_to_reflection = OuterClass::neither;
    int max_anti_identity_height = 0;  // measured on the aligned orbit member
    bool almost_q1 = false;
    bool wp_avoids_pattern = false;
    std::string certificate;   // "q1-like" | "almost-q1" | "witness" | "unproven"
    std::string witness_name;  // catalog name backing a "witness" certificate
};

// Surveys every not-once-separable permutation class of size 2..max_size up
// to the symmetry group g; max_size in 1..7. Records are ordered by size,
// then canonical form.
std::vector<ClassRecord> classification_report(int max_size, SymmetryGroup g,
                                               Exec exec = Exec::parallel);

}  // namespace satmat
