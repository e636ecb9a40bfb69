#include "satmat/catalog.hpp"

#include <algorithm>

#include "satmat/witness.hpp"

namespace satmat {

namespace {

std::vector<NamedMatrix> make_builtins() {
    auto entry = [](const char* name, const char* text, const char* note) {
        return NamedMatrix{name, parse_matrix(text), note};
    };
    std::vector<NamedMatrix> out;
    out.push_back(entry("Q0",
                        ".1..\n"
                        "1...\n"
                        "...1\n"
                        "..1.",
                        "4x4 permutation: two nested 2x2 descents, once-separable"));
    out.push_back(entry("Q1",
                        "..1.\n"
                        "1...\n"
                        "...1\n"
                        ".1..",
                        "4x4 permutation, the crossing outer configuration"));
    out.push_back(entry("Q2",
                        "...1.\n"
                        "1....\n"
                        "..1..\n"
                        "....1\n"
                        ".1...",
                        "5x5 permutation with crossing outer entries"));
    out.push_back(entry("Q3",
                        "...1.\n"
                        "1....\n"
                        ".1...\n"
                        "....1\n"
                        "..1..",
                        "5x5 permutation with crossing outer entries"));
    out.push_back(entry("Q4",
                        "...1.\n"
                        "1....\n"
                        "....1\n"
                        ".1...\n"
                        "..1..",
                        "5x5 permutation with crossing outer entries"));
    out.push_back(entry("Q5",
                        "..1..\n"
                        "1....\n"
                        "....1\n"
                        ".1...\n"
                        "...1.",
                        "5x5 permutation with nested outer entries and a "
                        "height-4 descent"));
    out.push_back(entry("Q6",
                        "..1...\n"
                        "1.....\n"
                        ".....1\n"
                        ".1....\n"
                        "...1..\n"
                        "....1.",
                        "6x6 permutation certified through the witness W6"));
    out.push_back(entry("Q7",
                        "..1...\n"
                        "1.....\n"
                        ".....1\n"
                        ".1....\n"
                        "....1.\n"
                        "...1..",
                        "6x6 permutation certified through the witness W7"));
    out.push_back(entry("Q8",
                        "..1...\n"
                        "1.....\n"
                        "....1.\n"
                        ".1....\n"
                        ".....1\n"
                        "...1..",
                        "6x6 permutation certified through the witness W8"));
    out.push_back(entry("Q9",
                        ".1....\n"
                        "...1..\n"
                        "1.....\n"
                        ".....1\n"
                        "..1...\n"
                        "....1.",
                        "6x6 permutation certified through the witness W9"));
    out.push_back(entry("W6",
                        "..1.......\n"
                        "1.....1...\n"
                        "..........\n"
                        ".1.......1\n"
                        "...1.1....\n"
                        "....1..1..\n"
                        "........1.",
                        "vertical witness for Q6 from the doubling construction"));
    out.push_back(entry("W7",
                        "..1.......\n"
                        "1.....1...\n"
                        "..........\n"
                        ".1.......1\n"
                        "....11....\n"
                        "...1....1.\n"
                        ".......1..",
                        "vertical witness for Q7 from the doubling construction"));
    out.push_back(entry("W8",
                        "..1.......\n"
                        "1.........\n"
                        "....1.....\n"
                        ".1....1...\n"
                        "..........\n"
                        "...1....1.\n"
                        ".....1....\n"
                        ".........1\n"
                        ".......1..",
                        "vertical witness for Q8 from the doubling construction"));
    out.push_back(entry("W9",
                        ".1...1....\n"
                        "...1......\n"
                        "1......1..\n"
                        "..........\n"
                        "..1......1\n"
                        "....1.1...\n"
                        "........1.",
                        "hand-adjusted vertical witness for Q9 (one entry moved "
                        "off the doubling construction)"));
    out.push_back(entry("WQ1",
                        "..1...\n"
                        "1...1.\n"
                        "......\n"
                        ".1...1\n"
                        "...1..",
                        "vertical witness for Q1 from the doubling construction"));
    out.push_back(entry("WIT_Q1",
                        ".........1.\n"
                        ".......1...\n"
                        "..........1\n"
                        "......1....\n"
                        ".........1.\n"
                        ".......1...\n"
                        "..1........\n"
                        "1...1......\n"
                        "...........\n"
                        ".1...1.....\n"
                        "...1.......",
                        "full witness for Q1: WQ1 rotated a quarter turn "
                        "composed over WQ1"));
    out.push_back(entry("EXPL_Q1",
                        "1111.111.11\n"
                        ".......1.11\n"
                        ".....111.11\n"
                        ".....111.1.\n"
                        ".....1.1.1.\n"
                        ".111.1.1.11\n"
                        ".111.1.....\n"
                        "11.111.....\n"
                        "...........\n"
                        "11.111.....\n"
                        "1..111...11",
                        "saturated (explicit) witness for Q1 containing WIT_Q1"));
    return out;
}

const std::vector<NamedMatrix>& builtins() {
    static const std::vector<NamedMatrix> table = make_builtins();
    return table;
}

// Orbit member with a definite outer configuration, preferring the least
// one. Exists for every not-once-separable permutation class of size >= 4:
// such matrices keep their corners empty, so some reflection lines the four
// outer entries up with Q0 or Q1.
std::pair<Matrix, OuterClass> aligned_member(const std::vector<Matrix>& orbit) {
    for (const Matrix& member : orbit) {
        OuterClass c = outer_class(Pattern(member, /*strict=*/true)).first;
        if (c != OuterClass::neither) return {member, c};
    }
    throw ContractError("classification_report: class has no aligned member");
}

ClassRecord build_record(const Matrix& rep, SymmetryGroup g) {
    int k = rep.rows();
    ClassRecord rec(rep);
    rec.size = k;
    rec.once_separable = false;
    auto orbit = symmetry_orbit(rep, g);
    auto [aligned, cls] = aligned_member(orbit);
    rec.outer_class_up_to_reflection = cls;
    rec.max_anti_identity_height = max_anti_identity_height(aligned);
    rec.almost_q1 =
        cls == OuterClass::q0_like && rec.max_anti_identity_height >= k - 1;
    Pattern ap(aligned, /*strict=*/true);
    rec.wp_avoids_pattern = !contains(construct_w(ap).result, ap).has_value();
    if (cls == OuterClass::q1_like) {
        rec.certificate = "q1-like";
    } else if (rec.almost_q1) {
        rec.certificate = "almost-q1";
    } else {
        rec.certificate = "unproven";
        for (const char* name : {"Q6", "Q7", "Q8", "Q9"}) {
            if (canonical_form(builtin(name).matrix, g) == rep) {
                rec.certificate = "witness";
                rec.witness_name = std::string("W") + name[1];
                break;
            }
        }
    }
    return rec;
}

}  // namespace

const NamedMatrix& builtin(const std::string& name) {
    for (const NamedMatrix& nm : builtins())
        if (nm.name == name) return nm;
    std::string known;
    for (const NamedMatrix& nm : builtins()) {
        if (!known.empty()) known += ", ";
        known += nm.name;
    }
    throw LookupError("unknown catalog name '" + name + "' (known: " + known + ")");
}

std::vector<std::string> builtin_names() {
    std::vector<std::string> out;
    for (const NamedMatrix& nm : builtins()) out.push_back(nm.name);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ClassRecord> classification_report(int max_size, SymmetryGroup g,
                                               Exec exec) {
    if (max_size < 1 || max_size > 7)
        throw ContractError("classification_report: max size must be in 1..7");
    std::vector<Matrix> reps;
    for (int k = 2; k <= max_size; ++k) {
        std::vector<Matrix> canon;
        for (const Pattern& p : enumerate_permutations(k)) {
            if (is_once_separable(p)) continue;
            canon.push_back(canonical_form(p.matrix(), g));
        }
        std::sort(canon.begin(), canon.end(), matrix_less);
        canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
        reps.insert(reps.end(), canon.begin(), canon.end());
    }
    std::vector<ClassRecord> out(reps.size(), ClassRecord(Matrix(1, 1)));
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::size_t i = 0; i < reps.size(); ++i)
            out[i] = build_record(reps[i], g);
    } else {
        for (std::size_t i = 0; i < reps.size(); ++i)
            out[i] = build_record(reps[i], g);
    }
    return out;
}

}  // namespace satmat
