#include "doctest.h"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "satmat/catalog.hpp"
#include "satmat/errors.hpp"
#include "satmat/matrix.hpp"
#include "satmat/search.hpp"
#include "satmat/witness.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace satmat;

namespace {

Matrix from_mask(std::uint64_t mask, int rows, int cols) {
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (mask >> (i * cols + j) & 1) m.set(i, j, true);
    return m;
}

const std::vector<std::string>& tiny_patterns() {
    static const std::vector<std::string> pats = {"1", "11", "1.\n.1", ".1\n1."};
    return pats;
}

}  // namespace

TEST_CASE("saturation detection matches the oracle") {
    Pattern anti(parse_matrix(".1\n1."), true);
    for (int r = 1; r <= 3; ++r)
        for (int c = 1; c <= 3; ++c)
            for (std::uint64_t mask = 0; mask < (1ull << (r * c)); ++mask) {
                Matrix m = from_mask(mask, r, c);
                bool expect = oracle::oracle_is_saturated(m, anti.matrix());
                CHECK(is_saturated(m, anti, Exec::serial) == expect);
                CHECK(is_saturated(m, anti, Exec::parallel) == expect);
            }
}

TEST_CASE("exact saturation numbers match the oracle") {
    for (const std::string& text : tiny_patterns()) {
        Pattern p(parse_matrix(text));
        for (int r = 1; r <= 3; ++r)
            for (int c = 1; c <= 3; ++c) {
                auto expect = oracle::oracle_sat(p.matrix(), r, c);
                SearchResult got = sat_exact(p, r, c);
                CHECK(got.value == expect.value);
                CHECK(got.attaining == expect.attaining);
                SearchResult serial = sat_exact(p, r, c, {}, Exec::serial);
                CHECK(serial.value == got.value);
                CHECK(serial.attaining == got.attaining);
            }
    }
}

TEST_CASE("exact avoidance numbers match the oracle") {
    for (const std::string& text : tiny_patterns()) {
        Pattern p(parse_matrix(text));
        for (int r = 1; r <= 3; ++r)
            for (int c = 1; c <= 3; ++c) {
                auto expect = oracle::oracle_ex(p.matrix(), r, c);
                SearchResult got = ex_exact(p, r, c);
                CHECK(got.value == expect.value);
                CHECK(got.attaining == expect.attaining);
                SearchResult serial = ex_exact(p, r, c, {}, Exec::serial);
                CHECK(serial.value == got.value);
                CHECK(serial.attaining == got.attaining);
            }
    }
}

TEST_CASE("frozen closed forms on all grids up to 4x4") {
    for (const std::string& text : tiny_patterns()) {
        Pattern p(parse_matrix(text));
        for (int r = 1; r <= 4; ++r)
            for (int c = 1; c <= 4; ++c) {
                int expect = fixtures::expected_tiny_value(text, r, c);
                REQUIRE(expect >= 0);
                CHECK(sat_exact(p, r, c).value == expect);
                CHECK(ex_exact(p, r, c).value == expect);
            }
    }
}

TEST_CASE("least attaining matrices are pinned") {
    // Saturation for the single-cell pattern is the zero matrix.
    SearchResult one = sat_exact(Pattern(parse_matrix("1")), 3, 2);
    CHECK(one.value == 0);
    CHECK(one.attaining == Matrix(3, 2));

    // Hand-derived least saturated matrix for the flipped diagonal on 3x3.
    SearchResult anti = sat_exact(Pattern(parse_matrix(".1\n1."), true), 3, 3);
    CHECK(anti.value == 5);
    CHECK(anti.attaining == parse_matrix("1..\n1..\n111"));

    // Avoiding the two-cell row: lone 1 per row, pushed as late as possible.
    SearchResult row = ex_exact(Pattern(parse_matrix("11")), 2, 3);
    CHECK(row.value == 2);
    CHECK(row.attaining == parse_matrix("..1\n..1"));
}

TEST_CASE("resource budgets") {
    Pattern anti(parse_matrix(".1\n1."), true);

    SearchBudget small;
    small.max_cells = 8;
    CHECK_THROWS_AS(sat_exact(anti, 3, 3, small), ResourceError);
    CHECK_THROWS_AS(ex_exact(anti, 3, 3, small), ResourceError);

    SearchBudget instant;
    instant.time_limit = std::chrono::duration<double>(1e-9);
    try {
        sat_exact(anti, 4, 4, instant);
        FAIL("expected ResourceError");
    } catch (const ResourceError& e) {
        CHECK(e.partial_bound >= 0);
        CHECK(std::string(e.what()).find("time limit") != std::string::npos);
    }

    // Dimension validation.
    CHECK_THROWS_AS(sat_exact(anti, 0, 3), ContractError);
    CHECK_THROWS_AS(ex_exact(anti, 3, -1), ContractError);
}

TEST_CASE("permutation enumeration") {
    CHECK(enumerate_permutations(1).size() == 1);
    CHECK(enumerate_permutations(2).size() == 2);
    CHECK(enumerate_permutations(3).size() == 6);
    CHECK(enumerate_permutations(4).size() == 24);

    auto perms = enumerate_permutations(3);
    CHECK(perms.front().matrix() == parse_matrix("1..\n.1.\n..1"));
    CHECK(perms.back().matrix() == parse_matrix("..1\n.1.\n1.."));
    // Lexicographic in the word, so the second is (0 2 1).
    CHECK(perms[1].matrix() == parse_matrix("1..\n..1\n.1."));
    for (const Pattern& p : perms) CHECK(p.strict());

    CHECK_THROWS_AS(enumerate_permutations(0), ContractError);
    CHECK_THROWS_AS(enumerate_permutations(9), ContractError);
}

TEST_CASE("symmetry orbits and canonical forms") {
    Matrix q1 = builtin("Q1").matrix;
    auto refl = symmetry_orbit(q1, SymmetryGroup::reflections_only);
    CHECK(refl.size() == 2);  // half-turn symmetric, so reflections coincide
    CHECK(std::is_sorted(refl.begin(), refl.end(), matrix_less));

    auto dih = symmetry_orbit(q1, SymmetryGroup::rotations_and_reflections);
    CHECK(dih.size() == 2);  // rotation invariant as well
    auto fullg = symmetry_orbit(q1, SymmetryGroup::full);
    CHECK(fullg.size() == 2);

    Matrix q5 = builtin("Q5").matrix;
    CHECK(symmetry_orbit(q5, SymmetryGroup::reflections_only).size() == 4);
    CHECK(symmetry_orbit(q5, SymmetryGroup::rotations_and_reflections).size() == 4);

    // A non-symmetric matrix has the generic orbit sizes.
    Matrix lop = parse_matrix("11.\n..1\n...");
    CHECK(symmetry_orbit(lop, SymmetryGroup::reflections_only).size() == 4);
    CHECK(symmetry_orbit(lop, SymmetryGroup::rotations_and_reflections).size() == 8);
    CHECK(symmetry_orbit(lop, SymmetryGroup::full).size() == 8);

    // Non-square matrices change shape under rotation but the orbit is still
    // closed.
    Matrix wide = parse_matrix("11.\n..1");
    auto worb = symmetry_orbit(wide, SymmetryGroup::rotations_and_reflections);
    CHECK(worb.size() == 8);

    // The canonical form is an orbit invariant and an orbit member.
    for (SymmetryGroup g : {SymmetryGroup::reflections_only,
                            SymmetryGroup::rotations_and_reflections, SymmetryGroup::full}) {
        Matrix canon = canonical_form(q5, g);
        auto orbit = symmetry_orbit(q5, g);
        CHECK(std::find(orbit.begin(), orbit.end(), canon) != orbit.end());
        for (const Matrix& member : orbit) {
            CHECK(canonical_form(member, g) == canon);
            CHECK_FALSE(matrix_less(member, canon));
        }
    }
}

TEST_CASE("saturation numbers never exceed avoidance numbers") {
    Pattern q1(builtin("Q1").matrix);
    SearchBudget b;
    b.max_cells = 16;
    for (int r = 1; r <= 4; ++r) {
        SearchResult s = sat_exact(q1, r, 4, b);
        SearchResult e = ex_exact(q1, r, 4, b);
        CHECK(s.value <= e.value);
        CHECK(is_saturated(s.attaining, q1));
        CHECK_FALSE(contains(e.attaining, q1).has_value());
    }
}
