#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "satmat/catalog.hpp"
#include "satmat/classify.hpp"
#include "satmat/errors.hpp"
#include "satmat/matrix.hpp"
#include "satmat/search.hpp"
#include "satmat/serialize.hpp"
#include "satmat/witness.hpp"
#include "fixtures.hpp"

using namespace satmat;

TEST_CASE("builtin matrices") {
    auto names = builtin_names();
    CHECK(names.size() == 17);
    CHECK(std::is_sorted(names.begin(), names.end()));
    for (const std::string& name : names) {
        const NamedMatrix& nm = builtin(name);
        CHECK(nm.name == name);
        CHECK_FALSE(nm.matrix.all_zero());
        CHECK_FALSE(nm.note.empty());
    }

    // Dimensions of the named families.
    for (const char* q : {"Q0", "Q1"}) CHECK(builtin(q).matrix.rows() == 4);
    for (const char* q : {"Q2", "Q3", "Q4", "Q5"}) CHECK(builtin(q).matrix.rows() == 5);
    for (const char* q : {"Q6", "Q7", "Q8", "Q9"}) CHECK(builtin(q).matrix.rows() == 6);
    for (const char* q : {"Q0", "Q1", "Q2", "Q3", "Q4", "Q5", "Q6", "Q7", "Q8", "Q9"}) {
        CHECK(is_permutation(Pattern(builtin(q).matrix)));
        CHECK(builtin(q).matrix.rows() == builtin(q).matrix.cols());
    }
    CHECK(builtin("WQ1").matrix.rows() == 5);
    CHECK(builtin("WQ1").matrix.cols() == 6);
    for (const char* w : {"W6", "W7", "W9"}) {
        CHECK(builtin(w).matrix.rows() == 7);
        CHECK(builtin(w).matrix.cols() == 10);
    }
    CHECK(builtin("W8").matrix.rows() == 9);
    CHECK(builtin("W8").matrix.cols() == 10);
    for (const char* m : {"WIT_Q1", "EXPL_Q1"}) {
        CHECK(builtin(m).matrix.rows() == 11);
        CHECK(builtin(m).matrix.cols() == 11);
    }

    // The explicit matrix extends the full witness cell by cell.
    const Matrix& wit = builtin("WIT_Q1").matrix;
    const Matrix& expl = builtin("EXPL_Q1").matrix;
    for (int i = 0; i < wit.rows(); ++i)
        for (int j = 0; j < wit.cols(); ++j)
            if (wit.get(i, j)) CHECK(expl.get(i, j));

    try {
        builtin("nope");
        FAIL("expected LookupError");
    } catch (const LookupError& e) {
        std::string msg = e.what();
        CHECK(msg.find("nope") != std::string::npos);
        CHECK(msg.find("Q1") != std::string::npos);  // lists what exists
    }
}

TEST_CASE("builtin matrix checksums") {
    // FNV-1a over the text form pins the exact cell content of every entry.
    auto fnv1a = [](const std::string& text) {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (unsigned char ch : text) {
            h ^= ch;
            h *= 0x100000001b3ull;
        }
        return h;
    };
    const std::map<std::string, std::uint64_t> expected{
        {"EXPL_Q1", 0x132be0114c97287aull}, {"Q0", 0x5c4550e42aa29445ull},
        {"Q1", 0xafac55b07413ae21ull},      {"Q2", 0x8e490d0df4042680ull},
        {"Q3", 0x22e9ad247db3d168ull},      {"Q4", 0x36307a27bb8e0cb4ull},
        {"Q5", 0x5e4cf9ddaf4ad91cull},      {"Q6", 0xc52b24d75aad65fdull},
        {"Q7", 0xd301f1211ab206b1ull},      {"Q8", 0x56ee908f3ed784c1ull},
        {"Q9", 0x4865cd2768c446b9ull},      {"W6", 0x4d7378f25e2fa717ull},
        {"W7", 0xfd350dfca531d23bull},      {"W8", 0xe236383c87dfa2efull},
        {"W9", 0x92b6a7f742b3f30dull},      {"WIT_Q1", 0xe5cbbdbaafc714e3ull},
        {"WQ1", 0xdc2d317423f4f83full},
    };
    auto names = builtin_names();
    REQUIRE(names.size() == expected.size());
    for (const std::string& name : names) {
        REQUIRE(expected.count(name) == 1);
        CHECK(fnv1a(format_matrix(builtin(name).matrix)) == expected.at(name));
    }
}

TEST_CASE("survey sizes and bounds") {
    CHECK_THROWS_AS(classification_report(0, SymmetryGroup::full), ContractError);
    CHECK_THROWS_AS(classification_report(8, SymmetryGroup::full), ContractError);

    CHECK(classification_report(1, SymmetryGroup::full).empty());
    CHECK(classification_report(3, SymmetryGroup::full).empty());

    auto four = classification_report(4, SymmetryGroup::full);
    REQUIRE(four.size() == 1);
    CHECK(four[0].size == 4);
    CHECK(four[0].canonical == canonical_form(builtin("Q1").matrix, SymmetryGroup::full));
    CHECK(four[0].certificate == "q1-like");
    CHECK(four[0].outer_class_up_to_reflection == OuterClass::q1_like);
    CHECK_FALSE(four[0].almost_q1);
    CHECK(four[0].max_anti_identity_height == 4);
    CHECK(four[0].wp_avoids_pattern);

    auto five = classification_report(5, SymmetryGroup::rotations_and_reflections);
    REQUIRE(five.size() == 5);
    CHECK(five[0].size == 4);
    std::set<std::string> canons;
    for (std::size_t i = 1; i < five.size(); ++i) {
        CHECK(five[i].size == 5);
        canons.insert(format_matrix(five[i].canonical));
    }
    std::set<std::string> expect;
    for (const char* q : {"Q2", "Q3", "Q4", "Q5"})
        expect.insert(format_matrix(
            canonical_form(builtin(q).matrix, SymmetryGroup::rotations_and_reflections)));
    CHECK(canons == expect);
    for (std::size_t i = 1; i < five.size(); ++i) {
        const ClassRecord& r = five[i];
        bool q1like = r.outer_class_up_to_reflection == OuterClass::q1_like;
        CHECK(r.certificate == (q1like ? "q1-like" : "almost-q1"));
        if (!q1like) {
            CHECK(r.almost_q1);
            CHECK(r.max_anti_identity_height == 4);
            CHECK(r.wp_avoids_pattern);
        }
    }

    // Records are ordered by size, then canonical form.
    auto six = classification_report(6, SymmetryGroup::reflections_only);
    for (std::size_t i = 1; i < six.size(); ++i) {
        CHECK(six[i - 1].size <= six[i].size);
        if (six[i - 1].size == six[i].size)
            CHECK(matrix_less(six[i - 1].canonical, six[i].canonical));
    }
}

TEST_CASE("size-6 survey matches the recorded table") {
    auto report = classification_report(6, SymmetryGroup::reflections_only);

    std::vector<const ClassRecord*> six;
    for (const ClassRecord& r : report)
        if (r.size == 6) six.push_back(&r);
    CHECK(six.size() == 56);

    std::map<std::string, const ClassRecord*> q0like;
    for (const ClassRecord* r : six) {
        CHECK_FALSE(r->once_separable);
        CHECK_FALSE(r->certificate.empty());
        CHECK(r->certificate != "unproven");
        if (r->outer_class_up_to_reflection == OuterClass::q0_like)
            q0like[format_matrix(r->canonical)] = r;
        else
            CHECK(r->outer_class_up_to_reflection == OuterClass::q1_like);
    }
    CHECK(q0like.size() == 16);

    const auto& table = fixtures::size6_q0_table();
    REQUIRE(table.size() == 16);
    for (const auto& entry : table) {
        Matrix canon =
            canonical_form(parse_matrix(entry.text), SymmetryGroup::reflections_only);
        auto it = q0like.find(format_matrix(canon));
        REQUIRE_MESSAGE(it != q0like.end(), entry.text);
        const ClassRecord& r = *it->second;
        CHECK(r.wp_avoids_pattern == entry.wp_avoids);
        if (entry.witness) {
            CHECK(r.certificate == "witness");
            CHECK(r.witness_name == entry.witness);
            CHECK(r.max_anti_identity_height == 4);
            CHECK_FALSE(r.almost_q1);
        } else {
            CHECK(r.certificate == "almost-q1");
            CHECK(r.witness_name.empty());
            CHECK(r.max_anti_identity_height == 5);
            CHECK(r.almost_q1);
        }
    }

    // Every q0-like canonical form in the report appears in the table.
    std::set<std::string> table_canons;
    for (const auto& entry : table)
        table_canons.insert(format_matrix(
            canonical_form(parse_matrix(entry.text), SymmetryGroup::reflections_only)));
    for (const auto& [canon, r] : q0like) CHECK(table_canons.count(canon) == 1);
}

TEST_CASE("survey engines agree") {
    auto par = classification_report(5, SymmetryGroup::reflections_only, Exec::parallel);
    auto ser = classification_report(5, SymmetryGroup::reflections_only, Exec::serial);
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
        CHECK(par[i].canonical == ser[i].canonical);
        CHECK(par[i].certificate == ser[i].certificate);
        CHECK(par[i].max_anti_identity_height == ser[i].max_anti_identity_height);
        CHECK(par[i].wp_avoids_pattern == ser[i].wp_avoids_pattern);
    }
}

TEST_CASE("record serialization") {
    auto report = classification_report(4, SymmetryGroup::full);
    REQUIRE(report.size() == 1);
    std::string text = format_class_record(report[0]);
    for (const char* field :
         {"canonicalForm", "size", "onceSeparable", "outerClassUpToReflection",
          "maxAntiIdentityHeight", "almostQ1", "wpAvoidsPattern", "certificate"})
        CHECK(text.find(field) != std::string::npos);

    auto j = to_json(report[0]);
    CHECK(j["size"] == 4);
    CHECK(j["certificate"] == "q1-like");
    CHECK(j["outerClassUpToReflection"] == "Q1like");
    CHECK(j["canonicalForm"].is_string());
}
