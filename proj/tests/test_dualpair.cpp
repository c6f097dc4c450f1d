#include <doctest.h>

#include "ktheta/dualpair.hpp"
#include "ktheta/verifier.hpp"
#include "grids.hpp"

using namespace ktheta;
using namespace ktheta::testgrid;

TEST_CASE("maximal compact subgroups follow the classical table") {
    CHECK(to_string(maximal_compact(parse_group("O(2,1)"))) == "O2*O1");
    CHECK(to_string(maximal_compact(parse_group("Sp4R"))) == "U2");
    CHECK(to_string(maximal_compact(parse_group("GL3H"))) == "Sp3");
    CHECK(to_string(maximal_compact(parse_group("GL2R"))) == "O2");
    CHECK(to_string(maximal_compact(parse_group("GL2C"))) == "U2");
    CHECK(to_string(maximal_compact(parse_group("O3C"))) == "O3");
    CHECK(to_string(maximal_compact(parse_group("Sp4C"))) == "Sp2");
    CHECK(to_string(maximal_compact(parse_group("Sp(1,2)"))) == "Sp1*Sp2");
    CHECK(to_string(maximal_compact(parse_group("Ostar6"))) == "U3");
    CHECK(to_string(maximal_compact(parse_group("U(2,2)"))) == "U2*U2");
}

TEST_CASE("ambient symplectic size per classification row") {
    CHECK(parse_pair("(O(2,1),Sp4R)").ambient_dim == 2 * 2 * 3);      // 2n(p+q)
    CHECK(parse_pair("(O3C,Sp4C)").ambient_dim == 4 * 3 * 2);         // 4pn
    CHECK(parse_pair("(Sp(1,1),Ostar4)").ambient_dim == 4 * 2 * 2);   // 4n(p+q)
    CHECK(parse_pair("(U(2,1),U(1,1))").ambient_dim == 2 * 3 * 2);    // 2(p+q)(r+s)
    CHECK(parse_pair("(GL2R,GL3R)").ambient_dim == 2 * 2 * 3);
    CHECK(parse_pair("(GL2C,GL2C)").ambient_dim == 4 * 2 * 2);
    CHECK(parse_pair("(GL2H,GL2H)").ambient_dim == 8 * 2 * 2);
    CHECK_THROWS_AS(parse_pair("(GL2R,GL2C)"), ParseError);
    CHECK_THROWS_AS(parse_pair("(O3C,Sp4R)"), ParseError);
}

TEST_CASE("stable range tests per table row") {
    CHECK(is_stable_range_smaller(parse_pair("(O(1,1),Sp4R)"), 0));      // n=2 >= 2
    CHECK(!is_stable_range_smaller(parse_pair("(O(1,1),Sp2R)"), 0));     // n=1 < 2
    CHECK(is_stable_range_smaller(parse_pair("(Sp(1,1),Ostar16)"), 0));  // n=8 >= 2(p+q)=4
    CHECK(!is_stable_range_smaller(parse_pair("(Sp(1,1),Ostar6)"), 0));  // n=3 < 4
    CHECK(!is_stable_range_smaller(parse_pair("(U(2,1),U(2,2))"), 0));   // 2 < 3
    CHECK(is_stable_range_smaller(parse_pair("(U(1,1),U(2,2))"), 0));
    CHECK(is_stable_range_smaller(parse_pair("(O2C,Sp4C)"), 0));         // n=2 >= p=2
    CHECK(is_stable_range_smaller(parse_pair("(Sp2C,O4C)"), 0));         // p=4 >= 4n=4
    CHECK(is_stable_range_smaller(parse_pair("(O(6,6),Sp6R)"), 1));      // p,q >= 2n=6
    CHECK(!is_stable_range_smaller(parse_pair("(O(6,5),Sp6R)"), 1));

    // Type II carries the analogous n >= m predicate unless strict.
    CHECK(is_stable_range_smaller(parse_pair("(GL2R,GL3R)"), 0));
    CHECK(!is_stable_range_smaller(parse_pair("(GL3R,GL2R)"), 0));
    CHECK_THROWS_AS(is_stable_range_smaller(parse_pair("(GL2R,GL3R)"), 0, true), NotTypeI);
}

TEST_CASE("splitting table") {
    CHECK(cover_splits(parse_pair("(O(2,2),Sp6R)"), 1));   // p+q even
    CHECK(!cover_splits(parse_pair("(O(2,1),Sp6R)"), 1));
    CHECK(!cover_splits(parse_pair("(GL3R,GL5R)"), 0));    // n=5 odd
    CHECK(cover_splits(parse_pair("(GL3R,GL4R)"), 0));
    CHECK(cover_splits(parse_pair("(Sp(1,2),Ostar6)"), 0)); // always
    CHECK(cover_splits(parse_pair("(Sp(1,2),Ostar6)"), 1));
    CHECK(cover_splits(parse_pair("(O3C,Sp2C)"), 0));
    CHECK(cover_splits(parse_pair("(GL1C,GL1C)"), 0));
    CHECK(cover_splits(parse_pair("(GL1H,GL1H)"), 1));
    CHECK(!cover_splits(parse_pair("(O(3,0),Sp6R)"), 0));  // n=3 odd
    CHECK(cover_splits(parse_pair("(U(1,1),U(2,1))"), 1)); // p+q even
    CHECK(!cover_splits(parse_pair("(U(1,1),U(2,1))"), 0)); // r+s odd
}

TEST_CASE("degree formulas match the table") {
    CHECK(degree_formula(parse_pair("(Sp4R,O(4,2))"), 0, parse_ktype("U2[3,1]")) == 2);
    CHECK(degree_formula(parse_pair("(O3C,Sp4C)"), 0, parse_ktype("O3[1;-]")) == 2);
    CHECK(degree_formula(parse_pair("(GL2C,GL2C)"), 0, parse_ktype("U2[1,-1]")) == 2);
    CHECK(degree_formula(parse_pair("(GL2H,GL2H)"), 0, parse_ktype("Sp2[2,1]")) == 3);
    CHECK(degree_formula(parse_pair("(Ostar4,Sp(2,1))"), 0, parse_ktype("U2[1,1]")) == 0);
    CHECK(degree_formula(parse_pair("(O(2,2),Sp4R)"), 0,
                         parse_ktype("O2[1;+]*O2[0;-]")) == 1 + 2);
    CHECK(degree_formula(parse_pair("(U(1,1),U(2,0))"), 0,
                         parse_ktype("U1[1]*U1[-1]")) == 0);
    CHECK(degree_formula(parse_pair("(Sp(1,1),Ostar4)"), 0,
                         parse_ktype("Sp1[2]*Sp1[1]")) == 3);

    CHECK_THROWS_AS(degree_formula(parse_pair("(O(3,0),Sp6R)"), 0, parse_ktype("O3[1;+]*O0[;+]")),
                    SplitRequired);
    CHECK_THROWS_AS(degree_formula(parse_pair("(Sp4R,O(4,2))"), 0, parse_ktype("U3[1,0,0]")),
                    ShapeMismatch);
}

TEST_CASE("degree formula is canonicalization-invariant and zero exactly at the minimum") {
    const DualPairConfig cfg = parse_pair("(Sp4R,O(4,2))"); // shift (p-q)/2 = 1
    CHECK(degree_formula(cfg, 0, parse_ktype("U2[1,1]")) == 0);
    for (const UWeight& w : u_grid(2, 3)) {
        if (w.n != 2) continue;
        const long d = degree_formula(cfg, 0, KTypeParam(w));
        CHECK(d >= 0);
        if (w.a == std::vector<int>{1, 1}) {
            CHECK(d == 0);
        } else {
            CHECK(d > 0);
        }
    }
    const DualPairConfig oc = parse_pair("(O4C,Sp2C)");
    CHECK(degree_formula(oc, 0, KTypeParam(OWeight{4, {2, 2}, -1})) ==
          degree_formula(oc, 0, KTypeParam(OWeight{4, {2, 2}, +1})));
}

TEST_CASE("companion selection: minimal solutions of the three conditions") {
    CHECK(to_string(select_companion(parse_group("Sp4R"))) == "(Sp4R,O(4,4))");
    CHECK(to_string(select_companion(parse_group("O(2,1)"))) == "(O(2,1),Sp8R)");
    CHECK(to_string(select_companion(parse_group("U(1,1)"))) == "(U(1,1),U(2,2))");
    CHECK(to_string(select_companion(parse_group("GL3H"))) == "(GL3H,GL3H)");
    CHECK(to_string(select_companion(parse_group("GL3R"))) == "(GL3R,GL4R)");
    CHECK(to_string(select_companion(parse_group("O3C"))) == "(O3C,Sp6C)");
    CHECK(to_string(select_companion(parse_group("Sp4C"))) == "(Sp4C,O8C)");
    CHECK(to_string(select_companion(parse_group("Ostar6"))) == "(Ostar6,Sp(3,3))");
    CHECK(to_string(select_companion(parse_group("Sp(1,1)"))) == "(Sp(1,1),Ostar8)");
}

TEST_CASE("condition (3) arithmetic per table row") {
    CHECK(condition3_predicate(parse_pair("(Sp4R,O(6,2))"), 0));   // 4 | 4
    CHECK(!condition3_predicate(parse_pair("(Sp4R,O(4,2))"), 0));  // 4 does not divide 2
    CHECK(!condition3_predicate(parse_pair("(Ostar4,Sp(2,1))"), 0)); // p-q odd
    CHECK(condition3_predicate(parse_pair("(Ostar4,Sp(2,2))"), 0));
    CHECK(condition3_predicate(parse_pair("(GL2H,GL2H)"), 0));     // blank cell
    CHECK(condition3_predicate(parse_pair("(O(2,2),Sp4R)"), 0));   // blank cell
    CHECK(condition3_predicate(parse_pair("(U(1,1),U(2,2))"), 0)); // 4 | 0
    CHECK(!condition3_predicate(parse_pair("(U(1,1),U(3,1))"), 0)); // 4 does not divide 2
}

TEST_CASE("companion pipeline over rank grids (conditions 1-3)") {
    for (Family f : kAllFamilies) {
        const VerificationReport rep = check_companion_pipeline(f, 4);
        CAPTURE(rep.scope);
        CHECK(rep.passed());
        CHECK(rep.checked > 0);
    }
}

TEST_CASE("parity bridge: formula degree matches parity mod 2 under condition (3)") {
    const std::vector<std::pair<std::string, int>> cases = {
        {"(Sp4R,O(6,2))", 0}, {"(Sp2R,O(4,0))", 0},  {"(O(2,2),Sp4R)", 0},
        {"(O3C,Sp2C)", 0},    {"(Sp4C,O3C)", 0},     {"(GL3R,GL4R)", 0},
        {"(GL2C,GL2C)", 0},   {"(GL2H,GL2H)", 0},    {"(U(1,1),U(2,2))", 0},
        {"(Ostar4,Sp(2,2))", 0}, {"(Sp(1,2),Ostar6)", 0},
    };
    for (const auto& [text, member] : cases) {
        const DualPairConfig cfg = parse_pair(text);
        REQUIRE(condition3_predicate(cfg, member));
        REQUIRE(cover_splits(cfg, member));
        const MaxCompactDesc k = maximal_compact(cfg.member(member));
        for (const KTypeParam& t : shaped_grid(k, 3)) {
            const long deg = degree_formula(cfg, member, t);
            CAPTURE(text);
            CAPTURE(to_string(t));
            CHECK(static_cast<int>(deg % 2) == parity(t).value());
        }
    }
}

TEST_CASE("group text and JSON syntax") {
    for (const char* s : {"Sp4R", "O(2,1)", "U(1,1)", "GL3H", "O3C", "Sp4C", "Ostar6",
                          "GL2R", "GL5C", "Sp(2,0)"}) {
        CHECK(to_string(parse_group(s)) == s);
    }
    CHECK_THROWS_AS(parse_group("Sp3R"), ParseError);  // odd symplectic size
    CHECK_THROWS_AS(parse_group("Ostar5"), ParseError);
    CHECK_THROWS_AS(parse_group("GL3Q"), ParseError);
    CHECK_THROWS_AS(parse_group("O(0,0)"), MalformedWeight);
    CHECK(group_to_json(parse_group("O(2,1)")) == R"({"family":"O_pq","p":2,"q":1})");
    CHECK(group_to_json(parse_group("Sp4R")) == R"({"family":"Sp_R","n":2})");
    CHECK(to_string(parse_pair("(O(2,1),Sp8R)")) == "(O(2,1),Sp8R)");
}
