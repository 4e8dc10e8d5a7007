#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "signrank/pattern.hpp"

using namespace signrank;

TEST_SUITE_BEGIN("sign algebra");

TEST_CASE("sign_sub full table") {
    // a - b for every pair; '#' exactly on equal nonzero signs
    CHECK(sign_sub(Sign::plus, Sign::plus) == GenSign::any);
    CHECK(sign_sub(Sign::plus, Sign::zero) == GenSign::plus);
    CHECK(sign_sub(Sign::plus, Sign::minus) == GenSign::plus);
    CHECK(sign_sub(Sign::zero, Sign::plus) == GenSign::minus);
    CHECK(sign_sub(Sign::zero, Sign::zero) == GenSign::zero);
    CHECK(sign_sub(Sign::zero, Sign::minus) == GenSign::plus);
    CHECK(sign_sub(Sign::minus, Sign::plus) == GenSign::minus);
    CHECK(sign_sub(Sign::minus, Sign::zero) == GenSign::minus);
    CHECK(sign_sub(Sign::minus, Sign::minus) == GenSign::any);
}

TEST_CASE("negation") {
    CHECK(negate(Sign::plus) == Sign::minus);
    CHECK(negate(Sign::minus) == Sign::plus);
    CHECK(negate(Sign::zero) == Sign::zero);
    CHECK(negate(GenSign::any) == GenSign::any);
    CHECK(to_sign(GenSign::plus) == Sign::plus);
    CHECK_THROWS_AS(to_sign(GenSign::any), std::invalid_argument);
}

TEST_CASE("char round trip") {
    for (char c : {'+', '-', '0', '#'}) CHECK(to_char(gen_sign_from_char(c)) == c);
    CHECK_THROWS_AS(gen_sign_from_char('x'), std::invalid_argument);
}

TEST_CASE("parse and serialize") {
    GenSignPattern p = parse_pattern("; comment\n+ - 0\n# + -\n");
    CHECK(p.rows() == 2);
    CHECK(p.cols() == 3);
    CHECK(p.at(0, 0) == GenSign::plus);
    CHECK(p.at(1, 0) == GenSign::any);
    CHECK(!p.is_plain());
    CHECK(parse_pattern(serialize_pattern(p)) == p);

    SUBCASE("inline comments and blank lines") {
        GenSignPattern q = parse_pattern("\n+ -   ; tail\n\n0 +\n");
        CHECK(q.rows() == 2);
        CHECK(q.sign_at(0, 1) == Sign::minus);
    }
    SUBCASE("errors carry position") {
        CHECK_THROWS_AS(parse_pattern("+ -\n+\n"), std::invalid_argument);
        CHECK_THROWS_AS(parse_pattern("+ q\n"), std::invalid_argument);
        CHECK_THROWS_AS(parse_pattern("; nothing\n"), std::invalid_argument);
    }
}

TEST_CASE("pattern surgery") {
    GenSignPattern p = parse_pattern("+ - 0\n0 + #\n");
    GenSignPattern t = transpose(p);
    CHECK(t.rows() == 3);
    CHECK(t.at(2, 1) == GenSign::any);
    CHECK(transpose(t) == p);
    GenSignPattern n = negate(p);
    CHECK(n.sign_at(0, 0) == Sign::minus);
    CHECK(n.at(1, 2) == GenSign::any);
    CHECK(negate(n) == p);

    GenSignPattern sub = submatrix(p, {1}, {0, 2});
    CHECK(sub.rows() == 1);
    CHECK(sub.at(0, 1) == GenSign::any);

    CHECK(hstack(p, p).cols() == 6);
    CHECK(vstack(p, p).rows() == 4);
    CHECK_THROWS_AS(hstack(p, transpose(p)), std::invalid_argument);
}

TEST_CASE("refinements") {
    GenSignPattern p = parse_pattern("# +\n0 #\n");
    auto refs = refinements(p);
    CHECK(refs.size() == 9);
    for (const auto& r : refs) {
        CHECK(r.is_plain());
        CHECK(r.sign_at(0, 1) == Sign::plus);
    }
    // earlier cells in row-major order cycle fastest through minus, zero, plus
    CHECK(refs[0].sign_at(0, 0) == Sign::minus);
    CHECK(refs[0].sign_at(1, 1) == Sign::minus);
    CHECK(refs[1].sign_at(0, 0) == Sign::zero);
    CHECK(refs[1].sign_at(1, 1) == Sign::minus);
    CHECK(refs[8].sign_at(0, 0) == Sign::plus);
    CHECK(refs[8].sign_at(1, 1) == Sign::plus);

    GenSignPattern plain = parse_pattern("+ -\n");
    CHECK(refinements(plain).size() == 1);
    GenSignPattern wide(1, 9, GenSign::any);
    CHECK_THROWS_AS(refinements(wide, 8), std::length_error);
}
