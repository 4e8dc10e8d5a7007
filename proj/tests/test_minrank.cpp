#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "signrank/generators.hpp"
#include "signrank/minrank.hpp"
#include "signrank/pattern.hpp"
#include "signrank/rank_lab.hpp"

using namespace signrank;

namespace {

SearchConfig quick() { return SearchConfig::defaults(); }

// independent 3x3 oracle: 0 iff zero, 1 iff 2-colorable, 3 iff sign-nonsingular,
// 2 otherwise
int oracle_3x3(const GenSignPattern& a) {
    if (a.is_zero()) return 0;
    if (mr_le_1(a)) return 1;
    if (is_sign_nonsingular(a)) return 3;
    return 2;
}

}  // namespace

TEST_SUITE_BEGIN("minrank engine");

TEST_CASE("rank one detection") {
    CHECK(mr_le_1(parse_pattern("+ +\n+ +\n")));
    CHECK(mr_le_1(parse_pattern("+ -\n- +\n")));
    CHECK(mr_le_1(parse_pattern("0 0\n0 0\n")));
    CHECK(mr_le_1(parse_pattern("+ 0 -\n0 0 0\n- 0 +\n")));
    CHECK(!mr_le_1(parse_pattern("+ +\n+ -\n")));
    CHECK(!mr_le_1(parse_pattern("+ 0\n0 +\n")));
    CHECK_THROWS_AS(mr_le_1(parse_pattern("# +\n+ +\n")), std::invalid_argument);
}

TEST_CASE("triangle lower bound") {
    auto t = triangle_lower_bound(parse_pattern("+ 0 0\n+ - 0\n+ + +\n"));
    CHECK(t.size == 3);
    CHECK(triangle_lower_bound(parse_pattern("0 0\n0 0\n")).size == 0);
    CHECK(triangle_lower_bound(parse_pattern("+ +\n+ +\n")).size == 1);
    auto d = triangle_lower_bound(parse_pattern("+ 0\n0 +\n"));
    CHECK(d.size == 2);
    // the listed cells have to form an actual staircase
    GenSignPattern p = parse_pattern("0 + 0\n+ 0 +\n0 + 0\n");
    auto s = triangle_lower_bound(p);
    CHECK(s.size == 2);
    for (int k = 0; k < s.size; ++k) {
        CHECK(p.at(s.rows[k], s.cols[k]) != GenSign::zero);
        for (int l = k + 1; l < s.size; ++l) CHECK(p.at(s.rows[k], s.cols[l]) == GenSign::zero);
    }
}

TEST_CASE("sign nonsingular detection") {
    CHECK(is_sign_nonsingular(parse_pattern("+ +\n- +\n")));
    CHECK(!is_sign_nonsingular(parse_pattern("+ +\n+ +\n")));
    CHECK(is_sign_nonsingular(parse_pattern("+ + 0\n- + +\n0 - +\n")));
    CHECK(!is_sign_nonsingular(parse_pattern("+ + 0\n+ - -\n0 + +\n")));
    CHECK(!is_sign_nonsingular(parse_pattern("+ 0\n0 0\n")));
    CHECK_THROWS_AS(is_sign_nonsingular(parse_pattern("+ + 0\n")), std::invalid_argument);

    auto sns = sns_lower_bound(parse_pattern("+ + 0\n- + +\n0 - +\n"));
    CHECK(sns.size == 3);
    auto sub = sns_lower_bound(parse_pattern("+ + 0\n+ - -\n0 + +\n"));
    CHECK(sub.size == 2);
    CHECK(sns_lower_bound(GenSignPattern(2, 2)).size == 0);
}

TEST_CASE("grid upper bound") {
    SearchConfig cfg = quick();
    auto r1 = grid_upper_bound(parse_pattern("+ +\n+ +\n"), cfg);
    REQUIRE(r1.has_value());
    CHECK(r1->rank == 1);
    auto r2 = grid_upper_bound(parse_pattern("+ +\n+ -\n"), cfg);
    REQUIRE(r2.has_value());
    CHECK(r2->rank == 2);
    GenSignPattern c = parse_pattern("+ + 0\n+ - -\n0 + +\n");
    auto rc = grid_upper_bound(c, cfg, 2);
    REQUIRE(rc.has_value());
    CHECK(rc->rank == 2);
    CHECK(is_member(rc->witness, c));
    CHECK(rank(rc->witness) == 2);

    SUBCASE("missing grid sign") {
        SearchConfig pos = quick();
        pos.grid = {make_rational(1), make_rational(2)};
        CHECK(!grid_upper_bound(parse_pattern("+ -\n- +\n"), pos).has_value());
    }
}

TEST_CASE("local search upper bound") {
    SearchConfig cfg = quick();
    GenSignPattern c = parse_pattern("+ + 0\n+ - -\n0 + +\n");
    auto w = local_search_upper_bound(c, 2, cfg);
    if (w.has_value()) {
        CHECK(is_member(*w, c));
        CHECK(rank(*w) <= 2);
    }
    auto z = local_search_upper_bound(GenSignPattern(2, 3), 0, cfg);
    REQUIRE(z.has_value());
    CHECK(z->is_zero());
    auto full = local_search_upper_bound(parse_pattern("+ -\n- -\n"), 2, cfg);
    REQUIRE(full.has_value());
    CHECK(is_member(*full, parse_pattern("+ -\n- -\n")));
}

TEST_CASE("mr_bounds on known patterns") {
    SearchConfig cfg = quick();
    auto zero = mr_bounds(GenSignPattern(3, 4), cfg);
    CHECK(zero.exact);
    CHECK(zero.ub == 0);
    auto one = mr_bounds(parse_pattern("+ -\n- +\n"), cfg);
    CHECK(one.exact);
    CHECK(one.ub == 1);
    auto c = mr_bounds(parse_pattern("+ + 0\n+ - -\n0 + +\n"), cfg);
    CHECK(c.exact);
    CHECK(c.ub == 2);
    CHECK(c.lb_cert.kind == LbKind::triangle);
    auto sns = mr_bounds(parse_pattern("+ + 0\n- + +\n0 - +\n"), cfg);
    CHECK(sns.exact);
    CHECK(sns.ub == 3);
    auto stair = mr_bounds(parse_pattern("+ + 0 0 0\n+ + 0 0 0\n0 + + + 0\n0 0 + 0 +\n"), cfg);
    CHECK(stair.exact);
    CHECK(stair.ub == 3);
}

TEST_CASE("witness invariants") {
    SearchConfig cfg = quick();
    Rng rng(91);
    for (int t = 0; t < 60; ++t) {
        GenSignPattern p = random_pattern(rng, static_cast<int>(rng.next_in(1, 4)),
                                          static_cast<int>(rng.next_in(1, 4)), 35);
        auto b = mr_bounds(p, cfg);
        CHECK(b.lb >= 0);
        CHECK(b.lb <= b.ub);
        CHECK(is_member(b.witness, p));
        CHECK(rank(b.witness) <= b.ub);
        CHECK(b.exact == (b.lb == b.ub));
    }
}

TEST_CASE("serial matches parallel") {
    SearchConfig ser = quick();
    ser.parallel = false;
    SearchConfig par = quick();
    par.parallel = true;
    Rng rng(77);
    for (int t = 0; t < 30; ++t) {
        GenSignPattern p = random_pattern(rng, 3, static_cast<int>(rng.next_in(3, 4)), 30, 5);
        auto a = mr_bounds(p, ser);
        auto b = mr_bounds(p, par);
        CHECK(a.lb == b.lb);
        CHECK(a.ub == b.ub);
        CHECK(a.witness == b.witness);
    }
}

TEST_CASE("generalized patterns fold refinements") {
    SearchConfig cfg = quick();
    GenSignPattern g = parse_pattern("# +\n+ 0\n");
    auto folded = mr_bounds(g, cfg);
    int best_lb = 99, best_ub = 99;
    for (const auto& r : refinements(g)) {
        auto b = mr_bounds(r, cfg);
        best_lb = std::min(best_lb, b.lb);
        best_ub = std::min(best_ub, b.ub);
    }
    CHECK(folded.lb == best_lb);
    CHECK(folded.ub == best_ub);
    CHECK(is_member(folded.witness, g));
}

TEST_CASE("engine resolves the separated 3x3 family exactly") {
    SearchConfig cfg = quick();
    int cases = 0;
    for (long code = 0; code < 2187; ++code) {
        long rest = code;
        GenSignPattern p(3, 3);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                if ((r == 0 && c == 2) || (r == 2 && c == 0)) continue;
                int digit = static_cast<int>(rest % 3);
                rest /= 3;
                p.set(r, c, digit == 0 ? Sign::zero : digit == 1 ? Sign::plus : Sign::minus);
            }
        auto b = mr_bounds(p, cfg);
        REQUIRE(b.exact);
        CHECK(b.ub == oracle_3x3(p));
        ++cases;
    }
    CHECK(cases == 2187);
}

TEST_CASE("config validation") {
    SearchConfig cfg = quick();
    cfg.grid.push_back(make_rational(0));
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    SearchConfig empty = quick();
    empty.grid.clear();
    CHECK_THROWS_AS(empty.validate(), std::invalid_argument);
}
