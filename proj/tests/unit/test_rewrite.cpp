#include <doctest.h>

#include "analogy/error.hpp"
#include "analogy/rewrite.hpp"
#include "analogy/verify.hpp"
#include "fixtures.hpp"

using namespace analogy;

namespace {

RewriteRule rule(const char* text, const FiniteAlgebra& alg) {
    return RewriteRule(parse_arrow_pattern(text, alg.language()));
}

} // namespace

TEST_CASE("AABB: the frameworks disagree on a:a :: b:b") {
    auto AABB = fixtures::bundled("AABB");
    PairContext ctx(AABB, AABB, {});
    CHECK(proportion_rw_holds(0, 0, 1, 1, ctx));
    CHECK(arrow_proportion_rw_holds({0, 0}, {1, 1}, ctx));
    auto v = proportion_rw(0, 0, 1, 1, ctx);
    CHECK(v.holds);
    REQUIRE(v.parts.size() == 4);
    CHECK(v.parts[0].quantifier == "d' in AABB with c = b fixed");
}

TEST_CASE("justification sets contain only rule pairs") {
    auto A2 = fixtures::bundled("A2");
    PairContext ctx(A2, A2, {});
    auto jus = jus_set({0, 1}, Side::Left, ctx);
    CHECK(jus.pairs.is_subset_of(ctx.rule_pairs()));
    CHECK(jus.pairs.is_subset_of(ctx.arrow_up(Side::Left, {0, 1})));
    auto graph = ctx.pair_of(parse_arrow_pattern("x0 -> f(x0)", A2->language()));
    REQUIRE(graph);
    CHECK(jus.pairs.test(*graph));
    auto full = ctx.pair_of(parse_arrow_pattern("x0 -> x1", A2->language()));
    REQUIRE(full);
    CHECK_FALSE(jus.pairs.test(*full));
}

TEST_CASE("PT: one rule justifies both a->b and e->f") {
    auto PT = fixtures::bundled("PT");
    PairContext ctx(PT, PT, {});
    const Element a = 0, b = 1, e = 4, f = 5;
    auto r = rule("x0 -> g(h(x0))", *PT);
    CHECK(jus_membership_via_solutions(r, a, b, e, f, *PT, *PT));
    CHECK(jus_membership_direct(r, a, b, e, f, ctx));
    auto ab = jus_set({a, b}, Side::Left, ctx);
    auto ef = jus_set({e, f}, Side::Right, ctx);
    auto p = ctx.pair_of(r.pattern());
    REQUIRE(p);
    CHECK(ab.pairs.test(*p));
    CHECK(ef.pairs.test(*p));
    CHECK_FALSE(ctx.trivial_pairs().test(*p));
}

TEST_CASE("membership via solution sets agrees with the clone on A3") {
    auto A3 = fixtures::bundled("A3");
    PairContext ctx(A3, A3, {});
    const auto n = static_cast<Element>(A3->size());
    for (const char* text : {"x0 -> x0", "x0 -> f(x0)", "g(x0) -> f(x0)", "f(x1) -> x1",
                             "g(x0) -> g(g(x0))"}) {
        auto r = rule(text, *A3);
        for (Element a = 0; a < n; ++a)
            for (Element b = 0; b < n; ++b)
                for (Element c = 0; c < n; ++c)
                    for (Element d = 0; d < n; ++d)
                        CHECK(jus_membership_via_solutions(r, a, b, c, d, *A3, *A3) ==
                              jus_membership_direct(r, a, b, c, d, ctx));
    }
    CHECK_THROWS_AS(jus_membership_direct(rule("x5 -> x5", *A3), 0, 0, 0, 0, ctx),
                    PreconditionError);
}

TEST_CASE("uniqueness lemma instance and its characteristic-set caveat") {
    auto AABB = fixtures::bundled("AABB");
    PairContext ctx(AABB, AABB, {});
    auto r = rule("x0 -> x0", *AABB);
    auto report = uniqueness_lemma_check(r, 0, 0, 1, 1, ctx);
    CHECK(report.member);
    CHECK(report.premise1);
    CHECK(report.conclusion1);
    CHECK(report.premise2);
    CHECK(report.conclusion2);
    CHECK_FALSE(report.violated());
    // With c fixed, x0 -> x0 pins d down to b.
    CHECK(is_characteristic_r_justification_set({r}, {0, 0}, {1, 1}, *AABB, *AABB));
    // Over all arrows it is not characteristic: every loop shares it.
    CHECK_FALSE(is_characteristic_justification_set({r.pattern()}, {0, 0}, {1, 1}, *AABB, *AABB));
}

TEST_CASE("solve_rw agrees with proportion_rw_holds") {
    auto CPT = fixtures::bundled("CPT");
    PairContext ctx(CPT, CPT, {});
    const auto n = static_cast<Element>(CPT->size());
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element c = 0; c < n; ++c) {
                auto ds = solve_rw(a, b, c, ctx);
                for (Element d = 0; d < n; ++d)
                    CHECK((std::find(ds.begin(), ds.end(), d) != ds.end()) ==
                          proportion_rw_holds(a, b, c, d, ctx));
            }
}
