#include "analogy/rewrite.hpp"

#include <algorithm>

#include "analogy/error.hpp"
#include "maximality.hpp"

namespace analogy {

ArrowJustificationSet jus_set(const Arrow& ar, Side side, const PairContext& ctx) {
    Bitset pairs = ctx.arrow_up(side, ar) & ctx.rule_pairs();
    Bitset trivial = pairs & ctx.trivial_pairs();
    return {side, ar, std::move(pairs), std::move(trivial)};
}

namespace {

std::string context_name(const PairContext& ctx) {
    return "(" + ctx.left().name() + "," + ctx.right().name() + ")";
}

} // namespace

Verdict arrow_proportion_rw(const Arrow& ar1, const Arrow& ar2, const PairContext& ctx) {
    const auto& A = ctx.left();
    const auto& B = ctx.right();
    const Bitset jus1 = ctx.arrow_up(Side::Left, ar1) & ctx.rule_pairs();
    const Bitset jus2 = ctx.arrow_up(Side::Right, ar2) & ctx.rule_pairs();
    detail::MaximalityQuery query{jus1, jus2, ctx.trivial_pairs(), [&] {
                                      std::vector<detail::Competitor> out;
                                      for (Element d = 0; d < B.size(); ++d) {
                                          Arrow e{ar2.src, d};
                                          out.push_back({to_string(e, B),
                                                         jus1 & ctx.arrow_up(Side::Right, e)});
                                      }
                                      return out;
                                  }};
    return detail::decide(
        query, to_string(ar1, A) + " :. " + to_string(ar2, B) + " in " + context_name(ctx),
        "d' in " + B.name() + " with c = " + B.element_name(ar2.src) + " fixed",
        [&](const Bitset& s) { return describe_pairs(ctx, s, true); }, ctx.bound_info());
}

bool arrow_proportion_rw_holds(const Arrow& ar1, const Arrow& ar2, const PairContext& ctx) {
    const auto& B = ctx.right();
    const Bitset jus1 = ctx.arrow_up(Side::Left, ar1) & ctx.rule_pairs();
    const Bitset jus2 = ctx.arrow_up(Side::Right, ar2) & ctx.rule_pairs();
    const Bitset& trivial = ctx.trivial_pairs();
    if (detail::all_trivial(jus1 | jus2, trivial))
        return true;
    const Bitset shared = jus1 & jus2;
    if (!detail::has_non_trivial(shared, trivial))
        return false;
    for (Element d = 0; d < B.size(); ++d) {
        Bitset other = jus1 & ctx.arrow_up(Side::Right, {ar2.src, d});
        if (shared != other && shared.is_subset_of(other))
            return false;
    }
    return true;
}

Verdict proportion_rw(Element a, Element b, Element c, Element d, const PairContext& ctx) {
    const auto& A = ctx.left();
    const auto& B = ctx.right();
    const PairContext back = ctx.flipped();
    Verdict v;
    v.statement = A.element_name(a) + ":" + A.element_name(b) + " :: " + B.element_name(c) + ":" +
                  B.element_name(d) + " in " + context_name(ctx);
    v.reason = Verdict::Reason::Conjunction;
    v.bounds = ctx.bound_info();
    v.parts.push_back(arrow_proportion_rw({a, b}, {c, d}, ctx));
    v.parts.push_back(arrow_proportion_rw({b, a}, {d, c}, ctx));
    v.parts.push_back(arrow_proportion_rw({c, d}, {a, b}, back));
    v.parts.push_back(arrow_proportion_rw({d, c}, {b, a}, back));
    v.holds = std::all_of(v.parts.begin(), v.parts.end(), [](const Verdict& p) { return p.holds; });
    return v;
}

bool proportion_rw_holds(Element a, Element b, Element c, Element d, const PairContext& ctx) {
    const PairContext back = ctx.flipped();
    return arrow_proportion_rw_holds({a, b}, {c, d}, ctx) &&
           arrow_proportion_rw_holds({b, a}, {d, c}, ctx) &&
           arrow_proportion_rw_holds({c, d}, {a, b}, back) &&
           arrow_proportion_rw_holds({d, c}, {b, a}, back);
}

namespace {

// <s,x> & <t,y> nonempty, assignments over the variables of s.
bool shared_solution(const RewriteRule& rule, Element x, Element y, const FiniteAlgebra& alg) {
    const auto vars = variables_of(rule.lhs());
    for (const auto& o : solution_set(rule.lhs(), x, alg, vars))
        if (evaluate(rule.rhs(), alg, o) == y)
            return true;
    return false;
}

bool uniquely_solvable(const Term& s, Element e, const FiniteAlgebra& alg) {
    return solution_set(s, e, alg, variables_of(s)).size() == 1;
}

} // namespace

bool jus_membership_via_solutions(const RewriteRule& rule, Element a, Element b, Element c,
                                  Element d, const FiniteAlgebra& left,
                                  const FiniteAlgebra& right) {
    return shared_solution(rule, a, b, left) && shared_solution(rule, c, d, right);
}

bool jus_membership_direct(const RewriteRule& rule, Element a, Element b, Element c, Element d,
                           const PairContext& ctx) {
    const unsigned v = ctx.clone().bounds().max_vars;
    for (auto x : variables_of(rule.lhs()))
        if (x.index >= v)
            throw PreconditionError("rule " + rule.to_string() + " uses " + to_string(x) +
                                    " beyond max_vars=" + std::to_string(v));
    auto p = ctx.pair_of(rule.pattern());
    if (!p)
        throw PreconditionError("rule " + rule.to_string() + " is outside the enumerated clone");
    return ctx.rule_pairs().test(*p) && ctx.arrow_up(Side::Left, {a, b}).test(*p) &&
           ctx.arrow_up(Side::Right, {c, d}).test(*p);
}

bool is_characteristic_r_justification_set(const std::vector<RewriteRule>& justifications,
                                           const Arrow& ar1, const Arrow& ar2,
                                           const FiniteAlgebra& left, const FiniteAlgebra& right) {
    auto contained = [&](Element d) {
        return std::all_of(justifications.begin(), justifications.end(), [&](const RewriteRule& r) {
            return jus_membership_via_solutions(r, ar1.src, ar1.dst, ar2.src, d, left, right);
        });
    };
    if (!contained(ar2.dst))
        return false;
    for (Element d = 0; d < right.size(); ++d)
        if (d != ar2.dst && contained(d))
            return false;
    return true;
}

UniquenessReport uniqueness_lemma_check(const RewriteRule& rule, Element a, Element b, Element c,
                                        Element d, const PairContext& ctx) {
    const auto& A = ctx.left();
    const auto& B = ctx.right();
    UniquenessReport r;
    r.member = jus_membership_via_solutions(rule, a, b, c, d, A, B);
    r.premise1 = r.member && uniquely_solvable(rule.lhs(), c, B);
    r.premise2 = r.member && uniquely_solvable(rule.lhs(), a, A) &&
                 uniquely_solvable(rule.rhs(), b, A) && uniquely_solvable(rule.lhs(), c, B) &&
                 uniquely_solvable(rule.rhs(), d, B);
    r.conclusion1 = arrow_proportion_rw_holds({a, b}, {c, d}, ctx);
    r.conclusion2 = proportion_rw_holds(a, b, c, d, ctx);
    return r;
}

std::vector<Element> solve_rw(Element a, Element b, Element c, const PairContext& ctx) {
    std::vector<Element> out;
    for (Element d = 0; d < ctx.right().size(); ++d)
        if (proportion_rw_holds(a, b, c, d, ctx))
            out.push_back(d);
    return out;
}

} // namespace analogy
