#include "analogy/proportion.hpp"

#include <algorithm>
#include <set>

#include "analogy/error.hpp"
#include "maximality.hpp"

namespace analogy {

ArrowJustificationSet arrow_up_set(const Arrow& ar, Side side, const PairContext& ctx) {
    const Bitset& pairs = ctx.arrow_up(side, ar);
    return {side, ar, pairs, pairs & ctx.trivial_pairs()};
}

namespace {

bool excluded(const Arrow& e, const Arrow& ar1, const FiniteAlgebra& A, const FiniteAlgebra& B,
              CompetitorPolicy policy) {
    return policy == CompetitorPolicy::Literal &&
           B.element_name(e.src) == A.element_name(ar1.src) &&
           B.element_name(e.dst) == A.element_name(ar1.dst);
}

std::string context_name(const PairContext& ctx) {
    return "(" + ctx.left().name() + "," + ctx.right().name() + ")";
}

} // namespace

Verdict arrow_lesssim(const Arrow& ar1, const Arrow& ar2, const PairContext& ctx,
                      CompetitorPolicy policy) {
    const auto& A = ctx.left();
    const auto& B = ctx.right();
    const Bitset& up1 = ctx.arrow_up(Side::Left, ar1);
    const Bitset& up2 = ctx.arrow_up(Side::Right, ar2);
    detail::MaximalityQuery query{up1, up2, ctx.trivial_pairs(), [&] {
                                      std::vector<detail::Competitor> out;
                                      for (Element u = 0; u < B.size(); ++u)
                                          for (Element w = 0; w < B.size(); ++w) {
                                              Arrow e{u, w};
                                              if (excluded(e, ar1, A, B, policy))
                                                  continue;
                                              out.push_back({to_string(e, B),
                                                             up1 & ctx.arrow_up(Side::Right, e)});
                                          }
                                      return out;
                                  }};
    std::string quantifier = "arrows e of " + B.name();
    if (policy == CompetitorPolicy::Literal)
        quantifier += " with e != " + to_string(ar1, A);
    return detail::decide(
        query, to_string(ar1, A) + " <~ " + to_string(ar2, B) + " in " + context_name(ctx),
        std::move(quantifier), [&](const Bitset& s) { return describe_pairs(ctx, s); },
        ctx.bound_info());
}

bool arrow_lesssim_holds(const Arrow& ar1, const Arrow& ar2, const PairContext& ctx,
                         CompetitorPolicy policy) {
    const auto& A = ctx.left();
    const auto& B = ctx.right();
    const Bitset& up1 = ctx.arrow_up(Side::Left, ar1);
    const Bitset& up2 = ctx.arrow_up(Side::Right, ar2);
    const Bitset& trivial = ctx.trivial_pairs();
    if (detail::all_trivial(up1 | up2, trivial))
        return true;
    const Bitset shared = up1 & up2;
    if (!detail::has_non_trivial(shared, trivial))
        return false;
    for (Element u = 0; u < B.size(); ++u)
        for (Element w = 0; w < B.size(); ++w) {
            Arrow e{u, w};
            if (excluded(e, ar1, A, B, policy))
                continue;
            Bitset other = up1 & ctx.arrow_up(Side::Right, e);
            if (shared != other && shared.is_subset_of(other))
                return false;
        }
    return true;
}

Verdict proportion_sim(Element a, Element b, Element c, Element d, const PairContext& ctx,
                       CompetitorPolicy policy) {
    const auto& A = ctx.left();
    const auto& B = ctx.right();
    const PairContext back = ctx.flipped();
    Verdict v;
    v.statement = A.element_name(a) + ":" + A.element_name(b) + " ~ " + B.element_name(c) + ":" +
                  B.element_name(d) + " in " + context_name(ctx);
    v.reason = Verdict::Reason::Conjunction;
    v.bounds = ctx.bound_info();
    v.parts.push_back(arrow_lesssim({a, b}, {c, d}, ctx, policy));
    v.parts.push_back(arrow_lesssim({b, a}, {d, c}, ctx, policy));
    v.parts.push_back(arrow_lesssim({c, d}, {a, b}, back, policy));
    v.parts.push_back(arrow_lesssim({d, c}, {b, a}, back, policy));
    v.holds = std::all_of(v.parts.begin(), v.parts.end(), [](const Verdict& p) { return p.holds; });
    return v;
}

bool proportion_sim_holds(Element a, Element b, Element c, Element d, const PairContext& ctx,
                          CompetitorPolicy policy) {
    const PairContext back = ctx.flipped();
    return arrow_lesssim_holds({a, b}, {c, d}, ctx, policy) &&
           arrow_lesssim_holds({b, a}, {d, c}, ctx, policy) &&
           arrow_lesssim_holds({c, d}, {a, b}, back, policy) &&
           arrow_lesssim_holds({d, c}, {b, a}, back, policy);
}

std::vector<Arrow> pattern_relation(const ArrowPattern& p, const FiniteAlgebra& alg) {
    const ArrowPattern c = canonicalize(p);
    unsigned vars = 0;
    for (auto v : variables_of(c.lhs))
        vars = std::max(vars, v.index + 1);
    for (auto v : variables_of(c.rhs))
        vars = std::max(vars, v.index + 1);
    const auto lhs = denotation(c.lhs, alg, vars);
    const auto rhs = denotation(c.rhs, alg, vars);
    std::set<Arrow> out;
    for (std::size_t i = 0; i < lhs.size(); ++i)
        out.insert({lhs[i], rhs[i]});
    return {out.begin(), out.end()};
}

bool is_characteristic_justification_set(const std::vector<ArrowPattern>& justifications,
                                         const Arrow& ar1, const Arrow& ar2,
                                         const FiniteAlgebra& left, const FiniteAlgebra& right) {
    std::vector<std::vector<Arrow>> left_rel, right_rel;
    for (const auto& j : justifications) {
        left_rel.push_back(pattern_relation(j, left));
        right_rel.push_back(pattern_relation(j, right));
    }
    auto contains = [](const std::vector<Arrow>& rel, const Arrow& ar) {
        return std::binary_search(rel.begin(), rel.end(), ar);
    };
    auto contained = [&](const Arrow& e) {
        for (std::size_t i = 0; i < justifications.size(); ++i)
            if (!contains(left_rel[i], ar1) || !contains(right_rel[i], e))
                return false;
        return true;
    };
    if (!contained(ar2))
        return false;
    for (Element u = 0; u < right.size(); ++u)
        for (Element w = 0; w < right.size(); ++w) {
            Arrow e{u, w};
            if (e != ar2 && contained(e))
                return false;
        }
    return true;
}

std::vector<Element> solve_sim(Element a, Element b, Element c, const PairContext& ctx,
                               CompetitorPolicy policy) {
    std::vector<Element> out;
    for (Element d = 0; d < ctx.right().size(); ++d)
        if (proportion_sim_holds(a, b, c, d, ctx, policy))
            out.push_back(d);
    return out;
}

} // namespace analogy
