#include "analogy/similarity.hpp"

#include <algorithm>

#include "analogy/error.hpp"
#include "maximality.hpp"

namespace analogy {

GeneralizationSet up_set(Element a, Side side, const PairContext& ctx) {
    return {side, a, ctx.element_up(side, a), ctx.element_up(side, a) & ctx.trivial_classes()};
}

bool is_trivial_generalization(std::size_t cls, const PairContext& ctx) {
    if (cls >= ctx.class_count())
        throw PreconditionError("class index out of range");
    return ctx.trivial_classes().test(cls);
}

namespace {

std::vector<std::string> describe_classes(const PairContext& ctx, const Bitset& classes) {
    std::vector<std::string> out;
    for (auto i = classes.find_first(); i != Bitset::npos && out.size() < 8;
         i = classes.find_next(i))
        out.push_back(ctx.clone()[i].witness.to_string());
    return out;
}

bool is_competitor(const std::string& competitor, const std::string& excluded,
                   CompetitorPolicy policy) {
    return policy == CompetitorPolicy::All || competitor != excluded;
}

} // namespace

Verdict lesssim(Element a, Element b, const PairContext& ctx, CompetitorPolicy policy) {
    const auto& A = ctx.left();
    const auto& B = ctx.right();
    const Bitset& up_a = ctx.element_up(Side::Left, a);
    const Bitset& up_b = ctx.element_up(Side::Right, b);
    detail::MaximalityQuery query{up_a, up_b, ctx.trivial_classes(), [&] {
                                      std::vector<detail::Competitor> out;
                                      for (Element e = 0; e < B.size(); ++e) {
                                          const auto& name = B.element_name(e);
                                          if (is_competitor(name, A.element_name(a), policy))
                                              out.push_back(
                                                  {name, up_a & ctx.element_up(Side::Right, e)});
                                      }
                                      return out;
                                  }};
    std::string quantifier =
        policy == CompetitorPolicy::Literal
            ? "b' in " + B.name() + " with b' != " + A.element_name(a)
            : "b' in " + B.name();
    return detail::decide(
        query, A.element_name(a) + " <~ " + B.element_name(b) + " in (" + A.name() + "," + B.name() + ")",
        std::move(quantifier), [&](const Bitset& s) { return describe_classes(ctx, s); },
        ctx.bound_info());
}

Verdict similar(Element a, Element b, const PairContext& ctx, CompetitorPolicy policy) {
    Verdict v;
    v.statement = ctx.left().element_name(a) + " ~ " + ctx.right().element_name(b) + " in (" +
                  ctx.left().name() + "," + ctx.right().name() + ")";
    v.reason = Verdict::Reason::Conjunction;
    v.bounds = ctx.bound_info();
    v.parts.push_back(lesssim(a, b, ctx, policy));
    v.parts.push_back(lesssim(b, a, ctx.flipped(), policy));
    v.holds = v.parts[0].holds && v.parts[1].holds;
    return v;
}

bool generalizes(const Term& s, Element a, const FiniteAlgebra& alg) {
    const Term c = canonicalize(s);
    const auto table = denotation(c, alg, static_cast<unsigned>(variables_of(c).size()));
    return std::find(table.begin(), table.end(), a) != table.end();
}

bool is_characteristic_generalization_set(const std::vector<Term>& generalizations, Element a,
                                          Element b, const FiniteAlgebra& left,
                                          const FiniteAlgebra& right, CompetitorPolicy policy) {
    auto contained = [&](Element b2) {
        return std::all_of(generalizations.begin(), generalizations.end(), [&](const Term& s) {
            return generalizes(s, a, left) && generalizes(s, b2, right);
        });
    };
    if (!contained(b))
        return false;
    for (Element e = 0; e < right.size(); ++e) {
        if (e == b || !is_competitor(right.element_name(e), left.element_name(a), policy))
            continue;
        if (contained(e))
            return false;
    }
    return true;
}

} // namespace analogy
