#pragma once

#include <vector>

#include "analogy/verdict.hpp"

namespace analogy {

// Pairs of the joint clone whose relation in one algebra contains an arrow.
struct ArrowJustificationSet {
    Side side = Side::Left;
    Arrow arrow;
    Bitset pairs;
    Bitset trivial;
};

ArrowJustificationSet arrow_up_set(const Arrow& ar, Side side, const PairContext& ctx);

// ar1 <~ ar2 in (A, B): ar1 an arrow of ctx.left(), ar2 of ctx.right().
// Competitors are the arrows e of B (all of them, or those not named like
// ar1 under the literal policy).
Verdict arrow_lesssim(const Arrow& ar1, const Arrow& ar2, const PairContext& ctx,
                      CompetitorPolicy policy = CompetitorPolicy::Literal);
// Same decision without the certificate.
bool arrow_lesssim_holds(const Arrow& ar1, const Arrow& ar2, const PairContext& ctx,
                         CompetitorPolicy policy = CompetitorPolicy::Literal);

// a:b ~ c:d, the conjunction of
//   a->b <~ c->d and b->a <~ d->c  in (A, B),
//   c->d <~ a->b and d->c <~ b->a  in (B, A).
Verdict proportion_sim(Element a, Element b, Element c, Element d, const PairContext& ctx,
                       CompetitorPolicy policy = CompetitorPolicy::Literal);
bool proportion_sim_holds(Element a, Element b, Element c, Element d, const PairContext& ctx,
                          CompetitorPolicy policy = CompetitorPolicy::Literal);

// The set {(s(o), t(o))} of arrows of alg produced by the pattern, with o
// ranging over assignments of the pattern's variables.
std::vector<Arrow> pattern_relation(const ArrowPattern& p, const FiniteAlgebra& alg);

// J is contained in the shared justifications of ar1 and ar2, and every
// arrow e of B whose shared set with ar1 contains J equals ar2. Decided by
// direct evaluation of the patterns.
bool is_characteristic_justification_set(const std::vector<ArrowPattern>& justifications,
                                         const Arrow& ar1, const Arrow& ar2,
                                         const FiniteAlgebra& left, const FiniteAlgebra& right);

// All d with a:b ~ c:d, in universe order.
std::vector<Element> solve_sim(Element a, Element b, Element c, const PairContext& ctx,
                               CompetitorPolicy policy = CompetitorPolicy::Literal);

} // namespace analogy
