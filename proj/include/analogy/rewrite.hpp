#pragma once

#include <vector>

#include "analogy/proportion.hpp"

namespace analogy {

// Rule pairs whose relation in one algebra contains an arrow: Jus(a->b).
ArrowJustificationSet jus_set(const Arrow& ar, Side side, const PairContext& ctx);

// a->b :. c->d in (A, B): Jus(a->b) | Jus(c->d) all trivial, or the joint
// set Jus(a->b) & Jus(c->d) has a non-trivial member and is not strictly
// contained in Jus(a->b) & Jus(c->d') for any d' in B (c stays fixed).
Verdict arrow_proportion_rw(const Arrow& ar1, const Arrow& ar2, const PairContext& ctx);
bool arrow_proportion_rw_holds(const Arrow& ar1, const Arrow& ar2, const PairContext& ctx);

// a:b :: c:d, the conjunction of
//   a->b :. c->d and b->a :. d->c  in (A, B),
//   c->d :. a->b and d->c :. b->a  in (B, A).
Verdict proportion_rw(Element a, Element b, Element c, Element d, const PairContext& ctx);
bool proportion_rw_holds(Element a, Element b, Element c, Element d, const PairContext& ctx);

// <s,a> & <t,b> nonempty in A and <s,c> & <t,d> nonempty in B, solutions
// taken over the variables of s.
bool jus_membership_via_solutions(const RewriteRule& rule, Element a, Element b, Element c,
                                  Element d, const FiniteAlgebra& left, const FiniteAlgebra& right);

// The rule's pair in ctx lies in Jus(a->b) & Jus(c->d). The rule's variables
// must be below max_vars; throws PreconditionError otherwise.
bool jus_membership_direct(const RewriteRule& rule, Element a, Element b, Element c, Element d,
                           const PairContext& ctx);

// J is contained in Jus(a->b :. c->d), and J contained in Jus(a->b :. c->d')
// forces d' = d. Decided by direct evaluation.
bool is_characteristic_r_justification_set(const std::vector<RewriteRule>& justifications,
                                           const Arrow& ar1, const Arrow& ar2,
                                           const FiniteAlgebra& left, const FiniteAlgebra& right);

// Both implications of the uniqueness property for one rule and quadruple.
struct UniquenessReport {
    bool member = false;          // rule in Jus(a->b :. c->d)
    bool premise1 = false;        // member and c in 1_B(s)
    bool conclusion1 = false;     // a->b :. c->d
    bool premise2 = false;        // member and a, b, c, d uniquely solvable
    bool conclusion2 = false;     // a:b :: c:d
    bool violated() const { return (premise1 && !conclusion1) || (premise2 && !conclusion2); }
};

UniquenessReport uniqueness_lemma_check(const RewriteRule& rule, Element a, Element b, Element c,
                                        Element d, const PairContext& ctx);

// All d with a:b :: c:d, in universe order.
std::vector<Element> solve_rw(Element a, Element b, Element c, const PairContext& ctx);

} // namespace analogy
