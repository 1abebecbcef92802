#pragma once

#include <vector>

#include "analogy/verdict.hpp"

namespace analogy {

// Classes of the joint clone that generalize `owner`, i.e. whose image in
// the owner's algebra contains it.
struct GeneralizationSet {
    Side side = Side::Left;
    Element owner = 0;
    Bitset classes;
    Bitset trivial;
};

GeneralizationSet up_set(Element a, Side side, const PairContext& ctx);

// Image is the whole universe in both algebras of the context.
bool is_trivial_generalization(std::size_t cls, const PairContext& ctx);

// a <~ b in (A, B) for a in A = ctx.left(), b in B = ctx.right().
Verdict lesssim(Element a, Element b, const PairContext& ctx,
                CompetitorPolicy policy = CompetitorPolicy::Literal);

// a <~ b in (A, B) and b <~ a in (B, A).
Verdict similar(Element a, Element b, const PairContext& ctx,
                CompetitorPolicy policy = CompetitorPolicy::Literal);

// Whether s generalizes a in alg (a lies in the image of s).
bool generalizes(const Term& s, Element a, const FiniteAlgebra& alg);

// G is contained in the shared generalizations of a and b, and any
// competitor b' whose shared set with a also contains G equals b.
bool is_characteristic_generalization_set(const std::vector<Term>& generalizations, Element a,
                                          Element b, const FiniteAlgebra& left,
                                          const FiniteAlgebra& right,
                                          CompetitorPolicy policy = CompetitorPolicy::Literal);

} // namespace analogy
