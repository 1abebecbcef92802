#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>

#include <boost/dynamic_bitset.hpp>

#include "analogy/clone.hpp"

namespace analogy {

using Bitset = boost::dynamic_bitset<>;

// An element pair a->b of one algebra; Arr(A) is the set of all of them.
struct Arrow {
    Element src = 0;
    Element dst = 0;

    auto operator<=>(const Arrow&) const = default;
};

std::string to_string(const Arrow& ar, const FiniteAlgebra& alg);

// Which algebra of a pair context an element or arrow belongs to.
enum class Side { Left, Right };

// Summary of the finite approximation a verdict was computed under.
struct BoundInfo {
    Bounds bounds;
    bool saturated = false;
    unsigned depth = 0;
    std::size_t classes = 0;

    std::string to_string() const;
};

// Joint clone of (A, B) with per-arrow and per-element membership bitsets.
//
// Classes index the joint clone; pair p = i * classes + j stands for the
// arrow patterns s->t with s in class i and t in class j. Its relation in an
// algebra is {(s(o), t(o)) : o over x0..x(v-1)}, so s and t share variables.
// A pair is a rule pair if some member s->t satisfies vars(t) within
// vars(s), and trivial if its relation is full on both algebras.
//
// Contexts are cheap to copy; flipped() views (B, A) over the same data.
class PairContext {
public:
    // Refuses more than this many pairs with ResourceLimitError.
    static constexpr std::size_t kMaxPairs = std::size_t{1} << 22;

    PairContext(AlgebraPtr left, AlgebraPtr right, const Bounds& bounds);

    const FiniteAlgebra& algebra(Side side) const { return *side_data(side).algebra; }
    const AlgebraPtr& algebra_ptr(Side side) const { return side_data(side).algebra; }
    const FiniteAlgebra& left() const { return algebra(Side::Left); }
    const FiniteAlgebra& right() const { return algebra(Side::Right); }
    bool same_algebra() const { return data_->sides[0].segment == data_->sides[1].segment; }

    const CloneResult& clone() const { return data_->clone; }
    BoundInfo bound_info() const;
    std::size_t class_count() const { return data_->clone.size(); }
    std::size_t pair_count() const { return class_count() * class_count(); }
    std::pair<std::size_t, std::size_t> classes_of_pair(std::size_t p) const {
        return {p / class_count(), p % class_count()};
    }

    // Pairs whose relation in the given algebra contains ar.
    const Bitset& arrow_up(Side side, const Arrow& ar) const;
    const Bitset& trivial_pairs() const { return data_->trivial_pairs; }
    const Bitset& rule_pairs() const { return data_->rule_pairs; }

    // Classes whose image in the given algebra contains e.
    const Bitset& element_up(Side side, Element e) const;
    const Bitset& trivial_classes() const { return data_->trivial_classes; }

    // Witness arrow pattern of a pair: the class witnesses of both sides.
    ArrowPattern pair_witness(std::size_t p) const;
    // Witness rewrite rule of a rule pair (empty for non-rule pairs).
    std::optional<RewriteRule> rule_witness(std::size_t p) const;
    // Pair containing the pattern; its variables must be below max_vars.
    std::optional<std::size_t> pair_of(const ArrowPattern& pattern) const;

    PairContext flipped() const;

private:
    struct SideData {
        AlgebraPtr algebra;
        std::size_t segment = 0;
        std::vector<Bitset> arrow_up;   // indexed src * n + dst
        std::vector<Bitset> element_up; // indexed by element
    };
    struct Data {
        CloneResult clone;
        SideData sides[2];
        Bitset trivial_pairs;
        Bitset rule_pairs;
        Bitset trivial_classes;
    };

    PairContext(std::shared_ptr<const Data> data, bool flipped)
        : data_(std::move(data)), flipped_(flipped) {}

    const SideData& side_data(Side side) const {
        bool left = (side == Side::Left) != flipped_;
        return data_->sides[left ? 0 : 1];
    }

    std::shared_ptr<const Data> data_;
    bool flipped_ = false;
};

// Printed forms of up to `limit` members of a pair set, in index order;
// rule witnesses ("s ->> t") when `rules` is set.
std::vector<std::string> describe_pairs(const PairContext& ctx, const Bitset& pairs,
                                        bool rules = false, std::size_t limit = 8);

} // namespace analogy
