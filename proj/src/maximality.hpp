#pragma once

// Shared decision procedure for the two-condition relations:
//   (a) everything in up1 | up2 is trivial, or
//   (b) S = up1 & up2 has a non-trivial member and no competitor set S'
//       strictly contains S.

#include <functional>
#include <string>
#include <vector>

#include "analogy/verdict.hpp"

namespace analogy::detail {

struct Competitor {
    std::string name;
    Bitset set;
};

struct MaximalityQuery {
    const Bitset& up1;
    const Bitset& up2;
    const Bitset& trivial;
    // Lazily produces the competitors, in a fixed order.
    std::function<std::vector<Competitor>()> competitors;
};

inline bool all_trivial(const Bitset& set, const Bitset& trivial) {
    return set.is_subset_of(trivial);
}

inline bool has_non_trivial(const Bitset& set, const Bitset& trivial) {
    return !set.is_subset_of(trivial);
}

inline Comparison::Relation compare(const Bitset& s, const Bitset& other) {
    if (s == other)
        return Comparison::Relation::Equal;
    if (s.is_subset_of(other))
        return Comparison::Relation::Subset;
    if (other.is_subset_of(s))
        return Comparison::Relation::Superset;
    return Comparison::Relation::Incomparable;
}

// Builds the full certificate. `describe` prints members of a set.
inline Verdict decide(const MaximalityQuery& q, std::string statement, std::string quantifier,
                      const std::function<std::vector<std::string>(const Bitset&)>& describe,
                      const BoundInfo& bounds) {
    Verdict v;
    v.statement = std::move(statement);
    v.quantifier = std::move(quantifier);
    v.bounds = bounds;
    if (all_trivial(q.up1 | q.up2, q.trivial)) {
        v.holds = true;
        v.reason = Verdict::Reason::AllTrivial;
        return v;
    }
    const Bitset shared = q.up1 & q.up2;
    const Bitset non_trivial = shared - q.trivial;
    v.witness_count = non_trivial.count();
    v.witnesses = describe(non_trivial);
    if (non_trivial.none()) {
        v.reason = Verdict::Reason::NoSharedNonTrivial;
        return v;
    }
    v.holds = true;
    v.reason = Verdict::Reason::Maximal;
    for (const auto& c : q.competitors()) {
        auto relation = compare(shared, c.set);
        v.comparisons.push_back({c.name, relation});
        if (relation == Comparison::Relation::Subset && v.holds) {
            v.holds = false;
            v.reason = Verdict::Reason::Dominated;
            v.dominating = c.name;
            auto extra = describe(c.set - shared);
            if (!extra.empty())
                v.dominating_witness = extra.front();
        }
    }
    return v;
}

} // namespace analogy::detail
