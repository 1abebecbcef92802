#pragma once

#include <optional>
#include <string>
#include <vector>

#include "analogy/pairs.hpp"

namespace analogy {

// How the maximality condition ranges over competitors. Literal excludes
// the competitor named like the left-hand object (b' != a, e != a->b);
// All ranges over the whole universe or arrow set.
enum class CompetitorPolicy { Literal, All };

std::string to_string(CompetitorPolicy policy);
std::optional<CompetitorPolicy> parse_competitor_policy(std::string_view text);

// One competitor examined by a maximality check, with how the candidate set
// S relates to the competitor's set S'.
struct Comparison {
    enum class Relation { Equal, Subset, Superset, Incomparable };

    std::string competitor;
    Relation relation = Relation::Incomparable;
};

std::string to_string(Comparison::Relation relation);

// Outcome of a relation query plus the evidence behind it.
struct Verdict {
    enum class Reason {
        AllTrivial,          // condition (a)
        Maximal,             // condition (b)
        NoSharedNonTrivial,  // (a) fails and S has no non-trivial member
        Dominated,           // (a) fails and a competitor set strictly contains S
        Conjunction,         // composite verdict; see parts
    };

    bool holds = false;
    std::string statement;
    Reason reason = Reason::Conjunction;
    std::string quantifier;
    // Non-trivial members of the shared set S (printed, truncated).
    std::vector<std::string> witnesses;
    std::size_t witness_count = 0;
    // For Dominated: the competitor and one member of S' missing from S.
    std::optional<std::string> dominating;
    std::optional<std::string> dominating_witness;
    std::vector<Comparison> comparisons;
    std::vector<Verdict> parts;
    BoundInfo bounds;

    bool exact() const { return bounds.saturated; }
    // The first failing part, depth first (this verdict if it has no parts).
    const Verdict* first_failure() const;
};

std::string to_string(Verdict::Reason reason);

// Indented multi-line report.
std::string render_human(const Verdict& v);
// Line-oriented "key=value" records, one per verdict node, stable order.
std::string render_machine(const Verdict& v);

} // namespace analogy
