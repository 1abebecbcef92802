#include "analogy/verdict.hpp"

#include <sstream>

namespace analogy {

std::string to_string(CompetitorPolicy policy) {
    return policy == CompetitorPolicy::Literal ? "literal" : "all";
}

std::optional<CompetitorPolicy> parse_competitor_policy(std::string_view text) {
    if (text == "literal")
        return CompetitorPolicy::Literal;
    if (text == "all")
        return CompetitorPolicy::All;
    return std::nullopt;
}

std::string to_string(Comparison::Relation relation) {
    switch (relation) {
    case Comparison::Relation::Equal:
        return "equal";
    case Comparison::Relation::Subset:
        return "strictly-contained";
    case Comparison::Relation::Superset:
        return "strictly-contains";
    case Comparison::Relation::Incomparable:
        return "incomparable";
    }
    return "?";
}

std::string to_string(Verdict::Reason reason) {
    switch (reason) {
    case Verdict::Reason::AllTrivial:
        return "all-trivial";
    case Verdict::Reason::Maximal:
        return "maximal";
    case Verdict::Reason::NoSharedNonTrivial:
        return "no-shared-non-trivial";
    case Verdict::Reason::Dominated:
        return "dominated";
    case Verdict::Reason::Conjunction:
        return "conjunction";
    }
    return "?";
}

const Verdict* Verdict::first_failure() const {
    if (holds)
        return nullptr;
    for (const auto& part : parts)
        if (auto f = part.first_failure())
            return f;
    return this;
}

namespace {

std::string join(const std::vector<std::string>& items, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i)
        out += (i ? sep : "") + items[i];
    return out;
}

void human(const Verdict& v, int indent, std::ostringstream& out) {
    const std::string pad(indent * 2, ' ');
    out << pad << (v.holds ? "holds: " : "fails: ") << v.statement << " ["
        << to_string(v.reason) << "]\n";
    if (!v.quantifier.empty())
        out << pad << "  competitors: " << v.quantifier << "\n";
    if (v.reason != Verdict::Reason::Conjunction && v.reason != Verdict::Reason::AllTrivial) {
        out << pad << "  shared non-trivial (" << v.witness_count << "): ";
        out << (v.witnesses.empty() ? "none" : join(v.witnesses, ", "));
        if (v.witness_count > v.witnesses.size())
            out << ", ...";
        out << "\n";
    }
    if (v.dominating) {
        out << pad << "  dominated by " << *v.dominating;
        if (v.dominating_witness)
            out << " (extra member " << *v.dominating_witness << ")";
        out << "\n";
    }
    std::size_t strict = 0;
    for (const auto& c : v.comparisons)
        if (c.relation == Comparison::Relation::Subset)
            ++strict;
    if (!v.comparisons.empty())
        out << pad << "  compared " << v.comparisons.size() << " competitors, " << strict
            << " strictly larger\n";
    for (const auto& part : v.parts)
        human(part, indent + 1, out);
}

void machine(const Verdict& v, const std::string& path, std::ostringstream& out) {
    out << "verdict path=" << path << " holds=" << (v.holds ? 1 : 0) << " reason="
        << to_string(v.reason) << " statement=\"" << v.statement << "\"";
    if (!v.quantifier.empty())
        out << " quantifier=\"" << v.quantifier << "\"";
    if (v.reason != Verdict::Reason::Conjunction)
        out << " shared=" << v.witness_count << " witnesses=\"" << join(v.witnesses, "; ")
            << "\"";
    if (v.dominating)
        out << " dominating=\"" << *v.dominating << "\"";
    if (v.dominating_witness)
        out << " extra=\"" << *v.dominating_witness << "\"";
    if (!v.comparisons.empty()) {
        out << " comparisons=\"";
        for (std::size_t i = 0; i < v.comparisons.size(); ++i)
            out << (i ? "; " : "") << v.comparisons[i].competitor << ":"
                << to_string(v.comparisons[i].relation);
        out << "\"";
    }
    out << "\n";
    for (std::size_t i = 0; i < v.parts.size(); ++i)
        machine(v.parts[i], path + "." + std::to_string(i), out);
}

} // namespace

std::string render_human(const Verdict& v) {
    std::ostringstream out;
    human(v, 0, out);
    out << "bounds: " << v.bounds.to_string() << (v.exact() ? " (exact)" : " (approximate)")
        << "\n";
    return out.str();
}

std::string render_machine(const Verdict& v) {
    std::ostringstream out;
    machine(v, "0", out);
    out << "bounds " << v.bounds.to_string() << " exact=" << (v.exact() ? 1 : 0) << "\n";
    return out.str();
}

} // namespace analogy
