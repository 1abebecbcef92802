#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace analogy {

struct Symbol {
    std::string name;
    unsigned rank = 0;

    bool operator==(const Symbol&) const = default;
};

// An ordered list of function symbols with ranks. Rank-0 symbols are
// constants. Names must be distinct and must not collide with the
// variable pool x0, x1, ...
class Language {
public:
    Language() = default;
    explicit Language(std::vector<Symbol> symbols);

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    const Symbol& operator[](std::size_t i) const { return symbols_[i]; }
    const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
    std::optional<std::size_t> find(std::string_view name) const;

    bool operator==(const Language& other) const { return symbols_ == other.symbols_; }

private:
    std::vector<Symbol> symbols_;
    std::unordered_map<std::string, std::size_t> index_;
};

// True for names of the form x<digits>, which are reserved for variables.
bool is_variable_name(std::string_view name);

struct Variable {
    unsigned index = 0;

    auto operator<=>(const Variable&) const = default;
};

std::string to_string(Variable v);

// Immutable first-order term. Copies share structure.
class Term {
public:
    static Term variable(unsigned index);
    static Term variable(Variable v) { return variable(v.index); }
    // Throws PreconditionError when args.size() differs from the symbol's rank.
    static Term apply(const Language& language, std::size_t symbol, std::vector<Term> args);

    bool is_variable() const noexcept;
    Variable var() const;
    std::size_t symbol() const;
    const std::string& symbol_name() const;
    std::span<const Term> args() const;
    // Same head symbol, new arguments (count must match).
    Term with_args(std::vector<Term> args) const;

    // Variables and constants have depth 0.
    std::size_t depth() const noexcept;
    // Number of distinct variables.
    std::size_t rank() const;

    std::string to_string() const;

    friend bool operator==(const Term& lhs, const Term& rhs);
    // Orders by printed form; used for deterministic witness selection.
    friend std::strong_ordering operator<=>(const Term& lhs, const Term& rhs);

private:
    struct Node;
    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

// Variables in first-occurrence order (left-to-right, depth-first).
std::vector<Variable> variables_of(const Term& t);

// Bitmask of variable indices; indices >= 64 are not representable.
std::uint64_t variable_mask(const Term& t);

// Renumbers variables to x0, x1, ... in first-occurrence order.
Term canonicalize(const Term& t);

// Replaces every variable xi by mapping[i]. Variables outside the mapping
// are left untouched.
Term rename_variables(const Term& t, const std::vector<Variable>& mapping);

Term parse_term(std::string_view input, const Language& language);

// A pair of terms s -> t with no condition on variables.
struct ArrowPattern {
    Term lhs;
    Term rhs;

    std::string to_string() const;
    bool operator==(const ArrowPattern&) const = default;
};

bool is_rewrite_rule(const ArrowPattern& p);

// s ->> t with every variable of t occurring in s.
class RewriteRule {
public:
    // Throws PreconditionError if rhs has a variable not in lhs.
    RewriteRule(Term lhs, Term rhs);
    explicit RewriteRule(const ArrowPattern& p) : RewriteRule(p.lhs, p.rhs) {}

    const Term& lhs() const noexcept { return lhs_; }
    const Term& rhs() const noexcept { return rhs_; }
    ArrowPattern pattern() const { return {lhs_, rhs_}; }
    std::string to_string() const;

    bool operator==(const RewriteRule&) const = default;

private:
    Term lhs_;
    Term rhs_;
};

// Renames the variables of both sides jointly, in first-occurrence order
// over lhs then rhs.
ArrowPattern canonicalize(const ArrowPattern& p);

// Parses "s -> t" (or "s ->> t"; the arrow kind is not recorded).
ArrowPattern parse_arrow_pattern(std::string_view input, const Language& language);

} // namespace analogy
