#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "analogy/term.hpp"

namespace analogy {

// Index of an element within its algebra's universe.
using Element = std::uint16_t;

// A finite L-algebra: a non-empty universe of named elements and a total
// operation table for every symbol of the language. Tables are indexed by
// the mixed-radix encoding of the argument tuple, first argument least
// significant.
class FiniteAlgebra {
public:
    using Table = std::vector<Element>;

    // Validates non-emptiness, distinct names, table sizes and closure.
    FiniteAlgebra(std::string name, Language language, std::vector<std::string> universe,
                  std::vector<Table> tables);

    const std::string& name() const noexcept { return name_; }
    const Language& language() const noexcept { return language_; }
    std::size_t size() const noexcept { return universe_.size(); }
    const std::vector<std::string>& universe() const noexcept { return universe_; }
    const std::string& element_name(Element e) const { return universe_.at(e); }
    std::optional<Element> find(std::string_view name) const;
    // Throws PreconditionError for unknown names.
    Element element(std::string_view name) const;

    const Table& table(std::size_t symbol) const { return tables_.at(symbol); }
    Element apply(std::size_t symbol, std::span<const Element> args) const;

    // Same language, universe names and tables (the algebra name is ignored).
    bool same_structure(const FiniteAlgebra& other) const;

private:
    std::string name_;
    Language language_;
    std::vector<std::string> universe_;
    std::map<std::string, Element, std::less<>> index_;
    std::vector<Table> tables_;
};

using AlgebraPtr = std::shared_ptr<const FiniteAlgebra>;

// Number of assignments of `vars` variables over a universe of `size`
// elements; throws ResourceLimitError beyond 2^26.
std::size_t assignment_count(std::size_t size, std::size_t vars);

// An assignment of elements to an ordered list of variables.
struct Assignment {
    std::vector<Variable> vars;
    std::vector<Element> values;

    std::optional<Element> lookup(Variable v) const;
    bool operator==(const Assignment&) const = default;
};

// Evaluates t bottom-up. Throws PreconditionError for unassigned variables
// or a language mismatch.
Element evaluate(const Term& t, const FiniteAlgebra& alg, const Assignment& o);

// The table of t over `vars` variables x0..x(vars-1), indexed like an
// operation table (x0 least significant). Variables of t must be < vars.
std::vector<Element> denotation(const Term& t, const FiniteAlgebra& alg, unsigned vars);

// A total map between the universes of two algebras.
struct Mapping {
    std::string name;
    AlgebraPtr source;
    AlgebraPtr target;
    std::vector<Element> table;

    Element operator()(Element e) const { return table.at(e); }
};

bool is_homomorphism(const Mapping& h);
bool is_bijective(const Mapping& h);
bool is_isomorphism(const Mapping& h);

// All o over `vars` (which must cover the variables of s) with s(o) = a.
// Ordered by the mixed-radix index of o.
std::vector<Assignment> solution_set(const Term& s, Element a, const FiniteAlgebra& alg,
                                     const std::vector<Variable>& vars);

// Elements a with exactly one solution of a = s(o), o over variables_of(s).
std::vector<Element> unique_solution_elements(const Term& s, const FiniteAlgebra& alg);

// Whether the induced function of s on A^rank(s) is injective.
bool is_injective_term(const Term& s, const FiniteAlgebra& alg);

// Contents of an algebra spec file.
struct SpecFile {
    std::map<std::string, AlgebraPtr> algebras;
    std::map<std::string, Mapping> mappings;
    std::vector<std::string> algebra_order;
    std::vector<std::string> mapping_order;
};

// Parses the algebra/mapping spec format. Mappings may refer to algebras
// defined earlier in the same text or in `known`.
SpecFile load_spec(std::string_view input, const SpecFile& known = {});
SpecFile load_spec_file(const std::string& path, const SpecFile& known = {});

// Convenience: the single algebra of a text that defines exactly one.
AlgebraPtr load_algebra(std::string_view input);

// Renders an algebra in the spec format. Unary tables use the
// "default identity" form; parsing the output yields the same structure.
std::string to_spec(const FiniteAlgebra& alg);

} // namespace analogy
