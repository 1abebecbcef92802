#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "analogy/proportion.hpp"
#include "analogy/rewrite.hpp"

namespace analogy {

enum class Framework { Sim, Rw };

std::string to_string(Framework fw);
std::optional<Framework> parse_framework(std::string_view text);

// ---------------------------------------------------------------------------
// Decisions with caching

// Owns pair contexts keyed by algebra identity and memoizes arrow-level
// decisions, so sweeps over many tuples stay cheap. Not thread-safe.
class Engine {
public:
    explicit Engine(Bounds bounds = {}, CompetitorPolicy policy = CompetitorPolicy::Literal);

    const Bounds& bounds() const noexcept { return bounds_; }
    CompetitorPolicy policy() const noexcept { return policy_; }

    const PairContext& context(const AlgebraPtr& left, const AlgebraPtr& right);

    bool arrow_holds(Framework fw, const AlgebraPtr& left, const AlgebraPtr& right,
                     const Arrow& ar1, const Arrow& ar2);
    // a:b ~ c:d (Sim) or a:b :: c:d (Rw) in (left, right).
    bool holds(Framework fw, const AlgebraPtr& left, const AlgebraPtr& right, Element a,
               Element b, Element c, Element d);
    // Same decision with the full certificate (not memoized).
    Verdict verdict(Framework fw, const AlgebraPtr& left, const AlgebraPtr& right, Element a,
                    Element b, Element c, Element d);

private:
    struct Entry {
        PairContext ctx;
        std::vector<signed char> memo[2];
    };
    Entry& entry(const AlgebraPtr& left, const AlgebraPtr& right);

    Bounds bounds_;
    CompetitorPolicy policy_;
    std::map<std::pair<const FiniteAlgebra*, const FiniteAlgebra*>, Entry> entries_;
    std::vector<AlgebraPtr> keep_alive_;
};

// ---------------------------------------------------------------------------
// Axiom schemata

enum class Axiom {
    PReflexivity,
    PSymmetry,
    InnerPSymmetry,
    PDeterminism,
    InnerPReflexivity,
    CentralPermutation,
    StrongInnerPReflexivity,
    StrongPReflexivity,
    PCommutativity,
    PTransitivity,
    InnerPTransitivity,
    CentralPTransitivity,
};

struct AxiomSchema {
    Axiom id;
    std::string name;     // e.g. "inner-p-reflexivity"
    unsigned arity;       // number of algebras in the context
    std::string shape;    // printed statement
    std::vector<std::string> variables; // names of the tuple components
};

const std::vector<AxiomSchema>& axiom_schemata();
const AxiomSchema& schema_of(Axiom axiom);
// Accepts the hyphenated name, with spaces or underscores in place of '-'.
std::optional<Axiom> parse_axiom(std::string_view name);

struct CheckReport {
    AxiomSchema schema;
    Framework framework = Framework::Sim;
    CompetitorPolicy policy = CompetitorPolicy::Literal;
    std::vector<AlgebraPtr> algebras;
    bool holds = true;
    // First counterexample in enumeration order, element names in the
    // order of schema.variables.
    std::vector<std::string> witness;
    std::string witness_text;
    std::size_t instances = 0;
    bool exact = true;
    std::string bounds;
};

// Enumerates every tuple the schema quantifies over, in lexicographic
// order, and stops at the first violation. A single algebra is used for
// every position of a multi-algebra context.
CheckReport check_axiom(Axiom axiom, std::vector<AlgebraPtr> algebras, Framework fw,
                        Engine& engine);

// Re-decides a counterexample through the certificate path; true iff the
// violation is reproduced.
bool recheck_counterexample(const CheckReport& report, Engine& engine);

// ---------------------------------------------------------------------------
// Golden vectors
//
// Line format (blank lines and '#' comments ignored):
//   quad  <file> <sim|rw> a b c d <holds|fails>
//   arrow <file> <sim|rw> a b c d <holds|fails>     (a->b vs c->d)
//   axiom <file> <sim|rw> <schema> <holds|counterexample>
// <file> is resolved against the directory of the vector file.

struct VectorResult {
    std::size_t line = 0;
    std::string text;
    bool expected = false;
    bool actual = false;
    std::string detail;
    bool exact = true;

    bool pass() const { return expected == actual; }
};

std::vector<VectorResult> run_paper_vectors(const std::string& path, Engine& engine);

// ---------------------------------------------------------------------------
// Isomorphism theorems

struct IsoReport {
    std::string name;
    std::size_t checked = 0;
    std::size_t skipped = 0;
    std::vector<std::string> violations;
    bool exact = true;

    bool holds() const { return violations.empty(); }
};

// Up(a->b) in the source within Up(Ha->Hb) in the target for every arrow,
// and equality when h is an isomorphism. Throws PreconditionError if h is
// not a homomorphism.
IsoReport check_isomorphism_lemma(const Mapping& h, const Bounds& bounds);

// a->b <~ Ha->Hb wherever the premise (no non-trivial justification of a->b
// implies none of Ha->Hb) holds; for isomorphisms also a:b ~ Ha:Hb.
IsoReport check_first_iso_theorem(const Mapping& h, const Bounds& bounds,
                                  CompetitorPolicy policy = CompetitorPolicy::Literal);

// a:b ~ c:d in A iff Ha:Hb ~ Hc:Hd in B, for all quadruples. Throws
// PreconditionError if h is not an isomorphism.
IsoReport check_second_iso_theorem(const Mapping& h, const Bounds& bounds,
                                   CompetitorPolicy policy = CompetitorPolicy::Literal);

// ---------------------------------------------------------------------------
// Framework comparison

struct FrameworkDifference {
    std::vector<std::string> quad;
    bool sim = false;
    bool rw = false;
};

// Quadruples of (A, B) on which the two relations disagree, in
// lexicographic order.
std::vector<FrameworkDifference> compare_frameworks(const AlgebraPtr& left,
                                                    const AlgebraPtr& right, Engine& engine);

// ---------------------------------------------------------------------------
// Generators

constexpr std::uint64_t kDefaultSeed = 20240601;

// Universe of size in [min_size, max_size] named a, b, c, ...; up to
// max_ops unary symbols f, g, h, ... with uniformly random tables.
AlgebraPtr random_unary_algebra(std::mt19937_64& rng, const std::string& name,
                                std::size_t min_size = 2, std::size_t max_size = 4,
                                std::size_t max_ops = 2);

// A copy of alg with elements renamed (prefixed) and listed in the given
// order, together with the isomorphism from alg onto the copy.
Mapping relabel(const AlgebraPtr& alg, const std::vector<Element>& order,
                const std::string& prefix);
Mapping random_relabeling(const AlgebraPtr& alg, std::mt19937_64& rng);

// All automorphisms, in lexicographic order of their tables.
std::vector<Mapping> automorphisms(const AlgebraPtr& alg);

// Homomorphisms from source to target, in lexicographic order of their
// tables, at most `limit` of them.
std::vector<Mapping> homomorphisms(const AlgebraPtr& source, const AlgebraPtr& target,
                                   std::size_t limit = 1000);

} // namespace analogy
