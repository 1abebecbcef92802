#include <doctest.h>

#include <random>

#include "analogy/algebra.hpp"
#include "analogy/error.hpp"
#include "fixtures.hpp"

using namespace analogy;

namespace {

Term term(const std::string& text, const FiniteAlgebra& alg) {
    return parse_term(text, alg.language());
}

// Brute force over all o in A^vars.
std::size_t count_solutions(const Term& s, Element a, const FiniteAlgebra& alg, unsigned vars) {
    auto table = denotation(s, alg, vars);
    return static_cast<std::size_t>(std::count(table.begin(), table.end(), a));
}

} // namespace

TEST_CASE("bundled algebras load with default identity rows") {
    auto A2 = fixtures::bundled("A2");
    CHECK(A2->name() == "A2");
    CHECK(A2->size() == 4);
    REQUIRE(A2->language().size() == 1);
    CHECK(A2->language()[0].name == "f");
    CHECK(A2->table(0) == FiniteAlgebra::Table{1, 1, 2, 3});

    auto CPT = fixtures::bundled("CPT");
    CHECK(CPT->language().size() == 2);
    CHECK(CPT->table(0) == FiniteAlgebra::Table{1, 2, 2, 3}); // g
    CHECK(CPT->table(1) == FiniteAlgebra::Table{0, 2, 3, 3}); // h

    auto trivial = fixtures::empty_language("T", 1);
    CHECK(trivial->size() == 1);
    CHECK(trivial->language().empty());
}

TEST_CASE("spec parsing handles constants, binary tables and mappings") {
    auto spec = load_spec(R"(
        algebra Z2 {
          universe: e, o;
          op plus/2: (e,e) -> e, (e,o) -> o, (o,e) -> o, (o,o) -> e;
          op zero/0: () -> e;
        }
        algebra One { universe: u; op plus/2: (u,u) -> u; op zero/0: () -> u; }
        mapping collapse : Z2 -> One { e -> u, o -> u; }
    )");
    auto Z2 = spec.algebras.at("Z2");
    // Symbols are sorted by name.
    CHECK(Z2->language()[0].name == "plus");
    CHECK(Z2->language()[1].name == "zero");
    CHECK(evaluate(term("plus(x0,plus(x0,x1))", *Z2), *Z2, {{{0}, {1}}, {1, 0}}) ==
          Z2->element("e"));
    CHECK(evaluate(term("zero", *Z2), *Z2, {}) == Z2->element("e"));
    const auto& h = spec.mappings.at("collapse");
    CHECK(is_homomorphism(h));
    CHECK_FALSE(is_bijective(h));
    CHECK_FALSE(is_isomorphism(h));
    CHECK(spec.algebra_order == std::vector<std::string>{"Z2", "One"});
}

TEST_CASE("spec errors carry positions") {
    auto parse_error_line = [](const std::string& text) -> std::size_t {
        try {
            load_spec(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(parse_error_line("algebra A {\n universe: a, a; }") == 2);
    CHECK(parse_error_line("algebra A {\n universe: a, b;\n op f/1: a -> b; }") == 3);
    CHECK(parse_error_line("algebra A {\n universe: a;\n op f/1: a -> z; }") == 3);
    CHECK(parse_error_line("algebra A { universe: a; op f/2: a -> a; }") == 1);
    CHECK(parse_error_line("algebra A { op f/1: a -> a; universe: a; }") == 1);
    CHECK(parse_error_line("algebra A { universe: a; op x1/1 default identity: ; }") == 1);
    CHECK(parse_error_line("algebra A { universe: a; }\nmapping m : A -> B { a -> a; }") == 2);
    CHECK_THROWS_AS(load_algebra("algebra A { universe: a; } algebra B { universe: b; }"),
                    PreconditionError);
}

TEST_CASE("homomorphism and isomorphism checks") {
    auto spec = load_spec_file(std::string(ANALOGY_DATA_DIR) + "/algebras/SIR.alg");
    const auto& swap = spec.mappings.at("swap");
    CHECK(is_homomorphism(swap));
    CHECK(is_isomorphism(swap));

    // a -> c, everything else fixed, does not commute with f on A2.
    auto A2 = fixtures::bundled("A2");
    Mapping h{"h", A2, A2, {2, 1, 2, 3}};
    CHECK_FALSE(is_homomorphism(h));
    Mapping id{"id", A2, A2, {0, 1, 2, 3}};
    CHECK(is_isomorphism(id));
    Mapping constant{"k", A2, A2, {1, 1, 1, 1}};
    CHECK(is_homomorphism(constant));

    Mapping cross{"x", A2, fixtures::empty_language("E", 4), {0, 1, 2, 3}};
    CHECK_THROWS_AS(is_homomorphism(cross), PreconditionError);
}

TEST_CASE("solution sets and uniquely solvable elements") {
    auto A2 = fixtures::bundled("A2");
    Term fx = term("f(x0)", *A2);
    auto sols = solution_set(fx, A2->element("b"), *A2, variables_of(fx));
    REQUIRE(sols.size() == 2);
    CHECK(sols[0].values == std::vector<Element>{0});
    CHECK(sols[1].values == std::vector<Element>{1});
    CHECK(solution_set(fx, A2->element("a"), *A2, variables_of(fx)).empty());
    CHECK(unique_solution_elements(fx, *A2) == std::vector<Element>{2, 3});
    CHECK_FALSE(is_injective_term(fx, *A2));
    CHECK(is_injective_term(term("x0", *A2), *A2));

    auto PC = fixtures::bundled("PC");
    CHECK(unique_solution_elements(term("f(x0)", *PC), *PC).empty());

    // Extra variables multiply the solution count.
    auto sols2 = solution_set(fx, A2->element("c"), *A2, {{0}, {1}});
    CHECK(sols2.size() == 4);
    CHECK_THROWS_AS(solution_set(term("f(x1)", *A2), 0, *A2, {{0}}), PreconditionError);
}

TEST_CASE("evaluation errors") {
    auto A2 = fixtures::bundled("A2");
    CHECK_THROWS_AS(evaluate(term("f(x1)", *A2), *A2, {{{0}}, {0}}), PreconditionError);
    auto CPT = fixtures::bundled("CPT");
    CHECK_THROWS_AS(evaluate(term("g(x0)", *CPT), *A2, {{{0}}, {0}}), PreconditionError);
    CHECK_THROWS_AS(A2->element("z"), PreconditionError);
}

TEST_CASE("to_spec output reloads to the same structure") {
    for (const char* stem : {"A1", "A2", "A3", "CPT", "PT", "SIR"}) {
        auto alg = fixtures::bundled(stem);
        auto again = load_algebra(to_spec(*alg));
        CHECK(alg->same_structure(*again));
    }
}

TEST_CASE("property: solution sets agree with denotation counts") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 30; ++round) {
        const std::size_t n = 2 + rng() % 3;
        std::string text = "algebra R { universe: ";
        for (std::size_t i = 0; i < n; ++i)
            text += (i ? ", " : "") + std::string(1, static_cast<char>('a' + i));
        text += "; op f/1: ";
        for (std::size_t i = 0; i < n; ++i)
            text += (i ? ", " : "") + std::string(1, static_cast<char>('a' + i)) + " -> " +
                    std::string(1, static_cast<char>('a' + rng() % n));
        text += "; op m/2: ";
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                text += ((i || j) ? ", (" : "(") + std::string(1, static_cast<char>('a' + j)) +
                        "," + std::string(1, static_cast<char>('a' + i)) + ") -> " +
                        std::string(1, static_cast<char>('a' + rng() % n));
        auto alg = load_algebra(text + "; }");
        for (const char* s : {"f(x0)", "m(x0,x1)", "m(f(x1),x0)", "f(m(x0,x0))"}) {
            Term t = term(s, *alg);
            std::size_t total = 0;
            for (Element a = 0; a < alg->size(); ++a) {
                auto sols = solution_set(t, a, *alg, {{0}, {1}});
                CHECK(sols.size() == count_solutions(t, a, *alg, 2));
                for (const auto& o : sols)
                    CHECK(evaluate(t, *alg, o) == a);
                total += sols.size();
            }
            CHECK(total == alg->size() * alg->size());
            auto unique = unique_solution_elements(t, *alg);
            CHECK(is_injective_term(t, *alg) ==
                  (unique.size() == assignment_count(alg->size(), t.rank())));
        }
    }
}
