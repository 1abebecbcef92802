// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "analogy/error.hpp"
#include "analogy/verify.hpp"

#ifndef ANALOGY_DATA_DIR
#define ANALOGY_DATA_DIR "data"
#endif
#ifndef ANALOGY_CLI
#define ANALOGY_CLI "analogy"
#endif

using namespace analogy;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = false;
    std::string summary;
    std::vector<std::string> notes;
};

std::string data_path(const std::string& rel) { return std::string(ANALOGY_DATA_DIR) + "/" + rel; }

std::vector<std::string> bundled_files() {
    std::vector<std::string> out;
    for (const auto& entry : std::filesystem::directory_iterator(data_path("algebras")))
        if (entry.path().extension() == ".alg")
            out.push_back(entry.path().string());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<AlgebraPtr> bundled_algebras() {
    std::vector<AlgebraPtr> out;
    for (const auto& f : bundled_files()) {
        auto spec = load_spec_file(f);
        out.push_back(spec.algebras.at(spec.algebra_order.front()));
    }
    return out;
}

// ---------------------------------------------------------------------------
// 1. Golden vectors

Outcome vectors_criterion() {
    auto start = Clock::now();
    Engine engine;
    auto results = run_paper_vectors(data_path("golden_vectors.txt"), engine);
    const double elapsed = seconds_since(start);
    Outcome o;
    std::size_t mismatches = 0, inexact = 0;
    for (const auto& r : results) {
        if (!r.exact)
            ++inexact;
        if (r.pass())
            continue;
        ++mismatches;
        std::string note = "mismatch: " + r.text;
        if (!r.detail.empty())
            note += " (" + r.detail + ")";
        o.notes.push_back(note);
    }
    o.pass = mismatches == 0 && inexact == 0 && elapsed < 5.0;
    std::ostringstream s;
    s << results.size() - mismatches << "/" << results.size() << " vectors match, " << inexact
      << " inexact, " << elapsed << "s";
    o.summary = s.str();
    return o;
}

// ---------------------------------------------------------------------------
// 2. Positive axioms on random algebras

constexpr std::size_t kRandomAlgebras = 100;

Outcome positive_axioms_criterion() {
    auto start = Clock::now();
    std::mt19937_64 rng(kDefaultSeed);
    Engine sim_engine(Bounds{}, CompetitorPolicy::All);
    Engine literal_engine(Bounds{}, CompetitorPolicy::Literal);
    Engine rw_engine(Bounds{}, CompetitorPolicy::Literal);
    const std::vector<Axiom> sim_axioms{Axiom::PReflexivity, Axiom::PSymmetry,
                                        Axiom::InnerPSymmetry, Axiom::PDeterminism};
    std::vector<Axiom> rw_axioms = sim_axioms;
    rw_axioms.push_back(Axiom::InnerPReflexivity);

    Outcome o;
    std::size_t violations = 0, literal_violations = 0, checks = 0;
    std::map<std::string, std::size_t> literal_by_axiom;
    for (std::size_t i = 0; i < kRandomAlgebras; ++i) {
        auto alg = random_unary_algebra(rng, "R" + std::to_string(i));
        for (Axiom a : sim_axioms) {
            ++checks;
            auto r = check_axiom(a, {alg}, Framework::Sim, sim_engine);
            if (!r.holds) {
                ++violations;
                o.notes.push_back("sim " + r.schema.name + " on R" + std::to_string(i) + ": " +
                                  r.witness_text);
            }
            auto lit = check_axiom(a, {alg}, Framework::Sim, literal_engine);
            if (!lit.holds) {
                ++literal_violations;
                ++literal_by_axiom[lit.schema.name];
            }
        }
        for (Axiom a : rw_axioms) {
            ++checks;
            auto r = check_axiom(a, {alg}, Framework::Rw, rw_engine);
            if (!r.holds) {
                ++violations;
                o.notes.push_back("rw " + r.schema.name + " on R" + std::to_string(i) + ": " +
                                  r.witness_text);
            }
        }
    }
    const double elapsed = seconds_since(start);
    o.pass = violations == 0 && elapsed < 60.0;
    std::ostringstream s;
    s << kRandomAlgebras << " algebras, " << checks << " schema checks, " << violations
      << " violations (sim competitors=all), " << elapsed << "s";
    o.summary = s.str();
    std::ostringstream info;
    info << "info: sim with competitors=literal has " << literal_violations
         << " violating schema checks";
    for (const auto& [name, count] : literal_by_axiom)
        info << " " << name << "=" << count;
    o.notes.push_back(info.str());
    return o;
}

// ---------------------------------------------------------------------------
// 3. Naive oracle over raw term pairs
//
// With one unary symbol every term is f^k(xi). The oracle keeps every raw
// pair (s, t) up to depth 3 over x0, x1 without identifying equal
// functions, computes each pair's relation by direct iteration and decides
// both relations from those sets alone.

struct RawTerm {
    unsigned var;
    unsigned power;
};

struct Oracle {
    std::size_t n;
    std::vector<Element> f;
    std::vector<std::pair<RawTerm, RawTerm>> pairs;
    std::vector<std::vector<bool>> up; // arrow index -> pair membership
    std::vector<bool> trivial;
    std::vector<bool> rule;

    Oracle(std::size_t size, std::vector<Element> table) : n(size), f(std::move(table)) {
        std::vector<RawTerm> terms;
        for (unsigned v = 0; v < 2; ++v)
            for (unsigned k = 0; k <= 3; ++k)
                terms.push_back({v, k});
        for (const auto& s : terms)
            for (const auto& t : terms)
                pairs.push_back({s, t});
        up.assign(n * n, std::vector<bool>(pairs.size(), false));
        trivial.assign(pairs.size(), false);
        rule.assign(pairs.size(), false);
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            const auto& [s, t] = pairs[p];
            rule[p] = s.var == t.var;
            std::vector<bool> rel(n * n, false);
            for (Element x0 = 0; x0 < n; ++x0)
                for (Element x1 = 0; x1 < n; ++x1) {
                    const std::array<Element, 2> o{x0, x1};
                    const Element l = eval(s, o), r = eval(t, o);
                    rel[l * n + r] = true;
                    up[l * n + r][p] = true;
                }
            trivial[p] = std::all_of(rel.begin(), rel.end(), [](bool b) { return b; });
        }
    }

    Element eval(const RawTerm& t, const std::array<Element, 2>& o) const {
        Element x = o[t.var];
        for (unsigned k = 0; k < t.power; ++k)
            x = f[x];
        return x;
    }

    std::size_t arrow(Element a, Element b) const { return a * n + b; }

    using Set = std::vector<bool>;

    Set meet(const Set& x, const Set& y) const {
        Set out(x.size());
        for (std::size_t i = 0; i < x.size(); ++i)
            out[i] = x[i] && y[i];
        return out;
    }

    bool strictly_inside(const Set& x, const Set& y) const {
        bool differ = false;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] && !y[i])
                return false;
            differ = differ || (x[i] != y[i]);
        }
        return differ;
    }

    bool only_trivial(const Set& x) const {
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] && !trivial[i])
                return false;
        return true;
    }

    Set rules_of(const Set& x) const {
        Set out(x.size());
        for (std::size_t i = 0; i < x.size(); ++i)
            out[i] = x[i] && rule[i];
        return out;
    }

    Set join(const Set& x, const Set& y) const {
        Set out(x.size());
        for (std::size_t i = 0; i < x.size(); ++i)
            out[i] = x[i] || y[i];
        return out;
    }

    bool sim_arrow(std::size_t ar1, std::size_t ar2, bool literal) const {
        const Set& u1 = up[ar1];
        const Set& u2 = up[ar2];
        if (only_trivial(join(u1, u2)))
            return true;
        const Set shared = meet(u1, u2);
        if (only_trivial(shared))
            return false;
        for (std::size_t e = 0; e < n * n; ++e) {
            if (literal && e == ar1)
                continue;
            if (strictly_inside(shared, meet(u1, up[e])))
                return false;
        }
        return true;
    }

    bool rw_arrow(Element a, Element b, Element c, Element d) const {
        const Set j1 = rules_of(up[arrow(a, b)]);
        const Set j2 = rules_of(up[arrow(c, d)]);
        if (only_trivial(join(j1, j2)))
            return true;
        const Set shared = meet(j1, j2);
        if (only_trivial(shared))
            return false;
        for (Element d2 = 0; d2 < n; ++d2)
            if (strictly_inside(shared, meet(j1, rules_of(up[arrow(c, d2)]))))
                return false;
        return true;
    }

    bool sim(Element a, Element b, Element c, Element d, bool literal) const {
        return sim_arrow(arrow(a, b), arrow(c, d), literal) &&
               sim_arrow(arrow(b, a), arrow(d, c), literal) &&
               sim_arrow(arrow(c, d), arrow(a, b), literal) &&
               sim_arrow(arrow(d, c), arrow(b, a), literal);
    }

    bool rw(Element a, Element b, Element c, Element d) const {
        return rw_arrow(a, b, c, d) && rw_arrow(b, a, d, c) && rw_arrow(c, d, a, b) &&
               rw_arrow(d, c, b, a);
    }
};

Outcome oracle_criterion() {
    auto start = Clock::now();
    Outcome o;
    std::size_t algebras = 0, quads = 0, divergences = 0;
    Engine literal(Bounds{}, CompetitorPolicy::Literal);
    Engine all(Bounds{}, CompetitorPolicy::All);
    for (std::size_t n = 1; n <= 3; ++n) {
        std::size_t tables = 1;
        for (std::size_t i = 0; i < n; ++i)
            tables *= n;
        for (std::size_t code = 0; code < tables; ++code) {
            std::vector<Element> f(n);
            std::size_t rest = code;
            for (auto& v : f) {
                v = static_cast<Element>(rest % n);
                rest /= n;
            }
            std::vector<std::string> universe;
            for (std::size_t i = 0; i < n; ++i)
                universe.push_back(std::string(1, static_cast<char>('a' + i)));
            auto alg = std::make_shared<const FiniteAlgebra>(
                "O" + std::to_string(n) + "_" + std::to_string(code), Language({{"f", 1}}),
                universe, std::vector<FiniteAlgebra::Table>{f});
            Oracle oracle(n, f);
            ++algebras;
            for (Element a = 0; a < n; ++a)
                for (Element b = 0; b < n; ++b)
                    for (Element c = 0; c < n; ++c)
                        for (Element d = 0; d < n; ++d) {
                            ++quads;
                            const bool s1 = literal.holds(Framework::Sim, alg, alg, a, b, c, d);
                            const bool s2 = all.holds(Framework::Sim, alg, alg, a, b, c, d);
                            const bool r = literal.holds(Framework::Rw, alg, alg, a, b, c, d);
                            auto note = [&](const char* what, bool engine, bool naive) {
                                if (engine == naive)
                                    return;
                                ++divergences;
                                std::ostringstream s;
                                s << what << " " << alg->name() << " " << universe[a] << ":"
                                  << universe[b] << " " << universe[c] << ":" << universe[d]
                                  << " engine=" << engine << " oracle=" << naive;
                                o.notes.push_back(s.str());
                            };
                            note("sim/literal", s1, oracle.sim(a, b, c, d, true));
                            note("sim/all", s2, oracle.sim(a, b, c, d, false));
                            note("rw", r, oracle.rw(a, b, c, d));
                        }
        }
    }
    o.pass = divergences == 0;
    std::ostringstream s;
    s << algebras << " algebras, " << quads << " quadruples x 3 decisions, " << divergences
      << " divergences, " << seconds_since(start) << "s";
    o.summary = s.str();
    return o;
}

// ---------------------------------------------------------------------------
// 4. Isomorphism theorems

Outcome isomorphism_criterion() {
    auto start = Clock::now();
    Outcome o;
    std::mt19937_64 rng(kDefaultSeed);
    const Bounds bounds;
    std::vector<Mapping> isos;
    auto algebras = bundled_algebras();
    for (const auto& alg : algebras) {
        for (int i = 0; i < 2; ++i)
            isos.push_back(random_relabeling(alg, rng));
        for (auto& m : automorphisms(alg)) {
            bool identity = true;
            for (std::size_t e = 0; e < m.table.size(); ++e)
                identity = identity && m.table[e] == e;
            if (!identity)
                isos.push_back(std::move(m));
        }
    }
    std::size_t violations = 0, skipped = 0;
    for (const auto& h : isos) {
        for (const auto& r : {check_first_iso_theorem(h, bounds), check_second_iso_theorem(h, bounds)}) {
            skipped += r.skipped;
            violations += r.violations.size();
            for (const auto& v : r.violations)
                o.notes.push_back(r.name + ": " + v);
        }
    }

    std::vector<Mapping> homs;
    for (const auto& src : algebras)
        for (const auto& tgt : algebras) {
            if (!(src->language() == tgt->language()))
                continue;
            std::size_t taken = 0;
            for (auto& h : homomorphisms(src, tgt, 200)) {
                if (is_bijective(h) || taken == 2)
                    continue;
                homs.push_back(std::move(h));
                ++taken;
            }
        }
    std::size_t lemma_violations = 0, arrows = 0;
    for (const auto& h : homs) {
        auto r = check_isomorphism_lemma(h, bounds);
        arrows += r.checked;
        lemma_violations += r.violations.size();
        for (const auto& v : r.violations)
            o.notes.push_back(r.name + ": " + v);
    }
    o.pass = isos.size() >= 20 && homs.size() >= 10 && violations == 0 && lemma_violations == 0;
    std::ostringstream s;
    s << isos.size() << " isomorphisms, " << violations << " theorem violations (" << skipped
      << " arrows outside the premise); " << homs.size()
      << " non-injective homomorphisms, " << arrows << " arrows, " << lemma_violations
      << " lemma violations, " << seconds_since(start) << "s";
    o.summary = s.str();
    return o;
}

// ---------------------------------------------------------------------------
// 5 and 6. Rewrite rules to depth 2

std::vector<Term> terms_to_depth(const Language& L, unsigned depth) {
    std::vector<Term> terms{Term::variable(0), Term::variable(1)};
    for (std::size_t s = 0; s < L.size(); ++s)
        if (L[s].rank == 0)
            terms.push_back(Term::apply(L, s, {}));
    for (unsigned d = 0; d < depth; ++d) {
        std::vector<Term> next = terms;
        for (std::size_t s = 0; s < L.size(); ++s) {
            const unsigned rank = L[s].rank;
            if (rank == 0)
                continue;
            std::vector<std::size_t> idx(rank, 0);
            for (;;) {
                std::vector<Term> args;
                for (auto i : idx)
                    args.push_back(terms[i]);
                Term t = Term::apply(L, s, std::move(args));
                if (t.depth() == d + 1)
                    next.push_back(t);
                std::size_t k = 0;
                while (k < rank && ++idx[k] == terms.size())
                    idx[k++] = 0;
                if (k == rank)
                    break;
            }
        }
        terms = std::move(next);
    }
    return terms;
}

struct RuleSweep {
    std::size_t rules = 0;
    std::size_t checks = 0;
    std::size_t divergences = 0;
    std::size_t members = 0;
    std::size_t premise1 = 0;
    std::size_t premise2 = 0;
    std::size_t violations = 0;
    std::vector<std::string> divergence_notes;
    std::vector<std::string> violation_notes;
    double seconds = 0;
};

RuleSweep rule_sweep() {
    auto start = Clock::now();
    RuleSweep sweep;
    for (const auto& alg : bundled_algebras()) {
        PairContext ctx(alg, alg, Bounds{});
        const auto terms = terms_to_depth(alg->language(), 2);
        const auto n = static_cast<Element>(alg->size());
        for (const auto& s : terms)
            for (const auto& t : terms) {
                if (!is_rewrite_rule({s, t}))
                    continue;
                const RewriteRule rule(s, t);
                ++sweep.rules;
                for (Element a = 0; a < n; ++a)
                    for (Element b = 0; b < n; ++b)
                        for (Element c = 0; c < n; ++c)
                            for (Element d = 0; d < n; ++d) {
                                ++sweep.checks;
                                const bool via =
                                    jus_membership_via_solutions(rule, a, b, c, d, *alg, *alg);
                                const bool direct = jus_membership_direct(rule, a, b, c, d, ctx);
                                const std::string where =
                                    alg->name() + " " + rule.to_string() + " at " +
                                    alg->element_name(a) + "," + alg->element_name(b) + "," +
                                    alg->element_name(c) + "," + alg->element_name(d);
                                if (via != direct) {
                                    ++sweep.divergences;
                                    if (sweep.divergence_notes.size() < 10)
                                        sweep.divergence_notes.push_back(where);
                                }
                                if (!via)
                                    continue;
                                ++sweep.members;
                                auto r = uniqueness_lemma_check(rule, a, b, c, d, ctx);
                                sweep.premise1 += r.premise1;
                                sweep.premise2 += r.premise2;
                                if (r.violated()) {
                                    ++sweep.violations;
                                    if (sweep.violation_notes.size() < 10)
                                        sweep.violation_notes.push_back(
                                            where + (r.premise1 && !r.conclusion1
                                                         ? " (first implication)"
                                                         : " (second implication)"));
                                }
                            }
            }
    }
    sweep.seconds = seconds_since(start);
    return sweep;
}

Outcome membership_criterion(const RuleSweep& sweep) {
    Outcome o;
    o.pass = sweep.rules > 0 && sweep.divergences == 0;
    std::ostringstream s;
    s << sweep.rules << " rules, " << sweep.checks << " memberships, " << sweep.divergences
      << " divergences, " << sweep.seconds << "s (shared with 6)";
    o.summary = s.str();
    o.notes = sweep.divergence_notes;
    return o;
}

Outcome uniqueness_criterion(const RuleSweep& sweep) {
    Outcome o;
    auto spec = load_spec_file(data_path("algebras/AABB.alg"));
    auto alg = spec.algebras.at("AABB");
    PairContext ctx(alg, alg, Bounds{});
    const Element a = alg->element("a"), b = alg->element("b");
    const RewriteRule loop(parse_arrow_pattern("x0 -> x0", alg->language()));
    auto report = uniqueness_lemma_check(loop, a, a, b, b, ctx);
    const bool rw_holds = report.member && report.conclusion2;
    const bool characteristic =
        is_characteristic_justification_set({loop.pattern()}, {a, a}, {b, b}, *alg, *alg);

    o.pass = sweep.violations == 0 && rw_holds && !characteristic;
    std::ostringstream s;
    s << sweep.members << " memberships (" << sweep.premise1 << " with premise 1, "
      << sweep.premise2 << " with premise 2), " << sweep.violations << " violations; "
      << "AABB x0 ->> x0 at a,a,b,b: rw " << (rw_holds ? "holds" : "fails")
      << ", characteristic " << (characteristic ? "true" : "false");
    o.summary = s.str();
    o.notes = sweep.violation_notes;
    return o;
}

// ---------------------------------------------------------------------------
// 7. Determinism of the command-line transcript

struct Captured {
    std::string output;
    int status = -1;
};

Captured run(const std::string& command) {
    Captured c;
    FILE* pipe = popen((command + " 2>&1").c_str(), "r");
    if (!pipe)
        return c;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        c.output.append(buf.data(), got);
    c.status = pclose(pipe);
    return c;
}

std::string transcript() {
    const std::string cli = std::string("\"") + ANALOGY_CLI + "\"";
    const std::string flags = " --format machine --framework both";
    std::vector<std::string> commands;
    commands.push_back(cli + " vectors --format machine");
    for (const auto& f : bundled_files()) {
        commands.push_back(cli + " axioms \"" + f + "\"" + flags);
        commands.push_back(cli + " compare \"" + f + "\" --format machine");
    }
    commands.push_back(cli + " check \"" + data_path("algebras/PT.alg") + "\" a b c d" + flags);
    commands.push_back(cli + " check \"" + data_path("algebras/AABB.alg") + "\" a a b b" + flags);
    commands.push_back(cli + " solve \"" + data_path("algebras/CPT.alg") + "\" a b b" + flags);
    commands.push_back(cli + " iso \"" + data_path("algebras/SIR.alg") +
                       "\" swap --format machine");
    commands.push_back(cli + " properties --samples 25" + flags);
    std::string out;
    for (const auto& cmd : commands) {
        auto c = run(cmd);
        out += "$ " + cmd + "\n" + c.output + "status=" + std::to_string(c.status) + "\n";
    }
    return out;
}

Outcome determinism_criterion() {
    auto start = Clock::now();
    Outcome o;
    const std::string first = transcript();
    const std::string second = transcript();
    std::size_t lines = std::count(first.begin(), first.end(), '\n');
    bool ran = first.find("status=" + std::to_string(-1)) == std::string::npos &&
               first.find("line=") != std::string::npos;
    o.pass = ran && first == second;
    std::ostringstream s;
    s << "two transcripts of " << first.size() << " bytes, " << lines << " lines, "
      << (first == second ? "identical" : "different") << ", " << seconds_since(start) << "s";
    o.summary = s.str();
    if (!ran)
        o.notes.push_back("the command-line tool did not run: " + std::string(ANALOGY_CLI));
    if (first != second) {
        auto diff = std::mismatch(first.begin(), first.end(), second.begin(), second.end());
        o.notes.push_back("first difference at byte " +
                          std::to_string(diff.first - first.begin()));
    }
    return o;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        std::string name;
        std::function<Outcome()> run;
    };
    RuleSweep sweep;
    bool swept = false;
    auto shared_sweep = [&]() -> const RuleSweep& {
        if (!swept) {
            sweep = rule_sweep();
            swept = true;
        }
        return sweep;
    };
    const std::vector<Criterion> criteria{
        {1, "golden vectors", vectors_criterion},
        {2, "positive axioms on random algebras", positive_axioms_criterion},
        {3, "naive oracle equivalence", oracle_criterion},
        {4, "isomorphism theorems", isomorphism_criterion},
        {5, "justification membership via solution sets",
         [&] { return membership_criterion(shared_sweep()); }},
        {6, "uniqueness lemma", [&] { return uniqueness_criterion(shared_sweep()); }},
        {7, "deterministic machine output", determinism_criterion},
    };
    bool all = true;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.summary = std::string("error: ") + e.what();
        }
        all = all && o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": "
                  << o.summary << "\n";
        for (const auto& note : o.notes)
            std::cout << "       " << note << "\n";
        std::cout.flush();
    }
    return all ? 0 : 1;
}
