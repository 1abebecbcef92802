// Command-line front end: decide proportions, solve equations, check axiom
// schemata and isomorphism theorems, and run the bundled golden vectors.
//
// Exit status: 0 holds / pass, 1 fails / counterexample, 2 usage or input
// error.

#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "analogy/error.hpp"
#include "analogy/similarity.hpp"
#include "analogy/verify.hpp"

#ifndef ANALOGY_DATA_DIR
#define ANALOGY_DATA_DIR "data"
#endif

namespace {

using namespace analogy;

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kError = 2;

struct Options {
    std::string framework = "sim";
    std::optional<unsigned> max_depth;
    unsigned max_vars = 2;
    std::size_t class_cap = 100000;
    std::string competitors = "literal";
    std::string format = "human";
    std::uint64_t seed = kDefaultSeed;
    std::string with;

    Bounds bounds() const {
        Bounds b;
        b.max_depth = max_depth;
        b.max_vars = max_vars;
        b.class_cap = class_cap;
        b.validate();
        return b;
    }
    CompetitorPolicy policy() const { return *parse_competitor_policy(competitors); }
    bool machine() const { return format == "machine"; }
    std::vector<Framework> frameworks() const {
        if (framework == "both")
            return {Framework::Sim, Framework::Rw};
        return {*parse_framework(framework)};
    }
};

void add_common(CLI::App* cmd, Options& o, bool framework = true) {
    if (framework)
        cmd->add_option("--framework", o.framework, "sim, rw or both")
            ->check(CLI::IsMember({"sim", "rw", "both"}));
    cmd->add_option("--max-depth", o.max_depth, "term depth bound (default: unbounded)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-vars", o.max_vars, "number of variables x0..x(v-1)")
        ->check(CLI::Range(1u, Bounds::kMaxVars));
    cmd->add_option("--class-cap", o.class_cap, "abort beyond this many denotation classes")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--competitors", o.competitors, "maximality competitors: literal or all")
        ->check(CLI::IsMember({"literal", "all"}));
    cmd->add_option("--format", o.format, "human or machine")
        ->check(CLI::IsMember({"human", "machine"}));
    cmd->add_option("--seed", o.seed, "seed for randomized commands");
}

AlgebraPtr load_first(const std::string& path) {
    auto spec = load_spec_file(path);
    if (spec.algebra_order.empty())
        throw PreconditionError("'" + path + "' defines no algebra");
    return spec.algebras.at(spec.algebra_order.front());
}

struct Context {
    AlgebraPtr left;
    AlgebraPtr right;
};

Context load_context(const std::string& path, const Options& o) {
    Context ctx{load_first(path), {}};
    ctx.right = o.with.empty() ? ctx.left : load_first(o.with);
    return ctx;
}

void print_bounds_warning(const PairContext& ctx) {
    if (!ctx.clone().saturated())
        std::cerr << "warning: clone not saturated; verdicts are approximate at depth "
                  << ctx.clone().depth() << "\n";
}

int cmd_check(const Options& o, const std::string& file, const std::vector<std::string>& q) {
    auto ctx = load_context(file, o);
    Element a = ctx.left->element(q[0]), b = ctx.left->element(q[1]);
    Element c = ctx.right->element(q[2]), d = ctx.right->element(q[3]);
    Engine engine(o.bounds(), o.policy());
    print_bounds_warning(engine.context(ctx.left, ctx.right));
    bool all = true;
    for (Framework fw : o.frameworks()) {
        Verdict v = engine.verdict(fw, ctx.left, ctx.right, a, b, c, d);
        all = all && v.holds;
        if (o.machine()) {
            std::cout << "framework=" << to_string(fw) << " holds=" << (v.holds ? 1 : 0) << "\n"
                      << render_machine(v);
        } else {
            std::cout << to_string(fw) << ": " << (v.holds ? "holds" : "fails") << "\n"
                      << render_human(v);
        }
    }
    return all ? kHolds : kFails;
}

int cmd_solve(const Options& o, const std::string& file, const std::vector<std::string>& q) {
    auto ctx = load_context(file, o);
    Element a = ctx.left->element(q[0]), b = ctx.left->element(q[1]);
    Element c = ctx.right->element(q[2]);
    Engine engine(o.bounds(), o.policy());
    const PairContext& pc = engine.context(ctx.left, ctx.right);
    print_bounds_warning(pc);
    bool any = false;
    for (Framework fw : o.frameworks()) {
        auto solutions = fw == Framework::Sim ? solve_sim(a, b, c, pc, o.policy())
                                              : solve_rw(a, b, c, pc);
        any = any || !solutions.empty();
        if (solutions.empty()) {
            if (o.machine())
                std::cout << "framework=" << to_string(fw) << " d=none\n";
            else
                std::cout << to_string(fw) << ": no solution\n";
        }
        for (Element d : solutions) {
            if (o.machine())
                std::cout << "framework=" << to_string(fw) << " d=" << ctx.right->element_name(d)
                          << "\n";
            else if (o.frameworks().size() > 1)
                std::cout << to_string(fw) << ": " << ctx.right->element_name(d) << "\n";
            else
                std::cout << ctx.right->element_name(d) << "\n";
        }
    }
    return any ? kHolds : kFails;
}

int cmd_similar(const Options& o, const std::string& file, const std::vector<std::string>& q) {
    auto ctx = load_context(file, o);
    Element a = ctx.left->element(q[0]);
    Element b = ctx.right->element(q[1]);
    PairContext pc(ctx.left, ctx.right, o.bounds());
    print_bounds_warning(pc);
    Verdict v = similar(a, b, pc, o.policy());
    std::cout << (o.machine() ? render_machine(v) : render_human(v));
    return v.holds ? kHolds : kFails;
}

void print_set(const std::string& label, const PairContext& ctx, const Bitset& set, bool rules,
               const Options& o) {
    const Bitset non_trivial = set - ctx.trivial_pairs();
    auto members = describe_pairs(ctx, non_trivial, rules, non_trivial.count());
    if (o.machine()) {
        std::cout << "set=\"" << label << "\" non_trivial=" << non_trivial.count()
                  << " trivial=" << (set & ctx.trivial_pairs()).count();
        for (const auto& m : members)
            std::cout << " member=\"" << m << "\"";
        std::cout << "\n";
        return;
    }
    std::cout << label << ": " << non_trivial.count() << " non-trivial, "
              << (set & ctx.trivial_pairs()).count() << " trivial\n";
    if (members.empty())
        std::cout << "  (no non-trivial member)\n";
    for (const auto& m : members)
        std::cout << "  " << m << "\n";
}

int cmd_justifications(const Options& o, const std::string& file,
                       const std::vector<std::string>& q) {
    auto ctx = load_context(file, o);
    Arrow ar1{ctx.left->element(q[0]), ctx.left->element(q[1])};
    Arrow ar2{ctx.right->element(q[2]), ctx.right->element(q[3])};
    PairContext pc(ctx.left, ctx.right, o.bounds());
    print_bounds_warning(pc);
    const std::string n1 = to_string(ar1, *ctx.left), n2 = to_string(ar2, *ctx.right);
    bool shared_non_trivial = false;
    for (Framework fw : o.frameworks()) {
        if (fw == Framework::Sim) {
            const Bitset& up1 = pc.arrow_up(Side::Left, ar1);
            const Bitset& up2 = pc.arrow_up(Side::Right, ar2);
            print_set("sim Up(" + n1 + ") in " + ctx.left->name(), pc, up1, false, o);
            print_set("sim Up(" + n2 + ") in " + ctx.right->name(), pc, up2, false, o);
            Bitset shared = up1 & up2;
            print_set("sim (" + n1 + ") Up (" + n2 + ")", pc, shared, false, o);
            shared_non_trivial = shared_non_trivial || !shared.is_subset_of(pc.trivial_pairs());
        } else {
            auto j1 = jus_set(ar1, Side::Left, pc);
            auto j2 = jus_set(ar2, Side::Right, pc);
            print_set("rw Jus(" + n1 + ") in " + ctx.left->name(), pc, j1.pairs, true, o);
            print_set("rw Jus(" + n2 + ") in " + ctx.right->name(), pc, j2.pairs, true, o);
            Bitset shared = j1.pairs & j2.pairs;
            print_set("rw Jus(" + n1 + " :. " + n2 + ")", pc, shared, true, o);
            shared_non_trivial = shared_non_trivial || !shared.is_subset_of(pc.trivial_pairs());
        }
    }
    std::cout << (o.machine() ? "bounds " : "bounds: ") << pc.bound_info().to_string() << "\n";
    return shared_non_trivial ? kHolds : kFails;
}

int cmd_axioms(const Options& o, const std::vector<std::string>& files,
               const std::vector<std::string>& names) {
    std::vector<AlgebraPtr> algebras;
    for (const auto& f : files)
        algebras.push_back(load_first(f));
    std::vector<Axiom> axioms;
    if (names.empty()) {
        for (const auto& s : axiom_schemata())
            axioms.push_back(s.id);
    } else {
        for (const auto& n : names) {
            auto a = parse_axiom(n);
            if (!a)
                throw PreconditionError("unknown axiom '" + n + "'");
            axioms.push_back(*a);
        }
    }
    Engine engine(o.bounds(), o.policy());
    bool all = true;
    for (Framework fw : o.frameworks())
        for (Axiom axiom : axioms) {
            const auto& schema = schema_of(axiom);
            if (algebras.size() != 1 && algebras.size() != schema.arity) {
                if (!names.empty())
                    throw PreconditionError(schema.name + " needs " +
                                            std::to_string(schema.arity) + " algebras");
                continue;
            }
            auto r = check_axiom(axiom, algebras, fw, engine);
            all = all && r.holds;
            std::string where;
            for (std::size_t i = 0; i < r.algebras.size(); ++i)
                where += (i ? "," : "") + r.algebras[i]->name();
            if (o.machine()) {
                std::cout << "axiom=" << schema.name << " framework=" << to_string(fw)
                          << " algebras=" << where << " holds=" << (r.holds ? 1 : 0)
                          << " instances=" << r.instances << " exact=" << (r.exact ? 1 : 0);
                if (!r.holds) {
                    std::cout << " witness=";
                    for (std::size_t i = 0; i < r.witness.size(); ++i)
                        std::cout << (i ? "," : "") << schema.variables[i] << "=" << r.witness[i];
                    std::cout << " detail=\"" << r.witness_text << "\"";
                }
                std::cout << "\n";
            } else {
                std::cout << to_string(fw) << " " << schema.name << " on (" << where
                          << "): " << (r.holds ? "holds" : "counterexample");
                if (!r.holds)
                    std::cout << ": " << r.witness_text;
                if (!r.exact)
                    std::cout << " (approximate)";
                std::cout << "\n";
            }
        }
    return all ? kHolds : kFails;
}

int cmd_iso(const Options& o, const std::string& file, const std::string& mapping) {
    auto spec = load_spec_file(file);
    auto it = spec.mappings.find(mapping);
    if (it == spec.mappings.end())
        throw PreconditionError("no mapping '" + mapping + "' in '" + file + "'");
    const Mapping& h = it->second;
    std::vector<IsoReport> reports;
    reports.push_back(check_isomorphism_lemma(h, o.bounds()));
    reports.push_back(check_first_iso_theorem(h, o.bounds(), o.policy()));
    if (is_isomorphism(h))
        reports.push_back(check_second_iso_theorem(h, o.bounds(), o.policy()));
    bool all = true;
    for (const auto& r : reports) {
        all = all && r.holds();
        if (o.machine()) {
            std::cout << "check=\"" << r.name << "\" holds=" << (r.holds() ? 1 : 0)
                      << " checked=" << r.checked << " skipped=" << r.skipped
                      << " exact=" << (r.exact ? 1 : 0) << "\n";
        } else {
            std::cout << r.name << ": " << (r.holds() ? "holds" : "violated") << " ("
                      << r.checked << " checked, " << r.skipped << " premise not met)\n";
        }
        for (const auto& v : r.violations)
            std::cout << (o.machine() ? "violation=\"" + v + "\"" : "  " + v) << "\n";
    }
    return all ? kHolds : kFails;
}

int cmd_compare(const Options& o, const std::string& file) {
    auto ctx = load_context(file, o);
    Engine engine(o.bounds(), o.policy());
    print_bounds_warning(engine.context(ctx.left, ctx.right));
    auto diffs = compare_frameworks(ctx.left, ctx.right, engine);
    for (const auto& d : diffs) {
        std::string quad = d.quad[0] + ":" + d.quad[1] + " vs " + d.quad[2] + ":" + d.quad[3];
        if (o.machine())
            std::cout << "quad=" << d.quad[0] << "," << d.quad[1] << "," << d.quad[2] << ","
                      << d.quad[3] << " sim=" << d.sim << " rw=" << d.rw << "\n";
        else
            std::cout << quad << "  sim=" << (d.sim ? "holds" : "fails")
                      << "  rw=" << (d.rw ? "holds" : "fails") << "\n";
    }
    if (!o.machine())
        std::cout << diffs.size() << " difference(s)\n";
    return kHolds;
}

int cmd_vectors(const Options& o, const std::string& path) {
    Engine engine(o.bounds(), o.policy());
    auto results = run_paper_vectors(path, engine);
    std::size_t failed = 0;
    for (const auto& r : results) {
        if (!r.pass())
            ++failed;
        if (o.machine()) {
            std::cout << "line=" << r.line << " pass=" << (r.pass() ? 1 : 0)
                      << " expected=" << r.expected << " actual=" << r.actual
                      << " exact=" << r.exact << " vector=\"" << r.text << "\"";
            if (!r.detail.empty())
                std::cout << " detail=\"" << r.detail << "\"";
            std::cout << "\n";
        } else {
            std::cout << (r.pass() ? "PASS " : "FAIL ") << r.text;
            if (!r.pass() && !r.detail.empty())
                std::cout << "\n     " << r.detail;
            std::cout << "\n";
        }
    }
    if (!o.machine())
        std::cout << results.size() - failed << "/" << results.size() << " vectors pass\n";
    return failed == 0 ? kHolds : kFails;
}

// Positive axioms over seeded random algebras.
int cmd_properties(const Options& o, std::size_t samples) {
    std::mt19937_64 rng(o.seed);
    Engine engine(o.bounds(), o.policy());
    const std::vector<Axiom> sim_axioms{Axiom::PReflexivity, Axiom::PSymmetry,
                                        Axiom::InnerPSymmetry, Axiom::PDeterminism};
    std::size_t violations = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        auto alg = random_unary_algebra(rng, "R" + std::to_string(i));
        for (Framework fw : o.frameworks()) {
            auto axioms = sim_axioms;
            if (fw == Framework::Rw)
                axioms.push_back(Axiom::InnerPReflexivity);
            for (Axiom a : axioms) {
                auto r = check_axiom(a, {alg}, fw, engine);
                if (r.holds)
                    continue;
                ++violations;
                std::cout << (o.machine() ? "violation " : "violation: ") << to_string(fw) << " "
                          << r.schema.name << " on\n"
                          << to_spec(*alg) << "  " << r.witness_text << "\n";
            }
        }
    }
    std::cout << (o.machine() ? "samples=" : "samples: ") << samples
              << (o.machine() ? " seed=" : ", seed ") << o.seed
              << (o.machine() ? " violations=" : ", violations: ") << violations << "\n";
    return violations == 0 ? kHolds : kFails;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Analogical proportions over finite algebras"};
    app.require_subcommand(1);
    Options o;
    std::string file, mapping, vectors_path = std::string(ANALOGY_DATA_DIR) + "/golden_vectors.txt";
    std::vector<std::string> elements, files, axioms;
    std::size_t samples = 100;

    auto* check = app.add_subcommand("check", "decide a:b : c:d");
    add_common(check, o);
    check->add_option("--with", o.with, "algebra holding c and d (default: the first)");
    check->add_option("algebra", file)->required();
    check->add_option("elements", elements, "a b c d")->required()->expected(4);

    auto* solve = app.add_subcommand("solve", "all d with a:b : c:d");
    add_common(solve, o);
    solve->add_option("--with", o.with, "algebra holding c and d");
    solve->add_option("algebra", file)->required();
    solve->add_option("elements", elements, "a b c")->required()->expected(3);

    auto* sim = app.add_subcommand("similar", "decide a ~ b");
    add_common(sim, o, false);
    sim->add_option("--with", o.with, "algebra holding b");
    sim->add_option("algebra", file)->required();
    sim->add_option("elements", elements, "a b")->required()->expected(2);

    auto* jus = app.add_subcommand("justifications", "list justifications of a->b and c->d");
    add_common(jus, o);
    jus->add_option("--with", o.with, "algebra holding c and d");
    jus->add_option("algebra", file)->required();
    jus->add_option("elements", elements, "a b c d")->required()->expected(4);

    auto* ax = app.add_subcommand("axioms", "check axiom schemata");
    add_common(ax, o);
    ax->add_option("--axiom", axioms, "schema name (repeatable; default: all)");
    ax->add_option("algebras", files, "one algebra, or one per context position")
        ->required();

    auto* iso = app.add_subcommand("iso", "check the isomorphism lemma and theorems");
    add_common(iso, o, false);
    iso->add_option("spec", file, "file defining the mapping and its algebras")->required();
    iso->add_option("mapping", mapping)->required();

    auto* cmp = app.add_subcommand("compare", "quadruples where sim and rw differ");
    add_common(cmp, o, false);
    cmp->add_option("--with", o.with, "second algebra");
    cmp->add_option("algebra", file)->required();

    auto* vec = app.add_subcommand("vectors", "run the golden vectors");
    add_common(vec, o, false);
    vec->add_option("file", vectors_path, "vector file")->capture_default_str();

    auto* props = app.add_subcommand("properties", "positive axioms on random algebras");
    add_common(props, o);
    props->add_option("--samples", samples, "number of random algebras")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kError;
    }

    try {
        if (*check)
            return cmd_check(o, file, elements);
        if (*solve)
            return cmd_solve(o, file, elements);
        if (*sim)
            return cmd_similar(o, file, elements);
        if (*jus)
            return cmd_justifications(o, file, elements);
        if (*ax)
            return cmd_axioms(o, files, axioms);
        if (*iso)
            return cmd_iso(o, file, mapping);
        if (*cmp)
            return cmd_compare(o, file);
        if (*vec)
            return cmd_vectors(o, vectors_path);
        if (*props)
            return cmd_properties(o, samples);
    } catch (const analogy::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
