#include "analogy/verify.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include "analogy/error.hpp"

namespace analogy {

std::string to_string(Framework fw) { return fw == Framework::Sim ? "sim" : "rw"; }

std::optional<Framework> parse_framework(std::string_view text) {
    if (text == "sim")
        return Framework::Sim;
    if (text == "rw")
        return Framework::Rw;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Engine

Engine::Engine(Bounds bounds, CompetitorPolicy policy) : bounds_(bounds), policy_(policy) {
    bounds_.validate();
}

Engine::Entry& Engine::entry(const AlgebraPtr& left, const AlgebraPtr& right) {
    auto key = std::make_pair(left.get(), right.get());
    if (auto it = entries_.find(key); it != entries_.end())
        return it->second;
    auto memo_size = [](const AlgebraPtr& x, const AlgebraPtr& y) {
        const std::size_t n = x->size(), m = y->size();
        return n * n * m * m;
    };
    auto back = entries_.find({right.get(), left.get()});
    PairContext ctx = back != entries_.end() ? back->second.ctx.flipped()
                                             : PairContext(left, right, bounds_);
    keep_alive_.push_back(left);
    keep_alive_.push_back(right);
    Entry e{ctx, {}};
    e.memo[0].assign(memo_size(left, right), -1);
    e.memo[1].assign(memo_size(left, right), -1);
    return entries_.emplace(key, std::move(e)).first->second;
}

const PairContext& Engine::context(const AlgebraPtr& left, const AlgebraPtr& right) {
    return entry(left, right).ctx;
}

bool Engine::arrow_holds(Framework fw, const AlgebraPtr& left, const AlgebraPtr& right,
                         const Arrow& ar1, const Arrow& ar2) {
    Entry& e = entry(left, right);
    const std::size_t n = left->size(), m = right->size();
    const std::size_t index = (ar1.src * n + ar1.dst) * m * m + ar2.src * m + ar2.dst;
    auto& memo = e.memo[fw == Framework::Sim ? 0 : 1];
    if (memo.at(index) < 0) {
        bool result = fw == Framework::Sim ? arrow_lesssim_holds(ar1, ar2, e.ctx, policy_)
                                           : arrow_proportion_rw_holds(ar1, ar2, e.ctx);
        memo[index] = result ? 1 : 0;
    }
    return memo[index] == 1;
}

bool Engine::holds(Framework fw, const AlgebraPtr& left, const AlgebraPtr& right, Element a,
                   Element b, Element c, Element d) {
    return arrow_holds(fw, left, right, {a, b}, {c, d}) &&
           arrow_holds(fw, left, right, {b, a}, {d, c}) &&
           arrow_holds(fw, right, left, {c, d}, {a, b}) &&
           arrow_holds(fw, right, left, {d, c}, {b, a});
}

Verdict Engine::verdict(Framework fw, const AlgebraPtr& left, const AlgebraPtr& right, Element a,
                        Element b, Element c, Element d) {
    const PairContext& ctx = context(left, right);
    return fw == Framework::Sim ? proportion_sim(a, b, c, d, ctx, policy_)
                                : proportion_rw(a, b, c, d, ctx);
}

// ---------------------------------------------------------------------------
// Axiom schemata

const std::vector<AxiomSchema>& axiom_schemata() {
    static const std::vector<AxiomSchema> schemata{
        {Axiom::PReflexivity, "p-reflexivity", 1, "a:b :_A a:b", {"a", "b"}},
        {Axiom::PSymmetry, "p-symmetry", 2, "a:b :_(A,B) c:d <=> c:d :_(B,A) a:b",
         {"a", "b", "c", "d"}},
        {Axiom::InnerPSymmetry, "inner-p-symmetry", 2, "a:b :_(A,B) c:d <=> b:a :_(A,B) d:c",
         {"a", "b", "c", "d"}},
        {Axiom::PDeterminism, "p-determinism", 1, "a:a :_A a:d <=> d = a", {"a", "d"}},
        {Axiom::InnerPReflexivity, "inner-p-reflexivity", 2, "a:a :_(A,B) c:c", {"a", "c"}},
        {Axiom::CentralPermutation, "central-permutation", 1, "a:b :_A c:d <=> a:c :_A b:d",
         {"a", "b", "c", "d"}},
        {Axiom::StrongInnerPReflexivity, "strong-inner-p-reflexivity", 1,
         "a:a :_A c:d => d = c", {"a", "c", "d"}},
        {Axiom::StrongPReflexivity, "strong-p-reflexivity", 1, "a:b :_A a:d => d = b",
         {"a", "b", "d"}},
        {Axiom::PCommutativity, "p-commutativity", 2, "a:b :_(A,B) b:a for a, b in A and B",
         {"a", "b"}},
        {Axiom::PTransitivity, "p-transitivity", 3,
         "a:b :_(A,B) c:d and c:d :_(B,C) e:f => a:b :_(A,C) e:f",
         {"a", "b", "c", "d", "e", "f"}},
        {Axiom::InnerPTransitivity, "inner-p-transitivity", 2,
         "a:b :_(A,B) c:d and b:e :_(A,B) d:f => a:e :_(A,B) c:f",
         {"a", "b", "e", "c", "d", "f"}},
        {Axiom::CentralPTransitivity, "central-p-transitivity", 3,
         "a:b :_(A,B) b:c and b:c :_(B,C) c:d => a:b :_(A,C) c:d", {"a", "b", "c", "d"}},
    };
    return schemata;
}

const AxiomSchema& schema_of(Axiom axiom) {
    for (const auto& s : axiom_schemata())
        if (s.id == axiom)
            return s;
    throw PreconditionError("unknown axiom");
}

std::optional<Axiom> parse_axiom(std::string_view name) {
    std::string normalized(name);
    std::replace(normalized.begin(), normalized.end(), ' ', '-');
    std::replace(normalized.begin(), normalized.end(), '_', '-');
    for (const auto& s : axiom_schemata())
        if (s.name == normalized)
            return s.id;
    return std::nullopt;
}

namespace {

using Decide = std::function<bool(std::size_t, std::size_t, Element, Element, Element, Element)>;

// Variables of a schema with the algebra each ranges over and, for the
// cross-universe conditions, the algebra it must also belong to by name.
struct Slot {
    std::size_t home;
    std::optional<std::size_t> also;
};

std::vector<Slot> slots_of(Axiom axiom) {
    switch (axiom) {
    case Axiom::PReflexivity:
    case Axiom::PDeterminism:
        return {{0, {}}, {0, {}}};
    case Axiom::PSymmetry:
    case Axiom::InnerPSymmetry:
        return {{0, {}}, {0, {}}, {1, {}}, {1, {}}};
    case Axiom::InnerPReflexivity:
        return {{0, {}}, {1, {}}};
    case Axiom::CentralPermutation:
        return {{0, {}}, {0, {}}, {0, {}}, {0, {}}};
    case Axiom::StrongInnerPReflexivity:
    case Axiom::StrongPReflexivity:
        return {{0, {}}, {0, {}}, {0, {}}};
    case Axiom::PCommutativity:
        return {{0, 1}, {0, 1}};
    case Axiom::PTransitivity:
        return {{0, {}}, {0, {}}, {1, {}}, {1, {}}, {2, {}}, {2, {}}};
    case Axiom::InnerPTransitivity:
        return {{0, {}}, {0, {}}, {0, {}}, {1, {}}, {1, {}}, {1, {}}};
    case Axiom::CentralPTransitivity:
        return {{0, {}}, {0, 1}, {1, 2}, {2, {}}};
    }
    return {};
}

class AxiomInstance {
public:
    AxiomInstance(Axiom axiom, const std::vector<AlgebraPtr>& algebras, Framework fw)
        : axiom_(axiom), algebras_(algebras), fw_(fw) {}

    const char* rel() const { return fw_ == Framework::Sim ? " ~ " : " :: "; }

    // Element x of algebra `home` seen in algebra k (by name).
    Element in(std::size_t k, std::size_t home, Element x) const {
        if (k == home || algebras_[k].get() == algebras_[home].get())
            return x;
        return algebras_[k]->element(algebras_[home]->element_name(x));
    }

    std::string quad(std::size_t i, std::size_t j, Element a, Element b, Element c,
                     Element d) const {
        const auto& A = *algebras_[i];
        const auto& B = *algebras_[j];
        std::string ctx = i == j ? A.name() : "(" + A.name() + "," + B.name() + ")";
        return A.element_name(a) + ":" + A.element_name(b) + rel() + B.element_name(c) + ":" +
               B.element_name(d) + " in " + ctx;
    }

    // Violation text for the tuple, or nothing if the instance holds.
    std::optional<std::string> violation(const std::vector<Element>& t, const Decide& p) const {
        auto yes = [](const std::string& s) { return s + " holds"; };
        auto no = [](const std::string& s) { return s + " fails"; };
        switch (axiom_) {
        case Axiom::PReflexivity:
            if (!p(0, 0, t[0], t[1], t[0], t[1]))
                return no(quad(0, 0, t[0], t[1], t[0], t[1]));
            return std::nullopt;
        case Axiom::PSymmetry: {
            bool x = p(0, 1, t[0], t[1], t[2], t[3]);
            bool y = p(1, 0, t[2], t[3], t[0], t[1]);
            if (x != y)
                return (x ? yes : no)(quad(0, 1, t[0], t[1], t[2], t[3])) + " but " +
                       (y ? yes : no)(quad(1, 0, t[2], t[3], t[0], t[1]));
            return std::nullopt;
        }
        case Axiom::InnerPSymmetry: {
            bool x = p(0, 1, t[0], t[1], t[2], t[3]);
            bool y = p(0, 1, t[1], t[0], t[3], t[2]);
            if (x != y)
                return (x ? yes : no)(quad(0, 1, t[0], t[1], t[2], t[3])) + " but " +
                       (y ? yes : no)(quad(0, 1, t[1], t[0], t[3], t[2]));
            return std::nullopt;
        }
        case Axiom::PDeterminism: {
            bool x = p(0, 0, t[0], t[0], t[0], t[1]);
            if (x != (t[0] == t[1]))
                return (x ? yes : no)(quad(0, 0, t[0], t[0], t[0], t[1]));
            return std::nullopt;
        }
        case Axiom::InnerPReflexivity:
            if (!p(0, 1, t[0], t[0], t[1], t[1]))
                return no(quad(0, 1, t[0], t[0], t[1], t[1]));
            return std::nullopt;
        case Axiom::CentralPermutation: {
            bool x = p(0, 0, t[0], t[1], t[2], t[3]);
            bool y = p(0, 0, t[0], t[2], t[1], t[3]);
            if (x != y)
                return (x ? yes : no)(quad(0, 0, t[0], t[1], t[2], t[3])) + " but " +
                       (y ? yes : no)(quad(0, 0, t[0], t[2], t[1], t[3]));
            return std::nullopt;
        }
        case Axiom::StrongInnerPReflexivity:
            if (t[1] != t[2] && p(0, 0, t[0], t[0], t[1], t[2]))
                return yes(quad(0, 0, t[0], t[0], t[1], t[2]));
            return std::nullopt;
        case Axiom::StrongPReflexivity:
            if (t[1] != t[2] && p(0, 0, t[0], t[1], t[0], t[2]))
                return yes(quad(0, 0, t[0], t[1], t[0], t[2]));
            return std::nullopt;
        case Axiom::PCommutativity:
            if (!p(0, 1, t[0], t[1], in(1, 0, t[1]), in(1, 0, t[0])))
                return no(quad(0, 1, t[0], t[1], in(1, 0, t[1]), in(1, 0, t[0])));
            return std::nullopt;
        case Axiom::PTransitivity:
            if (p(0, 1, t[0], t[1], t[2], t[3]) && p(1, 2, t[2], t[3], t[4], t[5]) &&
                !p(0, 2, t[0], t[1], t[4], t[5]))
                return yes(quad(0, 1, t[0], t[1], t[2], t[3])) + " and " +
                       yes(quad(1, 2, t[2], t[3], t[4], t[5])) + " but " +
                       no(quad(0, 2, t[0], t[1], t[4], t[5]));
            return std::nullopt;
        case Axiom::InnerPTransitivity: {
            // Tuple order: a, b, e in A then c, d, f in B.
            Element a = t[0], b = t[1], e = t[2], c = t[3], d = t[4], f = t[5];
            if (p(0, 1, a, b, c, d) && p(0, 1, b, e, d, f) && !p(0, 1, a, e, c, f))
                return yes(quad(0, 1, a, b, c, d)) + " and " + yes(quad(0, 1, b, e, d, f)) +
                       " but " + no(quad(0, 1, a, e, c, f));
            return std::nullopt;
        }
        case Axiom::CentralPTransitivity: {
            Element a = t[0], b = t[1], c = t[2], d = t[3];
            Element b1 = in(1, 0, b), c2 = in(2, 1, c);
            if (p(0, 1, a, b, b1, c) && p(1, 2, b1, c, c2, d) && !p(0, 2, a, b, c2, d))
                return yes(quad(0, 1, a, b, b1, c)) + " and " + yes(quad(1, 2, b1, c, c2, d)) +
                       " but " + no(quad(0, 2, a, b, c2, d));
            return std::nullopt;
        }
        }
        return std::nullopt;
    }

    // Domain of each slot: elements of its home algebra that also occur
    // (by name) in the required second algebra.
    std::vector<std::vector<Element>> domains() const {
        std::vector<std::vector<Element>> out;
        for (const auto& slot : slots_of(axiom_)) {
            const auto& home = *algebras_[slot.home];
            std::vector<Element> dom;
            for (Element e = 0; e < home.size(); ++e)
                if (!slot.also || algebras_[*slot.also]->find(home.element_name(e)))
                    dom.push_back(e);
            out.push_back(std::move(dom));
        }
        return out;
    }

private:
    Axiom axiom_;
    const std::vector<AlgebraPtr>& algebras_;
    Framework fw_;
};

std::vector<AlgebraPtr> broadcast(const AxiomSchema& schema, std::vector<AlgebraPtr> algebras) {
    if (algebras.size() == 1 && schema.arity > 1)
        algebras.assign(schema.arity, algebras.front());
    if (algebras.size() != schema.arity)
        throw PreconditionError(schema.name + " needs " + std::to_string(schema.arity) +
                                " algebras, got " + std::to_string(algebras.size()));
    for (const auto& a : algebras)
        if (!(a->language() == algebras.front()->language()))
            throw PreconditionError("algebras of an axiom context must share a language");
    return algebras;
}

} // namespace

CheckReport check_axiom(Axiom axiom, std::vector<AlgebraPtr> algebras, Framework fw,
                        Engine& engine) {
    CheckReport report;
    report.schema = schema_of(axiom);
    report.framework = fw;
    report.policy = engine.policy();
    report.algebras = broadcast(report.schema, std::move(algebras));
    const auto& algs = report.algebras;

    AxiomInstance instance(axiom, algs, fw);
    Decide decide = [&](std::size_t i, std::size_t j, Element a, Element b, Element c,
                        Element d) { return engine.holds(fw, algs[i], algs[j], a, b, c, d); };

    auto domains = instance.domains();
    std::vector<std::size_t> pos(domains.size(), 0);
    std::vector<Element> tuple(domains.size());
    bool empty = std::any_of(domains.begin(), domains.end(),
                             [](const auto& d) { return d.empty(); });
    while (!empty) {
        for (std::size_t i = 0; i < pos.size(); ++i)
            tuple[i] = domains[i][pos[i]];
        ++report.instances;
        if (auto why = instance.violation(tuple, decide)) {
            report.holds = false;
            for (std::size_t i = 0; i < tuple.size(); ++i)
                report.witness.push_back(
                    algs[slots_of(axiom)[i].home]->element_name(tuple[i]));
            report.witness_text = *why;
            break;
        }
        std::size_t k = pos.size();
        while (k > 0) {
            --k;
            if (++pos[k] < domains[k].size())
                break;
            pos[k] = 0;
            if (k == 0) {
                empty = true;
                break;
            }
        }
        if (pos.empty())
            break;
    }

    for (const auto& x : algs)
        for (const auto& y : algs) {
            const auto& ctx = engine.context(x, y);
            report.exact = report.exact && ctx.clone().saturated();
            report.bounds = ctx.bound_info().to_string();
        }
    return report;
}

bool recheck_counterexample(const CheckReport& report, Engine& engine) {
    if (report.holds)
        return false;
    const auto& algs = report.algebras;
    AxiomInstance instance(report.schema.id, algs, report.framework);
    std::vector<Element> tuple;
    const auto slots = slots_of(report.schema.id);
    for (std::size_t i = 0; i < report.witness.size(); ++i)
        tuple.push_back(algs[slots[i].home]->element(report.witness[i]));
    Decide decide = [&](std::size_t i, std::size_t j, Element a, Element b, Element c,
                        Element d) {
        return engine.verdict(report.framework, algs[i], algs[j], a, b, c, d).holds;
    };
    return instance.violation(tuple, decide).has_value();
}

// ---------------------------------------------------------------------------
// Golden vectors

std::vector<VectorResult> run_paper_vectors(const std::string& path, Engine& engine) {
    std::ifstream in(path);
    if (!in)
        throw PreconditionError("cannot read '" + path + "'");
    const auto dir = std::filesystem::path(path).parent_path();
    std::map<std::string, AlgebraPtr> loaded;
    auto algebra = [&](const std::string& file) {
        auto it = loaded.find(file);
        if (it != loaded.end())
            return it->second;
        auto spec = load_spec_file((dir / file).string());
        if (spec.algebra_order.empty())
            throw PreconditionError("'" + file + "' defines no algebra");
        return loaded[file] = spec.algebras.at(spec.algebra_order.front());
    };

    std::vector<VectorResult> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream words(line);
        std::vector<std::string> w{std::istream_iterator<std::string>(words), {}};
        if (w.empty())
            continue;
        auto bad = [&](const std::string& why) {
            return ParseError(why + " in '" + path + "'", line_no, 1);
        };
        if (w.size() < 4)
            throw bad("incomplete vector");
        auto fw = parse_framework(w[2]);
        if (!fw)
            throw bad("unknown framework '" + w[2] + "'");
        VectorResult r;
        r.line = line_no;
        for (std::size_t i = 0; i < w.size(); ++i)
            r.text += (i ? " " : "") + w[i];
        AlgebraPtr alg = algebra(w[1]);
        if (w[0] == "quad" || w[0] == "arrow") {
            if (w.size() != 8 || (w[7] != "holds" && w[7] != "fails"))
                throw bad("expected: " + w[0] + " <file> <sim|rw> a b c d <holds|fails>");
            Element a = alg->element(w[3]), b = alg->element(w[4]);
            Element c = alg->element(w[5]), d = alg->element(w[6]);
            r.expected = w[7] == "holds";
            if (w[0] == "quad") {
                r.actual = engine.holds(*fw, alg, alg, a, b, c, d);
                if (!r.pass()) {
                    auto v = engine.verdict(*fw, alg, alg, a, b, c, d);
                    const Verdict* f = v.first_failure();
                    r.detail = f ? "failing part: " + f->statement + " [" +
                                       to_string(f->reason) + "]"
                                 : "all parts hold";
                }
            } else {
                r.actual = engine.arrow_holds(*fw, alg, alg, {a, b}, {c, d});
            }
        } else if (w[0] == "axiom") {
            if (w.size() != 5 || (w[4] != "holds" && w[4] != "counterexample"))
                throw bad("expected: axiom <file> <sim|rw> <schema> <holds|counterexample>");
            auto axiom = parse_axiom(w[3]);
            if (!axiom)
                throw bad("unknown axiom '" + w[3] + "'");
            r.expected = w[4] == "holds";
            auto report = check_axiom(*axiom, {alg}, *fw, engine);
            r.actual = report.holds;
            r.detail = report.holds ? "no counterexample" : report.witness_text;
        } else {
            throw bad("unknown vector kind '" + w[0] + "'");
        }
        r.exact = engine.context(alg, alg).clone().saturated();
        out.push_back(std::move(r));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Isomorphism theorems

namespace {

void require_homomorphism(const Mapping& h) {
    if (!is_homomorphism(h))
        throw PreconditionError("'" + h.name + "' is not a homomorphism");
}

std::string arrow_text(const FiniteAlgebra& alg, Element a, Element b) {
    return alg.element_name(a) + "->" + alg.element_name(b);
}

} // namespace

IsoReport check_isomorphism_lemma(const Mapping& h, const Bounds& bounds) {
    require_homomorphism(h);
    const bool iso = is_isomorphism(h);
    PairContext ctx(h.source, h.target, bounds);
    IsoReport r{"isomorphism lemma for " + h.name, 0, 0, {}, ctx.clone().saturated()};
    const auto& A = *h.source;
    const auto& B = *h.target;
    for (Element a = 0; a < A.size(); ++a)
        for (Element b = 0; b < A.size(); ++b) {
            const Bitset& up = ctx.arrow_up(Side::Left, {a, b});
            const Bitset& image = ctx.arrow_up(Side::Right, {h(a), h(b)});
            ++r.checked;
            if (!up.is_subset_of(image))
                r.violations.push_back("Up(" + arrow_text(A, a, b) + ") not within Up(" +
                                       arrow_text(B, h(a), h(b)) + ")");
            else if (iso && up != image)
                r.violations.push_back("Up(" + arrow_text(A, a, b) + ") != Up(" +
                                       arrow_text(B, h(a), h(b)) + ")");
        }
    return r;
}

IsoReport check_first_iso_theorem(const Mapping& h, const Bounds& bounds,
                                  CompetitorPolicy policy) {
    require_homomorphism(h);
    const bool iso = is_isomorphism(h);
    PairContext ctx(h.source, h.target, bounds);
    IsoReport r{"first isomorphism theorem for " + h.name, 0, 0, {}, ctx.clone().saturated()};
    const auto& A = *h.source;
    const auto& B = *h.target;
    const Bitset& trivial = ctx.trivial_pairs();
    for (Element a = 0; a < A.size(); ++a)
        for (Element b = 0; b < A.size(); ++b) {
            const Arrow ar{a, b};
            const Arrow image{h(a), h(b)};
            bool left_empty = ctx.arrow_up(Side::Left, ar).is_subset_of(trivial);
            bool right_empty = ctx.arrow_up(Side::Right, image).is_subset_of(trivial);
            if (left_empty && !right_empty) {
                ++r.skipped;
            } else {
                ++r.checked;
                if (!arrow_lesssim_holds(ar, image, ctx, policy))
                    r.violations.push_back(arrow_text(A, a, b) + " <~ " +
                                           arrow_text(B, image.src, image.dst) + " fails");
            }
            if (iso) {
                ++r.checked;
                if (!proportion_sim_holds(a, b, image.src, image.dst, ctx, policy))
                    r.violations.push_back(A.element_name(a) + ":" + A.element_name(b) + " ~ " +
                                           B.element_name(image.src) + ":" +
                                           B.element_name(image.dst) + " fails");
            }
        }
    return r;
}

IsoReport check_second_iso_theorem(const Mapping& h, const Bounds& bounds,
                                   CompetitorPolicy policy) {
    if (!is_isomorphism(h))
        throw PreconditionError("'" + h.name + "' is not an isomorphism");
    Engine engine(bounds, policy);
    const auto& A = *h.source;
    IsoReport r{"second isomorphism theorem for " + h.name, 0, 0, {}, true};
    const std::size_t n = A.size();
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element c = 0; c < n; ++c)
                for (Element d = 0; d < n; ++d) {
                    ++r.checked;
                    bool x = engine.holds(Framework::Sim, h.source, h.source, a, b, c, d);
                    bool y = engine.holds(Framework::Sim, h.target, h.target, h(a), h(b), h(c),
                                          h(d));
                    if (x != y)
                        r.violations.push_back(A.element_name(a) + ":" + A.element_name(b) +
                                               " ~ " + A.element_name(c) + ":" +
                                               A.element_name(d) + (x ? " holds" : " fails") +
                                               " but its image " + (y ? "holds" : "fails"));
                }
    r.exact = engine.context(h.source, h.source).clone().saturated() &&
              engine.context(h.target, h.target).clone().saturated();
    return r;
}

// ---------------------------------------------------------------------------
// Framework comparison

std::vector<FrameworkDifference> compare_frameworks(const AlgebraPtr& left,
                                                    const AlgebraPtr& right, Engine& engine) {
    std::vector<FrameworkDifference> out;
    for (Element a = 0; a < left->size(); ++a)
        for (Element b = 0; b < left->size(); ++b)
            for (Element c = 0; c < right->size(); ++c)
                for (Element d = 0; d < right->size(); ++d) {
                    bool sim = engine.holds(Framework::Sim, left, right, a, b, c, d);
                    bool rw = engine.holds(Framework::Rw, left, right, a, b, c, d);
                    if (sim != rw)
                        out.push_back({{left->element_name(a), left->element_name(b),
                                        right->element_name(c), right->element_name(d)},
                                       sim,
                                       rw});
                }
    return out;
}

// ---------------------------------------------------------------------------
// Generators

namespace {

std::string element_label(std::size_t i) {
    std::string name;
    do {
        name.insert(name.begin(), static_cast<char>('a' + i % 26));
        i = i / 26;
    } while (i-- > 0);
    return name;
}

} // namespace

AlgebraPtr random_unary_algebra(std::mt19937_64& rng, const std::string& name,
                                std::size_t min_size, std::size_t max_size, std::size_t max_ops) {
    if (min_size < 1 || min_size > max_size)
        throw PreconditionError("invalid size range for a random algebra");
    static const char* const symbol_names[] = {"f", "g", "h", "k", "m", "p"};
    if (max_ops > std::size(symbol_names))
        throw PreconditionError("too many random operations requested");
    const std::size_t n = std::uniform_int_distribution<std::size_t>(min_size, max_size)(rng);
    const std::size_t ops = std::uniform_int_distribution<std::size_t>(0, max_ops)(rng);
    std::vector<std::string> universe;
    for (std::size_t i = 0; i < n; ++i)
        universe.push_back(element_label(i));
    std::vector<Symbol> symbols;
    std::vector<FiniteAlgebra::Table> tables;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t s = 0; s < ops; ++s) {
        symbols.push_back({symbol_names[s], 1});
        FiniteAlgebra::Table table(n);
        for (auto& e : table)
            e = static_cast<Element>(pick(rng));
        tables.push_back(std::move(table));
    }
    return std::make_shared<const FiniteAlgebra>(name, Language(std::move(symbols)),
                                                 std::move(universe), std::move(tables));
}

Mapping relabel(const AlgebraPtr& alg, const std::vector<Element>& order,
                const std::string& prefix) {
    const std::size_t n = alg->size();
    std::vector<Element> sorted(order);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n; ++i)
        if (sorted.size() != n || sorted[i] != i)
            throw PreconditionError("relabel needs a permutation of the universe");
    std::vector<Element> position(n);
    for (std::size_t i = 0; i < n; ++i)
        position[order[i]] = static_cast<Element>(i);

    std::vector<std::string> universe;
    for (Element old : order)
        universe.push_back(prefix + alg->element_name(old));
    std::vector<FiniteAlgebra::Table> tables;
    std::vector<Element> args;
    for (std::size_t s = 0; s < alg->language().size(); ++s) {
        const unsigned rank = alg->language()[s].rank;
        const auto& old_table = alg->table(s);
        FiniteAlgebra::Table table(old_table.size());
        args.resize(rank);
        for (std::size_t idx = 0; idx < table.size(); ++idx) {
            std::size_t rest = idx;
            for (unsigned r = 0; r < rank; ++r) {
                args[r] = order[rest % n];
                rest /= n;
            }
            table[idx] = position[alg->apply(s, args)];
        }
        tables.push_back(std::move(table));
    }
    auto copy = std::make_shared<const FiniteAlgebra>(prefix + alg->name(), alg->language(),
                                                      std::move(universe), std::move(tables));
    return {"relabel-" + alg->name() + "-" + prefix, alg, copy, position};
}

Mapping random_relabeling(const AlgebraPtr& alg, std::mt19937_64& rng) {
    std::vector<Element> order(alg->size());
    std::iota(order.begin(), order.end(), Element{0});
    std::shuffle(order.begin(), order.end(), rng);
    return relabel(alg, order, "r");
}

std::vector<Mapping> automorphisms(const AlgebraPtr& alg) {
    std::vector<Mapping> out;
    std::vector<Element> table(alg->size());
    std::iota(table.begin(), table.end(), Element{0});
    do {
        Mapping h{"auto" + std::to_string(out.size()) + "-" + alg->name(), alg, alg, table};
        if (is_homomorphism(h))
            out.push_back(std::move(h));
    } while (std::next_permutation(table.begin(), table.end()));
    return out;
}

std::vector<Mapping> homomorphisms(const AlgebraPtr& source, const AlgebraPtr& target,
                                   std::size_t limit) {
    const std::size_t n = source->size();
    const std::size_t m = target->size();
    if (assignment_count(m, n) > (std::size_t{1} << 20))
        throw ResourceLimitError("too many candidate maps from '" + source->name() + "' to '" +
                                 target->name() + "'");
    std::vector<Mapping> out;
    std::vector<Element> table(n, 0);
    for (;;) {
        Mapping h{"hom" + std::to_string(out.size()) + "-" + source->name() + "-" +
                      target->name(),
                  source, target, table};
        if (is_homomorphism(h)) {
            out.push_back(std::move(h));
            if (out.size() >= limit)
                break;
        }
        std::size_t k = n;
        while (k > 0) {
            --k;
            if (++table[k] < m)
                break;
            table[k] = 0;
            if (k == 0) {
                k = n + 1;
                break;
            }
        }
        if (k == n + 1 || n == 0)
            break;
    }
    return out;
}

} // namespace analogy
