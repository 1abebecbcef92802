#include "analogy/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "analogy/error.hpp"

namespace analogy {

namespace {

std::size_t power(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && r > (std::size_t{1} << 26) / base)
            throw ResourceLimitError("assignment space too large");
        r *= base;
    }
    return r;
}

} // namespace

std::size_t assignment_count(std::size_t size, std::size_t vars) { return power(size, vars); }

FiniteAlgebra::FiniteAlgebra(std::string name, Language language,
                             std::vector<std::string> universe, std::vector<Table> tables)
    : name_(std::move(name)), language_(std::move(language)), universe_(std::move(universe)),
      tables_(std::move(tables)) {
    if (universe_.empty())
        throw PreconditionError("algebra '" + name_ + "' has an empty universe");
    if (universe_.size() > 0xFFFF)
        throw PreconditionError("algebra '" + name_ + "' is too large");
    for (std::size_t i = 0; i < universe_.size(); ++i)
        if (!index_.emplace(universe_[i], static_cast<Element>(i)).second)
            throw PreconditionError("duplicate element '" + universe_[i] + "' in '" + name_ + "'");
    if (tables_.size() != language_.size())
        throw PreconditionError("algebra '" + name_ + "' needs one table per symbol");
    for (std::size_t s = 0; s < tables_.size(); ++s) {
        if (tables_[s].size() != power(universe_.size(), language_[s].rank))
            throw PreconditionError("table of '" + language_[s].name + "' has the wrong size");
        for (Element e : tables_[s])
            if (e >= universe_.size())
                throw PreconditionError("table of '" + language_[s].name +
                                        "' leaves the universe");
    }
}

std::optional<Element> FiniteAlgebra::find(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

Element FiniteAlgebra::element(std::string_view name) const {
    auto e = find(name);
    if (!e)
        throw PreconditionError("unknown element '" + std::string(name) + "' in algebra '" +
                                name_ + "'");
    return *e;
}

Element FiniteAlgebra::apply(std::size_t symbol, std::span<const Element> args) const {
    std::size_t index = 0, radix = 1;
    for (Element a : args) {
        index += a * radix;
        radix *= universe_.size();
    }
    return tables_.at(symbol).at(index);
}

bool FiniteAlgebra::same_structure(const FiniteAlgebra& other) const {
    return language_ == other.language_ && universe_ == other.universe_ &&
           tables_ == other.tables_;
}

std::optional<Element> Assignment::lookup(Variable v) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == v)
            return values.at(i);
    return std::nullopt;
}

namespace {

template <typename Lookup>
Element eval(const Term& t, const FiniteAlgebra& alg, const Lookup& lookup) {
    if (t.is_variable())
        return lookup(t.var());
    auto args = t.args();
    Element buffer[8];
    std::vector<Element> heap;
    Element* values = buffer;
    if (args.size() > 8) {
        heap.resize(args.size());
        values = heap.data();
    }
    for (std::size_t i = 0; i < args.size(); ++i)
        values[i] = eval(args[i], alg, lookup);
    return alg.apply(t.symbol(), std::span<const Element>(values, args.size()));
}

void check_language(const Term& t, const Language& language) {
    if (t.is_variable())
        return;
    if (t.symbol() >= language.size() || language[t.symbol()].name != t.symbol_name())
        throw PreconditionError("term " + t.to_string() + " is not over the algebra's language");
    for (const auto& a : t.args())
        check_language(a, language);
}

} // namespace

Element evaluate(const Term& t, const FiniteAlgebra& alg, const Assignment& o) {
    check_language(t, alg.language());
    return eval(t, alg, [&](Variable v) {
        auto e = o.lookup(v);
        if (!e)
            throw PreconditionError("unassigned variable " + to_string(v));
        if (*e >= alg.size())
            throw PreconditionError("assignment value outside the universe");
        return *e;
    });
}

std::vector<Element> denotation(const Term& t, const FiniteAlgebra& alg, unsigned vars) {
    check_language(t, alg.language());
    for (auto v : variables_of(t))
        if (v.index >= vars)
            throw PreconditionError("variable " + to_string(v) + " outside x0..x" +
                                    std::to_string(vars - 1));
    const std::size_t n = alg.size();
    std::vector<Element> table(assignment_count(n, vars));
    std::vector<Element> digits(vars, 0);
    for (std::size_t idx = 0; idx < table.size(); ++idx) {
        std::size_t rest = idx;
        for (unsigned i = 0; i < vars; ++i) {
            digits[i] = static_cast<Element>(rest % n);
            rest /= n;
        }
        table[idx] = eval(t, alg, [&](Variable v) { return digits[v.index]; });
    }
    return table;
}

bool is_homomorphism(const Mapping& h) {
    const auto& a = *h.source;
    const auto& b = *h.target;
    if (!(a.language() == b.language()))
        throw PreconditionError("mapping '" + h.name + "' connects algebras of different languages");
    if (h.table.size() != a.size())
        throw PreconditionError("mapping '" + h.name + "' is not total on its source");
    for (std::size_t s = 0; s < a.language().size(); ++s) {
        const unsigned rank = a.language()[s].rank;
        const auto& table = a.table(s);
        std::vector<Element> args(rank), mapped(rank);
        for (std::size_t idx = 0; idx < table.size(); ++idx) {
            std::size_t rest = idx;
            for (unsigned i = 0; i < rank; ++i) {
                args[i] = static_cast<Element>(rest % a.size());
                rest /= a.size();
                mapped[i] = h.table[args[i]];
            }
            if (h.table[table[idx]] != b.apply(s, mapped))
                return false;
        }
    }
    return true;
}

bool is_bijective(const Mapping& h) {
    if (h.table.size() != h.target->size())
        return false;
    std::vector<bool> hit(h.target->size(), false);
    for (Element e : h.table) {
        if (hit.at(e))
            return false;
        hit[e] = true;
    }
    return true;
}

bool is_isomorphism(const Mapping& h) { return is_homomorphism(h) && is_bijective(h); }

std::vector<Assignment> solution_set(const Term& s, Element a, const FiniteAlgebra& alg,
                                     const std::vector<Variable>& vars) {
    for (auto v : variables_of(s))
        if (std::find(vars.begin(), vars.end(), v) == vars.end())
            throw PreconditionError("solution variables do not cover " + to_string(v));
    check_language(s, alg.language());
    const std::size_t n = alg.size();
    const std::size_t total = assignment_count(n, vars.size());
    std::vector<Assignment> out;
    Assignment o{vars, std::vector<Element>(vars.size(), 0)};
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rest = idx;
        for (auto& value : o.values) {
            value = static_cast<Element>(rest % n);
            rest /= n;
        }
        if (eval(s, alg, [&](Variable v) { return *o.lookup(v); }) == a)
            out.push_back(o);
    }
    return out;
}

namespace {

// Number of preimages of each element under s over its own variables.
std::vector<std::size_t> preimage_counts(const Term& s, const FiniteAlgebra& alg) {
    auto vars = variables_of(s);
    std::vector<std::size_t> counts(alg.size(), 0);
    const std::size_t n = alg.size();
    const std::size_t total = assignment_count(n, vars.size());
    Assignment o{vars, std::vector<Element>(vars.size(), 0)};
    check_language(s, alg.language());
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rest = idx;
        for (auto& value : o.values) {
            value = static_cast<Element>(rest % n);
            rest /= n;
        }
        ++counts[eval(s, alg, [&](Variable v) { return *o.lookup(v); })];
    }
    return counts;
}

} // namespace

std::vector<Element> unique_solution_elements(const Term& s, const FiniteAlgebra& alg) {
    auto counts = preimage_counts(s, alg);
    std::vector<Element> out;
    for (std::size_t e = 0; e < counts.size(); ++e)
        if (counts[e] == 1)
            out.push_back(static_cast<Element>(e));
    return out;
}

bool is_injective_term(const Term& s, const FiniteAlgebra& alg) {
    auto counts = preimage_counts(s, alg);
    return std::all_of(counts.begin(), counts.end(), [](std::size_t c) { return c <= 1; });
}

// ---------------------------------------------------------------------------
// Spec format

namespace {

struct Token {
    enum Kind { Ident, Punct, Arrow, End } kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

class SpecLexer {
public:
    explicit SpecLexer(std::string_view input) : input_(input) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        for (;;) {
            while (pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_])))
                step();
            if (pos_ < input_.size() && input_[pos_] == '#') {
                while (pos_ < input_.size() && input_[pos_] != '\n')
                    step();
                continue;
            }
            break;
        }
        current_.line = line_;
        current_.column = column_;
        if (pos_ >= input_.size()) {
            current_.kind = Token::End;
            current_.text.clear();
            return;
        }
        char c = input_[pos_];
        if (c == '-' && pos_ + 1 < input_.size() && input_[pos_ + 1] == '>') {
            current_.kind = Token::Arrow;
            current_.text = "->";
            step();
            step();
            return;
        }
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'') {
            std::size_t start = pos_;
            while (pos_ < input_.size() &&
                   (std::isalnum(static_cast<unsigned char>(input_[pos_])) ||
                    input_[pos_] == '_' || input_[pos_] == '\''))
                step();
            current_.kind = Token::Ident;
            current_.text = std::string(input_.substr(start, pos_ - start));
            return;
        }
        current_.kind = Token::Punct;
        current_.text = std::string(1, c);
        step();
    }

    void step() {
        if (input_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    std::string_view input_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
    Token current_{Token::End, {}, 1, 1};
};

struct OpDecl {
    std::string name;
    unsigned rank = 0;
    bool default_identity = false;
    std::vector<std::pair<std::vector<std::string>, std::string>> rows;
    Token at;
};

class SpecParser {
public:
    SpecParser(std::string_view input, const SpecFile& known) : lex_(input), out_(known) {
        out_.algebra_order.clear();
        out_.mapping_order.clear();
    }

    SpecFile parse() {
        while (lex_.peek().kind != Token::End) {
            const Token& t = lex_.peek();
            if (t.kind == Token::Ident && t.text == "algebra")
                parse_algebra();
            else if (t.kind == Token::Ident && t.text == "mapping")
                parse_mapping();
            else
                fail("expected 'algebra' or 'mapping'", t);
        }
        return std::move(out_);
    }

private:
    [[noreturn]] static void fail(const std::string& message, const Token& at) {
        throw ParseError(message, at.line, at.column);
    }

    Token expect_ident(const char* what) {
        if (lex_.peek().kind != Token::Ident)
            fail(std::string("expected ") + what, lex_.peek());
        return lex_.take();
    }

    void expect_punct(char c) {
        const Token& t = lex_.peek();
        if (t.kind != Token::Punct || t.text[0] != c)
            fail(std::string("expected '") + c + "'", t);
        lex_.take();
    }

    void expect_arrow() {
        if (lex_.peek().kind != Token::Arrow)
            fail("expected '->'", lex_.peek());
        lex_.take();
    }

    bool at_punct(char c) const {
        return lex_.peek().kind == Token::Punct && lex_.peek().text[0] == c;
    }

    void parse_algebra() {
        lex_.take();
        Token name = expect_ident("algebra name");
        if (out_.algebras.count(name.text))
            fail("duplicate algebra '" + name.text + "'", name);
        expect_punct('{');

        std::vector<std::string> universe;
        std::set<std::string> seen;
        bool have_universe = false;
        std::vector<OpDecl> ops;
        while (!at_punct('}')) {
            Token kw = expect_ident("'universe' or 'op'");
            if (kw.text == "universe") {
                if (have_universe)
                    fail("universe declared twice", kw);
                have_universe = true;
                expect_punct(':');
                for (;;) {
                    Token e = expect_ident("element name");
                    if (!seen.insert(e.text).second)
                        fail("duplicate element '" + e.text + "'", e);
                    universe.push_back(e.text);
                    if (at_punct(',')) {
                        lex_.take();
                        continue;
                    }
                    break;
                }
                expect_punct(';');
            } else if (kw.text == "op") {
                if (!have_universe)
                    fail("universe must be declared before operations", kw);
                ops.push_back(parse_op(kw));
            } else {
                fail("expected 'universe' or 'op'", kw);
            }
        }
        expect_punct('}');
        if (!have_universe)
            fail("algebra '" + name.text + "' has no universe", name);

        std::sort(ops.begin(), ops.end(),
                  [](const OpDecl& a, const OpDecl& b) { return a.name < b.name; });
        for (std::size_t i = 1; i < ops.size(); ++i)
            if (ops[i].name == ops[i - 1].name)
                fail("duplicate operation '" + ops[i].name + "'", ops[i].at);

        std::vector<Symbol> symbols;
        std::vector<FiniteAlgebra::Table> tables;
        std::map<std::string, Element> index;
        for (std::size_t i = 0; i < universe.size(); ++i)
            index[universe[i]] = static_cast<Element>(i);
        for (const auto& op : ops) {
            if (is_variable_name(op.name))
                fail("operation name '" + op.name + "' collides with the variable pool", op.at);
            symbols.push_back({op.name, op.rank});
            tables.push_back(build_table(op, universe, index));
        }
        auto alg = std::make_shared<const FiniteAlgebra>(name.text, Language(std::move(symbols)),
                                                         std::move(universe), std::move(tables));
        out_.algebras[name.text] = alg;
        out_.algebra_order.push_back(name.text);
    }

    OpDecl parse_op(const Token& kw) {
        OpDecl op;
        op.at = kw;
        Token sym = expect_ident("operation name");
        op.name = sym.text;
        expect_punct('/');
        Token rank = expect_ident("rank");
        try {
            std::size_t used = 0;
            unsigned long r = std::stoul(rank.text, &used);
            if (used != rank.text.size() || r > 8)
                throw std::invalid_argument("rank");
            op.rank = static_cast<unsigned>(r);
        } catch (const std::exception&) {
            fail("rank must be an integer between 0 and 8", rank);
        }
        if (lex_.peek().kind == Token::Ident && lex_.peek().text == "default") {
            Token d = lex_.take();
            Token what = expect_ident("'identity'");
            if (what.text != "identity")
                fail("only 'default identity' is supported", what);
            if (op.rank != 1)
                fail("'default identity' is only allowed for unary operations", d);
            op.default_identity = true;
        }
        expect_punct(':');
        if (at_punct(';')) {
            lex_.take();
            return op;
        }
        for (;;) {
            std::vector<std::string> args;
            if (at_punct('(')) {
                lex_.take();
                if (!at_punct(')')) {
                    for (;;) {
                        args.push_back(expect_ident("element name").text);
                        if (at_punct(',')) {
                            lex_.take();
                            continue;
                        }
                        break;
                    }
                }
                expect_punct(')');
            } else {
                args.push_back(expect_ident("element name").text);
            }
            Token row_at = lex_.peek();
            if (args.size() != op.rank)
                fail("row of '" + op.name + "' has " + std::to_string(args.size()) +
                         " arguments, expected " + std::to_string(op.rank),
                     row_at);
            expect_arrow();
            Token value = expect_ident("element name");
            op.rows.emplace_back(std::move(args), value.text);
            if (at_punct(',')) {
                lex_.take();
                continue;
            }
            break;
        }
        expect_punct(';');
        return op;
    }

    FiniteAlgebra::Table build_table(const OpDecl& op, const std::vector<std::string>& universe,
                                     const std::map<std::string, Element>& index) {
        const std::size_t n = universe.size();
        const std::size_t size = power(n, op.rank);
        FiniteAlgebra::Table table(size);
        std::vector<bool> defined(size, false);
        auto lookup = [&](const std::string& name) {
            auto it = index.find(name);
            if (it == index.end())
                fail("'" + name + "' is not in the universe (operation '" + op.name + "')", op.at);
            return it->second;
        };
        for (const auto& [args, value] : op.rows) {
            std::size_t idx = 0, radix = 1;
            for (const auto& a : args) {
                idx += lookup(a) * radix;
                radix *= n;
            }
            auto it = index.find(value);
            if (it == index.end())
                fail("output '" + value + "' of '" + op.name + "' is outside the universe", op.at);
            if (defined[idx])
                fail("duplicate row in table of '" + op.name + "'", op.at);
            defined[idx] = true;
            table[idx] = it->second;
        }
        for (std::size_t idx = 0; idx < size; ++idx) {
            if (defined[idx])
                continue;
            if (op.default_identity) {
                table[idx] = static_cast<Element>(idx);
                continue;
            }
            std::string row;
            std::size_t rest = idx;
            for (unsigned i = 0; i < op.rank; ++i) {
                row += (i ? "," : "") + universe[rest % n];
                rest /= n;
            }
            fail("missing table row (" + row + ") of '" + op.name + "'", op.at);
        }
        return table;
    }

    void parse_mapping() {
        lex_.take();
        Token name = expect_ident("mapping name");
        if (out_.mappings.count(name.text))
            fail("duplicate mapping '" + name.text + "'", name);
        expect_punct(':');
        Token src = expect_ident("source algebra");
        expect_arrow();
        Token dst = expect_ident("target algebra");
        auto find_alg = [&](const Token& t) {
            auto it = out_.algebras.find(t.text);
            if (it == out_.algebras.end())
                fail("unknown algebra '" + t.text + "'", t);
            return it->second;
        };
        Mapping h{name.text, find_alg(src), find_alg(dst), {}};
        std::vector<std::optional<Element>> table(h.source->size());
        expect_punct('{');
        if (!at_punct('}')) {
            for (;;) {
                Token from = expect_ident("element name");
                expect_arrow();
                Token to = expect_ident("element name");
                auto a = h.source->find(from.text);
                if (!a)
                    fail("'" + from.text + "' is not in the universe of '" + src.text + "'", from);
                auto b = h.target->find(to.text);
                if (!b)
                    fail("'" + to.text + "' is not in the universe of '" + dst.text + "'", to);
                if (table[*a])
                    fail("duplicate entry for '" + from.text + "'", from);
                table[*a] = *b;
                if (at_punct(',')) {
                    lex_.take();
                    continue;
                }
                break;
            }
            expect_punct(';');
        }
        expect_punct('}');
        for (std::size_t e = 0; e < table.size(); ++e) {
            if (!table[e])
                fail("mapping '" + name.text + "' has no entry for '" +
                         h.source->element_name(static_cast<Element>(e)) + "'",
                     name);
            h.table.push_back(*table[e]);
        }
        out_.mappings[name.text] = std::move(h);
        out_.mapping_order.push_back(name.text);
    }

    SpecLexer lex_;
    SpecFile out_;
};

} // namespace

SpecFile load_spec(std::string_view input, const SpecFile& known) {
    return SpecParser(input, known).parse();
}

SpecFile load_spec_file(const std::string& path, const SpecFile& known) {
    std::ifstream in(path);
    if (!in)
        throw PreconditionError("cannot read '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return load_spec(text.str(), known);
}

AlgebraPtr load_algebra(std::string_view input) {
    auto spec = load_spec(input);
    if (spec.algebra_order.size() != 1)
        throw PreconditionError("expected exactly one algebra, found " +
                                std::to_string(spec.algebra_order.size()));
    return spec.algebras.at(spec.algebra_order.front());
}

std::string to_spec(const FiniteAlgebra& alg) {
    std::ostringstream out;
    out << "algebra " << alg.name() << " {\n  universe: ";
    for (std::size_t i = 0; i < alg.size(); ++i)
        out << (i ? ", " : "") << alg.universe()[i];
    out << ";\n";
    const std::size_t n = alg.size();
    for (std::size_t s = 0; s < alg.language().size(); ++s) {
        const auto& sym = alg.language()[s];
        const auto& table = alg.table(s);
        out << "  op " << sym.name << "/" << sym.rank;
        std::vector<std::string> rows;
        for (std::size_t idx = 0; idx < table.size(); ++idx) {
            if (sym.rank == 1 && table[idx] == idx)
                continue;
            std::string row = "(";
            std::size_t rest = idx;
            for (unsigned i = 0; i < sym.rank; ++i) {
                row += (i ? "," : "") + alg.universe()[rest % n];
                rest /= n;
            }
            rows.push_back(row + ") -> " + alg.universe()[table[idx]]);
        }
        if (sym.rank == 1)
            out << " default identity";
        out << ":";
        for (std::size_t i = 0; i < rows.size(); ++i)
            out << (i ? ", " : " ") << rows[i];
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace analogy
