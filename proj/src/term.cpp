#include "analogy/term.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "analogy/error.hpp"

namespace analogy {

Language::Language(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        const auto& name = symbols_[i].name;
        if (name.empty())
            throw PreconditionError("empty symbol name");
        if (is_variable_name(name))
            throw PreconditionError("symbol name '" + name + "' collides with the variable pool");
        if (!index_.emplace(name, i).second)
            throw PreconditionError("duplicate symbol '" + name + "'");
    }
}

std::optional<std::size_t> Language::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

bool is_variable_name(std::string_view name) {
    if (name.size() < 2 || name[0] != 'x')
        return false;
    return std::all_of(name.begin() + 1, name.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::string to_string(Variable v) { return "x" + std::to_string(v.index); }

struct Term::Node {
    bool is_variable = false;
    unsigned var_index = 0;
    std::size_t symbol = 0;
    std::string name;
    std::vector<Term> args;
    std::size_t depth = 0;
};

Term Term::variable(unsigned index) {
    auto node = std::make_shared<Node>();
    node->is_variable = true;
    node->var_index = index;
    return Term(std::move(node));
}

Term Term::apply(const Language& language, std::size_t symbol, std::vector<Term> args) {
    if (symbol >= language.size())
        throw PreconditionError("symbol index out of range");
    const auto& sym = language[symbol];
    if (args.size() != sym.rank)
        throw PreconditionError("symbol '" + sym.name + "' expects " + std::to_string(sym.rank) +
                                " arguments, got " + std::to_string(args.size()));
    auto node = std::make_shared<Node>();
    node->symbol = symbol;
    node->name = sym.name;
    std::size_t depth = 0;
    for (const auto& a : args)
        depth = std::max(depth, a.depth());
    node->depth = args.empty() ? 0 : depth + 1;
    node->args = std::move(args);
    return Term(std::move(node));
}

bool Term::is_variable() const noexcept { return node_->is_variable; }

Variable Term::var() const {
    if (!node_->is_variable)
        throw PreconditionError("term is not a variable");
    return Variable{node_->var_index};
}

std::size_t Term::symbol() const {
    if (node_->is_variable)
        throw PreconditionError("term is a variable");
    return node_->symbol;
}

const std::string& Term::symbol_name() const {
    if (node_->is_variable)
        throw PreconditionError("term is a variable");
    return node_->name;
}

std::span<const Term> Term::args() const { return node_->args; }

Term Term::with_args(std::vector<Term> args) const {
    if (node_->is_variable)
        throw PreconditionError("term is a variable");
    if (args.size() != node_->args.size())
        throw PreconditionError("argument count mismatch for '" + node_->name + "'");
    auto node = std::make_shared<Node>(*node_);
    std::size_t depth = 0;
    for (const auto& a : args)
        depth = std::max(depth, a.depth());
    node->depth = args.empty() ? 0 : depth + 1;
    node->args = std::move(args);
    return Term(std::move(node));
}

std::size_t Term::depth() const noexcept { return node_->depth; }

std::size_t Term::rank() const { return variables_of(*this).size(); }

namespace {

void print(const Term& t, std::string& out) {
    if (t.is_variable()) {
        out += analogy::to_string(t.var());
        return;
    }
    out += t.symbol_name();
    auto args = t.args();
    if (args.empty())
        return;
    out += '(';
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i)
            out += ',';
        print(args[i], out);
    }
    out += ')';
}

void collect_variables(const Term& t, std::vector<Variable>& out) {
    if (t.is_variable()) {
        if (std::find(out.begin(), out.end(), t.var()) == out.end())
            out.push_back(t.var());
        return;
    }
    for (const auto& a : t.args())
        collect_variables(a, out);
}

} // namespace

std::string Term::to_string() const {
    std::string out;
    print(*this, out);
    return out;
}

bool operator==(const Term& lhs, const Term& rhs) {
    if (lhs.node_ == rhs.node_)
        return true;
    if (lhs.is_variable() != rhs.is_variable())
        return false;
    if (lhs.is_variable())
        return lhs.node_->var_index == rhs.node_->var_index;
    if (lhs.node_->name != rhs.node_->name || lhs.node_->args.size() != rhs.node_->args.size())
        return false;
    return std::equal(lhs.node_->args.begin(), lhs.node_->args.end(), rhs.node_->args.begin());
}

std::strong_ordering operator<=>(const Term& lhs, const Term& rhs) {
    return lhs.to_string() <=> rhs.to_string();
}

std::vector<Variable> variables_of(const Term& t) {
    std::vector<Variable> out;
    collect_variables(t, out);
    return out;
}

std::uint64_t variable_mask(const Term& t) {
    std::uint64_t mask = 0;
    for (auto v : variables_of(t)) {
        if (v.index >= 64)
            throw PreconditionError("variable index too large for a mask: " + to_string(v));
        mask |= std::uint64_t{1} << v.index;
    }
    return mask;
}

namespace {

Term rebuild(const Term& t, const auto& map_var) {
    if (t.is_variable())
        return Term::variable(map_var(t.var()));
    auto args = t.args();
    if (args.empty())
        return t;
    std::vector<Term> mapped;
    mapped.reserve(args.size());
    for (const auto& a : args)
        mapped.push_back(rebuild(a, map_var));
    return t.with_args(std::move(mapped));
}

} // namespace

Term rename_variables(const Term& t, const std::vector<Variable>& mapping) {
    return rebuild(t, [&](Variable v) {
        return v.index < mapping.size() ? mapping[v.index] : v;
    });
}

namespace {

std::vector<Variable> first_occurrence_renaming(const std::vector<Variable>& order) {
    unsigned top = 0;
    for (auto v : order)
        top = std::max(top, v.index + 1);
    std::vector<Variable> mapping(top);
    for (unsigned i = 0; i < top; ++i)
        mapping[i] = Variable{i};
    for (unsigned i = 0; i < order.size(); ++i)
        mapping[order[i].index] = Variable{i};
    return mapping;
}

} // namespace

Term canonicalize(const Term& t) {
    return rename_variables(t, first_occurrence_renaming(variables_of(t)));
}

std::string ArrowPattern::to_string() const { return lhs.to_string() + " -> " + rhs.to_string(); }

bool is_rewrite_rule(const ArrowPattern& p) {
    auto lhs = variables_of(p.lhs);
    for (auto v : variables_of(p.rhs))
        if (std::find(lhs.begin(), lhs.end(), v) == lhs.end())
            return false;
    return true;
}

RewriteRule::RewriteRule(Term lhs, Term rhs) : lhs_(std::move(lhs)), rhs_(std::move(rhs)) {
    if (!is_rewrite_rule({lhs_, rhs_}))
        throw PreconditionError("not a rewrite rule: " + lhs_.to_string() + " ->> " +
                                rhs_.to_string() + " (right side has a variable not on the left)");
}

std::string RewriteRule::to_string() const { return lhs_.to_string() + " ->> " + rhs_.to_string(); }

ArrowPattern canonicalize(const ArrowPattern& p) {
    auto order = variables_of(p.lhs);
    for (auto v : variables_of(p.rhs))
        if (std::find(order.begin(), order.end(), v) == order.end())
            order.push_back(v);
    auto mapping = first_occurrence_renaming(order);
    return {rename_variables(p.lhs, mapping), rename_variables(p.rhs, mapping)};
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class TermParser {
public:
    TermParser(std::string_view input, const Language& language)
        : input_(input), language_(language) {}

    Term parse_all() {
        Term t = parse();
        skip_space();
        if (pos_ != input_.size())
            fail("unexpected trailing input");
        return t;
    }

    Term parse() {
        skip_space();
        std::size_t start = pos_;
        std::string_view name = identifier();
        if (name.empty())
            fail("expected a variable or symbol");
        if (is_variable_name(name)) {
            unsigned index = 0;
            auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), index);
            if (ec != std::errc() || ptr != name.data() + name.size())
                fail("variable index out of range", start);
            return Term::variable(index);
        }
        auto symbol = language_.find(name);
        if (!symbol)
            fail("unknown symbol '" + std::string(name) + "'", start);
        std::vector<Term> args;
        skip_space();
        if (peek() == '(') {
            ++pos_;
            args.push_back(parse());
            skip_space();
            while (peek() == ',') {
                ++pos_;
                args.push_back(parse());
                skip_space();
            }
            if (peek() != ')')
                fail("expected ',' or ')'");
            ++pos_;
        }
        const auto& sym = language_[*symbol];
        if (args.size() != sym.rank)
            fail("symbol '" + sym.name + "' expects " + std::to_string(sym.rank) +
                     " arguments, got " + std::to_string(args.size()),
                 start);
        return Term::apply(language_, *symbol, std::move(args));
    }

    std::size_t pos() const { return pos_; }
    void set_pos(std::size_t p) { pos_ = p; }
    void skip_space() {
        while (pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_])))
            ++pos_;
    }
    char peek() const { return pos_ < input_.size() ? input_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& message) const { fail(message, pos_); }
    [[noreturn]] void fail(const std::string& message, std::size_t at) const {
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i < at && i < input_.size(); ++i) {
            if (input_[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError(message, line, column);
    }

private:
    std::string_view identifier() {
        std::size_t start = pos_;
        while (pos_ < input_.size()) {
            unsigned char c = static_cast<unsigned char>(input_[pos_]);
            if (std::isalnum(c) || c == '_' || c == '\'')
                ++pos_;
            else
                break;
        }
        return input_.substr(start, pos_ - start);
    }

    std::string_view input_;
    const Language& language_;
    std::size_t pos_ = 0;
};

} // namespace

Term parse_term(std::string_view input, const Language& language) {
    return TermParser(input, language).parse_all();
}

ArrowPattern parse_arrow_pattern(std::string_view input, const Language& language) {
    TermParser parser(input, language);
    Term lhs = parser.parse();
    parser.skip_space();
    if (input.substr(parser.pos(), 2) != "->")
        parser.fail("expected '->'");
    parser.set_pos(parser.pos() + 2);
    if (parser.peek() == '>')
        parser.set_pos(parser.pos() + 1);
    Term rhs = parser.parse_all();
    return {std::move(lhs), std::move(rhs)};
}

} // namespace analogy
