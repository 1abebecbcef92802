#include "analogy/clone.hpp"

#include <algorithm>

#include "analogy/error.hpp"

namespace analogy {

void Bounds::validate() const {
    if (max_vars < 1 || max_vars > kMaxVars)
        throw PreconditionError("max_vars must be between 1 and " + std::to_string(kMaxVars));
    if (max_depth && *max_depth < 1)
        throw PreconditionError("max_depth must be positive");
    if (class_cap < 1)
        throw PreconditionError("class_cap must be positive");
}

std::string Bounds::to_string() const {
    return "max_vars=" + std::to_string(max_vars) +
           " max_depth=" + (max_depth ? std::to_string(*max_depth) : std::string("unbounded")) +
           " class_cap=" + std::to_string(class_cap);
}

const Term& DenotationClass::witness_for(std::uint64_t mask) const {
    for (const auto& [m, t] : var_set_witnesses)
        if (m == mask)
            return t;
    throw PreconditionError("class has no member with the requested variable set");
}

std::span<const Element> CloneResult::segment(std::size_t cls, std::size_t k) const {
    const auto& table = classes_.at(cls).table;
    return std::span<const Element>(table).subspan(offsets_.at(k), segment_size(k));
}

namespace {

std::string key_of(std::span<const Element> table) {
    return std::string(reinterpret_cast<const char*>(table.data()), table.size_bytes());
}

} // namespace

std::optional<std::size_t> CloneResult::find(std::span<const Element> table) const {
    auto it = index_.find(key_of(table));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::optional<std::size_t> CloneResult::class_of(const Term& t) const {
    std::vector<Element> table;
    table.reserve(offsets_.back());
    for (const auto& alg : algebras_) {
        auto part = denotation(t, *alg, bounds_.max_vars);
        table.insert(table.end(), part.begin(), part.end());
    }
    return find(table);
}

namespace {

// (class, variable set) pairs discovered so far; the unit of enumeration.
struct Item {
    std::size_t cls;
    std::uint64_t mask;
    unsigned depth;
};

} // namespace

namespace detail {

class CloneBuilder {
public:
    CloneBuilder(std::vector<AlgebraPtr> algebras, const Bounds& bounds) {
        bounds.validate();
        if (algebras.empty())
            throw PreconditionError("generate_clone needs at least one algebra");
        for (const auto& a : algebras)
            if (!(a->language() == algebras.front()->language()))
                throw PreconditionError("algebras '" + algebras.front()->name() + "' and '" +
                                        a->name() + "' have different languages");
        result_.algebras_ = std::move(algebras);
        result_.bounds_ = bounds;
        result_.offsets_.push_back(0);
        for (const auto& a : result_.algebras_)
            result_.offsets_.push_back(result_.offsets_.back() +
                                       assignment_count(a->size(), bounds.max_vars));
    }

    CloneResult run() {
        const auto& language = result_.algebras_.front()->language();
        seed_level_zero(language);

        bool has_operations = std::any_of(language.symbols().begin(), language.symbols().end(),
                                          [](const Symbol& s) { return s.rank > 0; });
        if (!has_operations) {
            result_.saturated_ = true;
            result_.depth_ = 0;
            return std::move(result_);
        }

        unsigned level = 0;
        std::size_t level_begin = 0;
        for (;;) {
            if (result_.bounds_.max_depth && level + 1 > *result_.bounds_.max_depth) {
                result_.depth_ = level;
                result_.saturated_ = false;
                break;
            }
            std::size_t level_end = items_.size();
            expand(language, level + 1, level_begin, level_end);
            ++level;
            level_begin = level_end;
            if (items_.size() == level_end) {
                result_.depth_ = level;
                result_.saturated_ = true;
                break;
            }
        }
        return std::move(result_);
    }

private:
    std::size_t total() const { return result_.offsets_.back(); }

    void seed_level_zero(const Language& language) {
        const unsigned v = result_.bounds_.max_vars;
        for (unsigned i = 0; i < v; ++i) {
            std::vector<Element> table(total());
            for (std::size_t k = 0; k < result_.algebras_.size(); ++k) {
                const std::size_t n = result_.algebras_[k]->size();
                std::size_t radix = 1;
                for (unsigned j = 0; j < i; ++j)
                    radix *= n;
                for (std::size_t idx = 0; idx < result_.segment_size(k); ++idx)
                    table[result_.offsets_[k] + idx] = static_cast<Element>((idx / radix) % n);
            }
            offer(std::move(table), std::uint64_t{1} << i, Term::variable(i), 0);
        }
        for (std::size_t s = 0; s < language.size(); ++s) {
            if (language[s].rank != 0)
                continue;
            std::vector<Element> table(total());
            for (std::size_t k = 0; k < result_.algebras_.size(); ++k) {
                Element value = result_.algebras_[k]->table(s).front();
                std::fill_n(table.begin() + result_.offsets_[k], result_.segment_size(k), value);
            }
            offer(std::move(table), 0, Term::apply(language, s, {}), 0);
        }
    }

    // Registers a candidate term. New classes and new (class, variable set)
    // items become part of the current level; a candidate that ties with an
    // item of the current level replaces its witness if it prints smaller.
    void offer(std::vector<Element> table, std::uint64_t mask, Term term, unsigned depth) {
        auto key = key_of(table);
        auto it = result_.index_.find(key);
        std::size_t cls;
        if (it == result_.index_.end()) {
            if (result_.classes_.size() >= result_.bounds_.class_cap)
                throw ResourceLimitError("class cap of " +
                                         std::to_string(result_.bounds_.class_cap) +
                                         " exceeded at depth " + std::to_string(depth));
            cls = result_.classes_.size();
            result_.index_.emplace(std::move(key), cls);
            DenotationClass c{std::move(table), term, depth, 0, {}};
            result_.classes_.push_back(std::move(c));
        } else {
            cls = it->second;
            auto& c = result_.classes_[cls];
            if (c.depth == depth && term.to_string() < c.witness.to_string())
                c.witness = term;
        }
        auto& c = result_.classes_[cls];
        if (!c.has_var_set(mask)) {
            c.var_sets |= std::uint64_t{1} << mask;
            auto pos = std::lower_bound(
                c.var_set_witnesses.begin(), c.var_set_witnesses.end(), mask,
                [](const auto& entry, std::uint64_t m) { return entry.first < m; });
            c.var_set_witnesses.insert(pos, {mask, term});
            items_.push_back({cls, mask, depth});
            item_depths_.emplace(item_key(cls, mask), depth);
            return;
        }
        // Same item seen again: only a same-level tie can change its witness.
        for (auto& [m, t] : c.var_set_witnesses) {
            if (m != mask)
                continue;
            if (item_depth(cls, mask) == depth && term.to_string() < t.to_string())
                t = term;
        }
    }

    static std::uint64_t item_key(std::size_t cls, std::uint64_t mask) {
        return (static_cast<std::uint64_t>(cls) << 6) | mask;
    }

    unsigned item_depth(std::size_t cls, std::uint64_t mask) const {
        return item_depths_.at(item_key(cls, mask));
    }

    void expand(const Language& language, unsigned depth, std::size_t level_begin,
                std::size_t level_end) {
        std::vector<std::size_t> choice;
        std::vector<Element> table(total());
        std::vector<Element> args;
        for (std::size_t s = 0; s < language.size(); ++s) {
            const unsigned rank = language[s].rank;
            if (rank == 0)
                continue;
            choice.assign(rank, 0);
            args.resize(rank);
            // All rank-tuples over items [0, level_end) using at least one item
            // from the newest level [level_begin, level_end).
            for (;;) {
                bool fresh = std::any_of(choice.begin(), choice.end(),
                                         [&](std::size_t i) { return i >= level_begin; });
                if (fresh) {
                    std::uint64_t mask = 0;
                    std::vector<Term> children;
                    children.reserve(rank);
                    for (std::size_t i : choice) {
                        const auto& item = items_[i];
                        mask |= item.mask;
                        children.push_back(result_.classes_[item.cls].witness_for(item.mask));
                    }
                    for (std::size_t k = 0; k < result_.algebras_.size(); ++k) {
                        const auto& alg = *result_.algebras_[k];
                        const std::size_t off = result_.offsets_[k];
                        const std::size_t len = result_.segment_size(k);
                        if (rank == 1) {
                            const auto& op = alg.table(s);
                            const auto& child = result_.classes_[items_[choice[0]].cls].table;
                            for (std::size_t idx = 0; idx < len; ++idx)
                                table[off + idx] = op[child[off + idx]];
                        } else {
                            for (std::size_t idx = 0; idx < len; ++idx) {
                                for (unsigned r = 0; r < rank; ++r)
                                    args[r] = result_.classes_[items_[choice[r]].cls].table[off + idx];
                                table[off + idx] = alg.apply(s, args);
                            }
                        }
                    }
                    offer(table, mask, Term::apply(language, s, std::move(children)), depth);
                }
                // Next tuple in lexicographic order.
                std::size_t pos = rank;
                while (pos > 0) {
                    --pos;
                    if (++choice[pos] < level_end)
                        break;
                    choice[pos] = 0;
                    if (pos == 0) {
                        pos = rank + 1;
                        break;
                    }
                }
                if (pos == rank + 1)
                    break;
            }
        }
    }

    CloneResult result_;
    std::vector<Item> items_;
    std::unordered_map<std::uint64_t, unsigned> item_depths_;
};

} // namespace detail

CloneResult generate_clone(std::vector<AlgebraPtr> algebras, const Bounds& bounds) {
    return detail::CloneBuilder(std::move(algebras), bounds).run();
}

} // namespace analogy
