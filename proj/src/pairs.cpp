#include "analogy/pairs.hpp"

#include "analogy/error.hpp"

namespace analogy {

std::string to_string(const Arrow& ar, const FiniteAlgebra& alg) {
    return alg.element_name(ar.src) + "->" + alg.element_name(ar.dst);
}

std::string BoundInfo::to_string() const {
    return bounds.to_string() + " classes=" + std::to_string(classes) +
           (saturated ? " saturated at depth " : " approximate at depth ") + std::to_string(depth);
}

PairContext::PairContext(AlgebraPtr left, AlgebraPtr right, const Bounds& bounds) {
    if (!left || !right)
        throw PreconditionError("pair context needs two algebras");
    if (!(left->language() == right->language()))
        throw PreconditionError("algebras '" + left->name() + "' and '" + right->name() +
                                "' have different languages");
    const bool same = left.get() == right.get() || left->same_structure(*right);
    std::vector<AlgebraPtr> members{left};
    if (!same)
        members.push_back(right);

    auto data = std::make_shared<Data>(Data{generate_clone(members, bounds), {}, {}, {}, {}});
    const auto& clone = data->clone;
    const std::size_t classes = clone.size();
    if (classes > 0 && classes > kMaxPairs / classes)
        throw ResourceLimitError(std::to_string(classes) + " classes give more than " +
                                 std::to_string(kMaxPairs) + " pairs");
    const std::size_t pairs = classes * classes;

    data->sides[0].algebra = left;
    data->sides[0].segment = 0;
    data->sides[1].algebra = right;
    data->sides[1].segment = same ? 0 : 1;

    data->trivial_pairs.resize(pairs, true);
    data->trivial_classes.resize(classes, true);
    data->rule_pairs.resize(pairs);

    const std::size_t segments = same ? 1 : 2;
    for (std::size_t k = 0; k < segments; ++k) {
        auto& side = data->sides[k];
        const std::size_t n = side.algebra->size();
        side.arrow_up.assign(n * n, Bitset(pairs));
        side.element_up.assign(n, Bitset(classes));
        std::vector<char> seen(n * n);
        for (std::size_t i = 0; i < classes; ++i) {
            auto si = clone.segment(i, k);
            std::vector<char> image(n);
            for (Element e : si)
                image[e] = 1;
            for (std::size_t e = 0; e < n; ++e) {
                if (image[e])
                    side.element_up[e].set(i);
                else
                    data->trivial_classes.reset(i);
            }
            for (std::size_t j = 0; j < classes; ++j) {
                auto sj = clone.segment(j, k);
                const std::size_t p = i * classes + j;
                std::fill(seen.begin(), seen.end(), 0);
                std::size_t distinct = 0;
                for (std::size_t idx = 0; idx < si.size(); ++idx) {
                    const std::size_t ar = si[idx] * n + sj[idx];
                    if (!seen[ar]) {
                        seen[ar] = 1;
                        ++distinct;
                        side.arrow_up[ar].set(p);
                    }
                }
                if (distinct != n * n)
                    data->trivial_pairs.reset(p);
            }
        }
    }
    if (same) {
        data->sides[1].arrow_up = data->sides[0].arrow_up;
        data->sides[1].element_up = data->sides[0].element_up;
    }

    for (std::size_t i = 0; i < classes; ++i) {
        const auto& ci = clone[i];
        for (std::size_t j = 0; j < classes; ++j) {
            const auto& cj = clone[j];
            bool rule = false;
            for (const auto& [ms, ts] : ci.var_set_witnesses) {
                for (const auto& [mt, tt] : cj.var_set_witnesses)
                    if ((mt & ~ms) == 0) {
                        rule = true;
                        break;
                    }
                if (rule)
                    break;
            }
            if (rule)
                data->rule_pairs.set(i * classes + j);
        }
    }
    data_ = std::move(data);
}

BoundInfo PairContext::bound_info() const {
    return {clone().bounds(), clone().saturated(), clone().depth(), clone().size()};
}

const Bitset& PairContext::arrow_up(Side side, const Arrow& ar) const {
    const auto& s = side_data(side);
    const std::size_t n = s.algebra->size();
    if (ar.src >= n || ar.dst >= n)
        throw PreconditionError("arrow outside the universe of '" + s.algebra->name() + "'");
    return s.arrow_up[ar.src * n + ar.dst];
}

const Bitset& PairContext::element_up(Side side, Element e) const {
    const auto& s = side_data(side);
    if (e >= s.algebra->size())
        throw PreconditionError("element outside the universe of '" + s.algebra->name() + "'");
    return s.element_up[e];
}

ArrowPattern PairContext::pair_witness(std::size_t p) const {
    auto [i, j] = classes_of_pair(p);
    return {clone()[i].witness, clone()[j].witness};
}

std::optional<RewriteRule> PairContext::rule_witness(std::size_t p) const {
    if (!rule_pairs().test(p))
        return std::nullopt;
    auto [i, j] = classes_of_pair(p);
    for (const auto& [ms, ts] : clone()[i].var_set_witnesses)
        for (const auto& [mt, tt] : clone()[j].var_set_witnesses)
            if ((mt & ~ms) == 0)
                return RewriteRule(ts, tt);
    return std::nullopt;
}

std::optional<std::size_t> PairContext::pair_of(const ArrowPattern& pattern) const {
    auto i = clone().class_of(pattern.lhs);
    auto j = clone().class_of(pattern.rhs);
    if (!i || !j)
        return std::nullopt;
    return *i * class_count() + *j;
}

PairContext PairContext::flipped() const { return PairContext(data_, !flipped_); }

std::vector<std::string> describe_pairs(const PairContext& ctx, const Bitset& pairs, bool rules,
                                        std::size_t limit) {
    std::vector<std::string> out;
    for (auto p = pairs.find_first(); p != Bitset::npos && out.size() < limit;
         p = pairs.find_next(p)) {
        if (rules) {
            if (auto r = ctx.rule_witness(p)) {
                out.push_back(r->to_string());
                continue;
            }
        }
        out.push_back(ctx.pair_witness(p).to_string());
    }
    return out;
}

} // namespace analogy
