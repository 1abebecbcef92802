#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "analogy/algebra.hpp"
#include "analogy/term.hpp"

namespace analogy {

namespace detail {
class CloneBuilder;
}

// Finite approximation of the term universe: terms over x0..x(max_vars-1)
// up to max_depth (unbounded when empty), aborting past class_cap classes.
struct Bounds {
    std::optional<unsigned> max_depth;
    unsigned max_vars = 2;
    std::size_t class_cap = 100000;

    // Mask tracking stores one bit per variable subset in a 64-bit word.
    static constexpr unsigned kMaxVars = 6;

    // Throws PreconditionError when out of range.
    void validate() const;
    std::string to_string() const;
};

// A set of terms with the same induced function on every algebra of the
// clone. `table` concatenates one segment per algebra; segment k has
// |A_k|^max_vars entries indexed like an operation table.
struct DenotationClass {
    std::vector<Element> table;
    Term witness;
    unsigned depth = 0;
    // Bit m is set iff some member term has variable set m (as a bitmask).
    std::uint64_t var_sets = 0;
    // One member term per variable set, in increasing mask order.
    std::vector<std::pair<std::uint64_t, Term>> var_set_witnesses;

    bool has_var_set(std::uint64_t mask) const { return (var_sets >> mask) & 1U; }
    const Term& witness_for(std::uint64_t mask) const;
};

class CloneResult {
public:
    const std::vector<AlgebraPtr>& algebras() const noexcept { return algebras_; }
    const Bounds& bounds() const noexcept { return bounds_; }
    bool saturated() const noexcept { return saturated_; }
    // Index of the last level computed (the empty level when saturated).
    unsigned depth() const noexcept { return depth_; }
    const std::vector<DenotationClass>& classes() const noexcept { return classes_; }
    std::size_t size() const noexcept { return classes_.size(); }
    const DenotationClass& operator[](std::size_t i) const { return classes_[i]; }

    std::size_t segment_offset(std::size_t k) const { return offsets_.at(k); }
    std::size_t segment_size(std::size_t k) const { return offsets_.at(k + 1) - offsets_.at(k); }
    std::span<const Element> segment(std::size_t cls, std::size_t k) const;

    std::optional<std::size_t> find(std::span<const Element> table) const;
    // The class of t, if t's joint denotation was enumerated. Variables of t
    // must be below max_vars.
    std::optional<std::size_t> class_of(const Term& t) const;

private:
    friend class detail::CloneBuilder;

    std::vector<AlgebraPtr> algebras_;
    Bounds bounds_;
    bool saturated_ = false;
    unsigned depth_ = 0;
    std::vector<DenotationClass> classes_;
    std::vector<std::size_t> offsets_;
    std::unordered_map<std::string, std::size_t> index_;
};

// Enumerates the term functions of one algebra, or jointly of several
// algebras over the same language, level by level:
//   level 0     projections x0..x(v-1) and constants,
//   level d+1   every symbol applied to witnesses of levels <= d,
// deduplicated by joint table. Variable sets are tracked per class so the
// same fixpoint certifies which classes contain a term with a given set of
// variables. Throws ResourceLimitError past bounds.class_cap classes.
CloneResult generate_clone(std::vector<AlgebraPtr> algebras, const Bounds& bounds);

} // namespace analogy
