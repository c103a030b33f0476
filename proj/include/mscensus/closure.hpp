#pragma once

#include "mscensus/poset.hpp"

#include <optional>
#include <vector>

namespace mscensus {

// Idempotent monad on a poset: extensive, monotone, idempotent.
class ClosureOperator {
public:
    ClosureOperator() = default;
    // Throws validation_error when the table is not a closure operator.
    ClosureOperator(PosetPtr poset, std::vector<Element> table);

    static ClosureOperator identity(PosetPtr poset);
    static ClosureOperator constant_top(PosetPtr poset);

    [[nodiscard]] Element operator()(Element x) const { return table_[x]; }
    [[nodiscard]] const std::vector<Element>& table() const { return table_; }
    [[nodiscard]] const PosetPtr& poset() const { return poset_; }
    [[nodiscard]] ElementSet fixed_points() const;

    friend bool operator==(const ClosureOperator& a, const ClosureOperator& b)
    {
        return a.poset_ == b.poset_ && a.table_ == b.table_;
    }

private:
    PosetPtr poset_;
    std::vector<Element> table_;
};

// Idempotent comonad on a poset: intensive, monotone, idempotent.
class InteriorOperator {
public:
    InteriorOperator() = default;
    InteriorOperator(PosetPtr poset, std::vector<Element> table);

    static InteriorOperator identity(PosetPtr poset);
    static InteriorOperator constant_bottom(PosetPtr poset);

    [[nodiscard]] Element operator()(Element x) const { return table_[x]; }
    [[nodiscard]] const std::vector<Element>& table() const { return table_; }
    [[nodiscard]] const PosetPtr& poset() const { return poset_; }
    [[nodiscard]] ElementSet fixed_points() const;

    friend bool operator==(const InteriorOperator& a, const InteriorOperator& b)
    {
        return a.poset_ == b.poset_ && a.table_ == b.table_;
    }

private:
    PosetPtr poset_;
    std::vector<Element> table_;
};

// Intersection-closed family of subsets of an n-set that contains the whole
// set. Bit s of `closed` marks the subset with mask s.
struct MooreFamily {
    unsigned n = 0;
    std::uint64_t closed = 0;

    [[nodiscard]] bool contains(Element set) const { return (closed >> set) & 1u; }
    [[nodiscard]] std::vector<Element> sets() const;
    [[nodiscard]] Element ground() const { return static_cast<Element>((1u << n) - 1); }

    friend auto operator<=>(const MooreFamily&, const MooreFamily&) = default;
};

inline constexpr unsigned kMaxMooreRank = 5;

// Throws validation_error unless m is a Moore family.
void validate_moore_family(const MooreFamily& m);

// All Moore families on an n-set, ascending by `closed`.
std::vector<MooreFamily> enumerate_moore_families(unsigned n);

ClosureOperator closure_from_family(const MooreFamily& m);
MooreFamily family_from_closure(const ClosureOperator& f);

// Int(U) = complement of Cl(complement of U).
InteriorOperator dual_interior(const MooreFamily& m);
// Inverse of dual_interior: the complements of the open sets of c.
MooreFamily family_from_interior(const InteriorOperator& c);

bool is_topology(const MooreFamily& m);
bool is_matroid(const MooreFamily& m);
bool is_geometry(const MooreFamily& m);

// {(x <= y) : f(x) = f(y)}.
MorphismClass inverted_class(const ClosureOperator& f);
MorphismClass inverted_class(const InteriorOperator& c);

// Closure operator with the given fixed points, if every element has a least
// fixed point above it.
std::optional<ClosureOperator> closure_from_fixed_points(const PosetPtr& poset, ElementSet fixed);
// Interior operator with the given fixed points, if every element has a
// greatest fixed point below it.
std::optional<InteriorOperator> interior_from_fixed_points(const PosetPtr& poset, ElementSet fixed);

} // namespace mscensus
