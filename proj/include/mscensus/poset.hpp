#pragma once

#include "mscensus/morphism_class.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mscensus {

using Element = std::uint32_t;

// Subset of the elements of a poset, bit i standing for element i.
using ElementSet = std::uint64_t;

struct RelPair {
    Element src = 0;
    Element dst = 0;

    [[nodiscard]] bool is_identity() const { return src == dst; }
    friend auto operator<=>(const RelPair&, const RelPair&) = default;
};

struct ClassPredicates {
    bool retractile = false;
    bool sectile = false;
    bool decomposable = false;
    bool composition_closed = false;
    bool contains_identities = false;
};

class FinitePoset;
using PosetPtr = std::shared_ptr<const FinitePoset>;

// Immutable finite partial order on elements 0..size-1 (at most 64).
//
// Rels, the comparable pairs, are indexed lexicographically by (src, dst).
// Per-pair lifting classes are cached so proj and inj reduce to word-parallel
// intersections.
class FinitePoset {
public:
    static constexpr std::size_t kMaxElements = 64;
    static constexpr unsigned kMaxBooleanRank = 6;

    [[nodiscard]] std::size_t size() const { return up_.size(); }
    [[nodiscard]] std::uint64_t id() const { return id_; }

    [[nodiscard]] bool leq(Element a, Element b) const { return (up_[a] >> b) & 1u; }
    [[nodiscard]] ElementSet up_set(Element a) const { return up_[a]; }
    [[nodiscard]] ElementSet down_set(Element a) const { return down_[a]; }
    [[nodiscard]] ElementSet all_elements() const;

    [[nodiscard]] bool has_meets_joins() const { return !meet_.empty(); }
    [[nodiscard]] Element meet(Element a, Element b) const;
    [[nodiscard]] Element join(Element a, Element b) const;
    [[nodiscard]] std::optional<Element> bottom() const { return bottom_; }
    [[nodiscard]] std::optional<Element> top() const { return top_; }

    // Ground-set size when this is the power-set lattice built by
    // boolean_algebra, whose elements are the subset bit masks themselves.
    [[nodiscard]] std::optional<unsigned> boolean_rank() const { return boolean_rank_; }
    [[nodiscard]] bool is_boolean() const { return boolean_rank_.has_value(); }
    // Complement in a Boolean algebra.
    [[nodiscard]] Element complement(Element a) const;

    [[nodiscard]] const std::vector<RelPair>& rels() const { return rels_; }
    [[nodiscard]] std::size_t rel_count() const { return rels_.size(); }
    [[nodiscard]] const RelPair& rel(std::size_t index) const { return rels_[index]; }
    // Index of (src, dst) in rels(), or nullopt when src is not below dst.
    [[nodiscard]] std::optional<std::size_t> rel_index(Element src, Element dst) const;
    [[nodiscard]] std::size_t rel_index_unchecked(Element src, Element dst) const
    {
        return static_cast<std::size_t>(rel_index_[src * size() + dst]);
    }

    [[nodiscard]] const std::string& element_name(Element a) const { return names_[a]; }
    [[nodiscard]] const std::vector<std::string>& element_names() const { return names_; }

    // Length of the longest chain from a minimal element up to a.
    [[nodiscard]] unsigned rank(Element a) const { return rank_[a]; }
    // Non-identity rels in display order: by target then source, each ordered
    // by descending rank and ascending index.
    [[nodiscard]] const std::vector<std::size_t>& display_rel_order() const
    {
        return display_rel_order_;
    }

    // Stable FNV-1a digest of the order relation and element names.
    [[nodiscard]] std::string hash_hex() const;

    [[nodiscard]] MorphismClass empty_class() const;
    [[nodiscard]] MorphismClass all_class() const;
    [[nodiscard]] MorphismClass identity_class() const;
    [[nodiscard]] MorphismClass class_of(const std::vector<RelPair>& pairs) const;

    [[nodiscard]] bool has_lifting(RelPair i, RelPair p) const;
    [[nodiscard]] MorphismClass proj(const MorphismClass& m) const;
    [[nodiscard]] MorphismClass inj(const MorphismClass& m) const;
    [[nodiscard]] ClassPredicates class_predicates(const MorphismClass& m) const;
    [[nodiscard]] bool is_retractile(const MorphismClass& m) const;
    [[nodiscard]] bool is_sectile(const MorphismClass& m) const;

    void require_same(const MorphismClass& m) const;

    // Use the factory functions below.
    struct Private;
    FinitePoset(const Private&, std::vector<ElementSet> up, std::vector<std::string> names,
                std::optional<unsigned> boolean_rank);

private:
    std::uint64_t id_ = 0;
    std::vector<ElementSet> up_;
    std::vector<ElementSet> down_;
    std::vector<Element> meet_;
    std::vector<Element> join_;
    std::optional<Element> bottom_;
    std::optional<Element> top_;
    std::optional<unsigned> boolean_rank_;
    std::vector<std::string> names_;
    std::vector<unsigned> rank_;
    std::vector<RelPair> rels_;
    std::vector<std::int32_t> rel_index_;
    std::vector<std::size_t> display_rel_order_;
    // lifts_against_[p] = {i : has_lifting(i, p)}; lifted_by_[i] = {p : has_lifting(i, p)}.
    std::vector<MorphismClass> lifts_against_;
    std::vector<MorphismClass> lifted_by_;
};

// Power-set lattice on n generators with bit-mask elements. Instances are
// cached, so repeated calls return the same poset.
PosetPtr boolean_algebra(unsigned n);

// Poset from a full relation matrix leq[a][b]. The relation must already be a
// partial order. Names default to the element indices.
PosetPtr poset_from_relation(const std::vector<std::vector<bool>>& leq,
                             std::vector<std::string> names = {});

struct SkeletonResult {
    PosetPtr poset;
    // Raw index -> element of the quotient poset.
    std::vector<Element> class_of;
};

// Quotient of a reflexive, transitive relation by mutual comparability.
// Quotient elements are numbered by first occurrence; each takes the name of
// its smallest raw representative.
SkeletonResult skeletonize(const std::vector<std::vector<bool>>& raw,
                           const std::vector<std::string>& names = {});

// Reflexive-transitive closure of a generating relation given as index pairs.
std::vector<std::vector<bool>> reflexive_transitive_closure(
    std::size_t size, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

std::string boolean_element_name(Element mask);

} // namespace mscensus
