#pragma once

#include "mscensus/pairs.hpp"
#include "mscensus/poset.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mscensus {

// A function Rels -> elements, stored by rel index. Phi(x, y) names the
// middle object of the factorization of x <= y.
class FactorizationBracket {
public:
    FactorizationBracket() = default;
    // Throws argument_error when the table is not total over Rels.
    FactorizationBracket(PosetPtr poset, std::vector<Element> table);

    // Phi(x, y) = x: every map is a right-class map.
    static FactorizationBracket all_right(PosetPtr poset);
    // Phi(x, y) = y: every map is a left-class map.
    static FactorizationBracket all_left(PosetPtr poset);
    // Bracket of a factorization system given by its two classes.
    static FactorizationBracket from_classes(PosetPtr poset, const MorphismClass& L,
                                             const MorphismClass& R);

    [[nodiscard]] const PosetPtr& poset() const { return poset_; }
    [[nodiscard]] const std::vector<Element>& table() const { return table_; }
    [[nodiscard]] Element at(std::size_t rel) const { return table_[rel]; }
    [[nodiscard]] Element operator()(Element x, Element y) const
    {
        return table_[poset_->rel_index_unchecked(x, y)];
    }

    [[nodiscard]] MorphismClass left_class() const;
    [[nodiscard]] MorphismClass right_class() const;

    friend bool operator==(const FactorizationBracket& a, const FactorizationBracket& b)
    {
        return a.poset_ == b.poset_ && a.table_ == b.table_;
    }

private:
    PosetPtr poset_;
    std::vector<Element> table_;
};

std::optional<std::string> bracket_violation(const FactorizationBracket& phi);
bool is_bracket(const FactorizationBracket& phi);

// True iff R(b) is contained in R(a).
bool is_localization(const FactorizationBracket& a, const FactorizationBracket& b);

struct BracketInfo {
    FactorizationBracket phi;
    MorphismClass L;
    MorphismClass R;
    bool retractile = false; // L retractile
    bool sectile = false;    // R sectile
};

// All factorization brackets of a poset in canonical order.
//
// Canonical order compares left classes as binary numbers: the k-th
// non-identity pair in display order contributes 2^k.
class BracketCatalog {
public:
    BracketCatalog() = default;
    BracketCatalog(PosetPtr poset, std::vector<FactorizationBracket> brackets);

    [[nodiscard]] const PosetPtr& poset() const { return poset_; }
    [[nodiscard]] std::size_t size() const { return entries_.size(); }
    [[nodiscard]] const BracketInfo& operator[](std::size_t i) const { return entries_[i]; }
    [[nodiscard]] const std::vector<BracketInfo>& entries() const { return entries_; }
    [[nodiscard]] std::optional<std::size_t> find(const FactorizationBracket& phi) const;
    // Index of the bracket with every map in R (Phi(x, y) = x).
    [[nodiscard]] std::size_t all_right_index() const;
    // Index of the bracket with every map in L (Phi(x, y) = y).
    [[nodiscard]] std::size_t all_left_index() const;

private:
    PosetPtr poset_;
    std::vector<BracketInfo> entries_;
    std::map<std::vector<Element>, std::size_t> index_;
};

// Sorts brackets of one poset into canonical order.
void canonical_sort(std::vector<FactorizationBracket>& brackets);

struct EnumerationOptions {
    unsigned jobs = 1;
    // Wall-clock limit in seconds; exceeding it raises resource_error.
    std::optional<double> time_budget_seconds;
};

// Interval-constrained depth-first search with incremental axiom checks.
BracketCatalog enumerate_brackets(const PosetPtr& poset, const EnumerationOptions& options = {});

// Reference enumerator: tests every function Rels -> elements. Throws
// size_limit_error when the search space exceeds 2^24 tables.
std::vector<FactorizationBracket> enumerate_brackets_naive(const PosetPtr& poset);

// Phi carries (acyclic cofibrations, fibrations); Psi carries
// (cofibrations, acyclic fibrations).
struct BracketPair {
    FactorizationBracket phi;
    FactorizationBracket psi;

    friend bool operator==(const BracketPair&, const BracketPair&) = default;
};

std::optional<std::string> bracket_pair_violation(const BracketPair& pair);
bool is_bracket_pair(const BracketPair& pair);

struct ModelFlags {
    bool strong = false;
    // The three below are only evaluated on Boolean algebras.
    bool applicable = false;
    bool topological = false;
    bool matroidal = false;
    bool geometric = false;
};

struct ModelStructure {
    BracketPair pair;
    std::optional<std::pair<std::size_t, std::size_t>> ids;
    MorphismClass cof;
    MorphismClass we;
    MorphismClass fib;
    MorphismClass acof;
    MorphismClass afib;
    ElementSet fibrant = 0;
    ElementSet cofibrant = 0;
    ElementSet bifibrant = 0;
    ReplacementPair replacement;
    ModelFlags flags;

    [[nodiscard]] const PosetPtr& poset() const { return pair.phi.poset(); }
};

// Expands a bracket pair into its classes, replacement pair and flags.
// The pair is assumed valid; use bracket_pair_violation to check first.
ModelStructure derive_model_structure(const BracketPair& pair,
                                      std::optional<std::pair<std::size_t, std::size_t>> ids = {});

// Independent check of a model structure given by its three classes:
// acyclic classes from intersections, both factorization systems, and
// two-out-of-three for weak equivalences.
std::optional<std::string> model_structure_violation(const FinitePoset& poset,
                                                     const MorphismClass& cof,
                                                     const MorphismClass& we,
                                                     const MorphismClass& fib);

ModelFlags classify(const ModelStructure& ms);

// F(x) = Phi(x, top), C(x) = Psi(bottom, x).
ReplacementPair associated_pair(const ModelStructure& ms);

struct ModelCensus {
    BracketCatalog catalog;
    // Ordered (phi, psi) index pairs with R(psi) contained in R(phi).
    std::vector<std::pair<std::size_t, std::size_t>> localization_pairs;
    std::vector<ModelStructure> structures;
};

// All model structures, ordered by (phi index, psi index).
ModelCensus enumerate_model_structures(const BracketCatalog& catalog, unsigned jobs = 1);
ModelCensus enumerate_model_structures(const PosetPtr& poset,
                                       const EnumerationOptions& options = {});

// Whether some model structure has exactly these fibrant and cofibrant
// objects: fibrant must be reflective, cofibrant coreflective, and the
// induced replacement pair compatible.
bool exists_ms_with_objects(const PosetPtr& poset, ElementSet fibrant, ElementSet cofibrant);
// As above with a strongly compatible induced pair.
bool exists_strong_ms_with_objects(const PosetPtr& poset, ElementSet fibrant,
                                   ElementSet cofibrant);

// Replacement pair induced by reflective/coreflective object sets.
std::optional<ReplacementPair> pair_from_objects(const PosetPtr& poset, ElementSet fibrant,
                                                 ElementSet cofibrant);

} // namespace mscensus
