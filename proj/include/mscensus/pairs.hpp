#pragma once

#include "mscensus/closure.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mscensus {

// Candidate fibrant (F) and cofibrant (C) replacement operators.
struct ReplacementPair {
    ClosureOperator F;
    InteriorOperator C;

    friend bool operator==(const ReplacementPair&, const ReplacementPair&) = default;
};

ReplacementPair identity_pair(const PosetPtr& poset);

// First failing instance of the compatibility conditions, or nullopt.
std::optional<std::string> compatibility_violation(const ReplacementPair& p);
// First failing instance of compatibility plus the I_F / I_C lifting
// condition, or nullopt.
std::optional<std::string> orthogonality_violation(const ReplacementPair& p);

bool is_compatible(const ReplacementPair& p);
bool is_strongly_compatible(const ReplacementPair& p);
bool is_orthogonal(const ReplacementPair& p);

// A pair of Moore families on an n-set: F closes `closure_family`, C is the
// dual interior of `interior_family`. Indices point into PairCensus::families.
struct FamilyPair {
    std::size_t closure_family = 0;
    std::size_t interior_family = 0;
    bool orthogonal = false;
};

struct PairCensus {
    unsigned n = 0;
    std::vector<MooreFamily> families;
    std::vector<FamilyPair> pairs;
};

struct PairQuery {
    bool orthogonal_only = true;
    bool topologies_only = false;
    unsigned jobs = 1;
};

inline constexpr unsigned kMaxPairRank = 4;

// Compatible (or only orthogonal) pairs over all family combinations, in
// (closure_family, interior_family) order. Output does not depend on jobs.
PairCensus enumerate_replacement_pairs(unsigned n, const PairQuery& query);
PairCensus enumerate_orthogonal_pairs(unsigned n, bool topologies_only = false, unsigned jobs = 1);

ReplacementPair materialize(const PairCensus& census, const FamilyPair& pair);

struct ClassPair {
    PosetPtr poset;
    MorphismClass L;
    MorphismClass R;

    friend bool operator==(const ClassPair&, const ClassPair&) = default;
};

// (I_F, inj(I_F)); throws internal_consistency_error if some pair fails to factor.
ClassPair monad_to_fs(const ClosureOperator& F);
// (proj(I_C), I_C).
ClassPair comonad_to_fs(const InteriorOperator& C);
// F(x) = middle of the factorization of x <= top. Requires L retractile.
ClosureOperator fs_to_monad(const ClassPair& fs);
// C(x) = middle of the factorization of bottom <= x. Requires R sectile.
InteriorOperator fs_to_comonad(const ClassPair& fs);

bool is_center(const PosetPtr& poset, const std::vector<Element>& chi, const MorphismClass& W);

bool powerset_strong_conditions(const ClosureOperator& cl, const InteriorOperator& in);

} // namespace mscensus
