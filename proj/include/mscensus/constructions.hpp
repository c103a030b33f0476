#pragma once

#include "mscensus/brackets.hpp"
#include "mscensus/factorization.hpp"
#include "mscensus/pairs.hpp"

#include <string>

namespace mscensus {

struct SemiStatus {
    bool semifibrant = false;     // F(C(x)) <= x
    bool semicofibrant = false;   // x <= F(C(x))
    bool f_fibrant = false;       // F(x) = x
    bool c_cofibrant = false;     // C(x) = x
};

SemiStatus semistatus(const ReplacementPair& p, Element x);

enum class Construction { droz_zakharevich, stanculescu, main, strong };

std::string construction_name(Construction c);
Construction construction_from_name(const std::string& name);

struct ConstructionResult {
    ModelStructure ms;
    Construction provenance = Construction::main;
    ReplacementPair input;
};

// Builds a model structure from explicit classes and checks it twice: with
// the class-level verifier and, after conversion to brackets, with the
// bracket-pair axioms. The classes recovered from the brackets must match.
// Throws internal_consistency_error on any mismatch. When a catalog is given,
// the result carries its (phi, psi) ids.
ModelStructure model_structure_from_classes(const PosetPtr& poset, const MorphismClass& cof,
                                            const MorphismClass& we, const MorphismClass& fib,
                                            const BracketCatalog* catalog = nullptr);

// we = I_FC, afib = inj(maps with semicofibrant target), cof = proj(afib).
ConstructionResult dz_model_structure(const ReplacementPair& p,
                                      const BracketCatalog* catalog = nullptr);
// we = I_FC, acof = I_F, fib = inj(I_F), cof = proj(I_FC and inj(I_F)).
ConstructionResult stanculescu_model_structure(const ReplacementPair& p,
                                               const BracketCatalog* catalog = nullptr);
// we = I_FC, cof = main_cofibrations(p), fib = inj(cof and we).
ConstructionResult main_construction(const ReplacementPair& p,
                                     const BracketCatalog* catalog = nullptr);
// acof = I_F, afib = I_C, fib = inj(I_F), cof = proj(I_C).
ConstructionResult strong_from_orthogonal(const ReplacementPair& p,
                                          const BracketCatalog* catalog = nullptr);

ConstructionResult construct(Construction method, const ReplacementPair& p,
                             const BracketCatalog* catalog = nullptr);

// Stanculescu cofibrations X -> Y with X not C-cofibrant or Y C-cofibrant.
// Agrees with displayed_main_cofibrations whenever that class is closed
// under composition, and is a left class for every compatible pair.
MorphismClass main_cofibrations(const ReplacementPair& p);

// Stanculescu cofibrations whose source is not the bottom or whose target is
// C-cofibrant. Not always closed under composition: on P(3) it fails for
// 135 of the 690 compatible pairs.
MorphismClass displayed_main_cofibrations(const ReplacementPair& p);

// I_{FC} for a replacement pair.
MorphismClass inverted_by_fc(const ReplacementPair& p);

} // namespace mscensus
