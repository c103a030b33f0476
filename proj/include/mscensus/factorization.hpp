#pragma once

#include "mscensus/poset.hpp"

#include <optional>

namespace mscensus {

// The unique m with f.src <= m <= f.dst, (f.src <= m) in L and (m <= f.dst)
// in R. Throws internal_consistency_error when no such m or several exist.
Element factor_with_classes(const FinitePoset& poset, const MorphismClass& L,
                            const MorphismClass& R, RelPair f);

// Same search without the uniqueness requirement; nullopt when no m exists.
std::optional<Element> find_factorization(const FinitePoset& poset, const MorphismClass& L,
                                          const MorphismClass& R, RelPair f);

// True iff L = proj(R), R = inj(L) and every pair factors.
bool is_factorization_system(const FinitePoset& poset, const MorphismClass& L,
                             const MorphismClass& R);

} // namespace mscensus
