#include "mscensus/factorization.hpp"

#include "mscensus/errors.hpp"

#include <bit>

namespace mscensus {

namespace {

template <typename OnMatch>
void scan_interval(const FinitePoset& poset, const MorphismClass& L, const MorphismClass& R,
                   RelPair f, OnMatch on_match)
{
    poset.require_same(L);
    poset.require_same(R);
    if (!poset.rel_index(f.src, f.dst)) {
        throw argument_error("not a comparable pair");
    }
    ElementSet between = poset.up_set(f.src) & poset.down_set(f.dst);
    while (between != 0) {
        const auto m = static_cast<Element>(std::countr_zero(between));
        between &= between - 1;
        if (L.contains(poset.rel_index_unchecked(f.src, m)) &&
            R.contains(poset.rel_index_unchecked(m, f.dst))) {
            if (!on_match(m)) {
                return;
            }
        }
    }
}

} // namespace

Element factor_with_classes(const FinitePoset& poset, const MorphismClass& L,
                            const MorphismClass& R, RelPair f)
{
    std::optional<Element> found;
    bool multiple = false;
    scan_interval(poset, L, R, f, [&](Element m) {
        if (found) {
            multiple = true;
            return false;
        }
        found = m;
        return true;
    });
    const auto where = "(" + poset.element_name(f.src) + ", " + poset.element_name(f.dst) + ")";
    if (!found) {
        throw internal_consistency_error("no factorization of " + where);
    }
    if (multiple) {
        throw internal_consistency_error("factorization of " + where + " is not unique");
    }
    return *found;
}

std::optional<Element> find_factorization(const FinitePoset& poset, const MorphismClass& L,
                                          const MorphismClass& R, RelPair f)
{
    std::optional<Element> found;
    scan_interval(poset, L, R, f, [&](Element m) {
        found = m;
        return false;
    });
    return found;
}

bool is_factorization_system(const FinitePoset& poset, const MorphismClass& L,
                             const MorphismClass& R)
{
    if (!(poset.proj(R) == L) || !(poset.inj(L) == R)) {
        return false;
    }
    for (const auto& f : poset.rels()) {
        if (!find_factorization(poset, L, R, f)) {
            return false;
        }
    }
    return true;
}

} // namespace mscensus
