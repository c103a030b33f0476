#include "mscensus/constructions.hpp"

#include "mscensus/errors.hpp"

namespace mscensus {

namespace {

const PosetPtr& bounded_poset(const ReplacementPair& p)
{
    const auto& poset = p.F.poset();
    if (!poset || poset != p.C.poset()) {
        throw argument_error("replacement pair operators live on different posets");
    }
    if (!poset->bottom() || !poset->top()) {
        throw unsupported_structure_error("constructions need a bottom and a top element");
    }
    return poset;
}

void require_compatible(const ReplacementPair& p)
{
    if (auto v = compatibility_violation(p)) {
        throw precondition_error("replacement pair is not compatible: " + *v);
    }
}

ModelStructure from_systems(const PosetPtr& poset, const MorphismClass& acof,
                            const MorphismClass& fib, const MorphismClass& cof,
                            const MorphismClass& afib, const BracketCatalog* catalog)
{
    BracketPair pair{FactorizationBracket::from_classes(poset, acof, fib),
                     FactorizationBracket::from_classes(poset, cof, afib)};
    if (auto v = bracket_pair_violation(pair)) {
        throw internal_consistency_error("constructed classes fail the bracket axioms: " + *v);
    }
    std::optional<std::pair<std::size_t, std::size_t>> ids;
    if (catalog != nullptr) {
        const auto i = catalog->find(pair.phi);
        const auto j = catalog->find(pair.psi);
        if (!i || !j) {
            throw internal_consistency_error("constructed brackets are missing from the catalog");
        }
        ids = std::pair{*i, *j};
    }
    auto ms = derive_model_structure(pair, ids);
    if (!(ms.acof == acof) || !(ms.fib == fib) || !(ms.cof == cof) || !(ms.afib == afib)) {
        throw internal_consistency_error("bracket round trip changed the constructed classes");
    }
    if (auto v = model_structure_violation(*poset, ms.cof, ms.we, ms.fib)) {
        throw internal_consistency_error("constructed classes are not a model structure: " + *v);
    }
    return ms;
}

} // namespace

SemiStatus semistatus(const ReplacementPair& p, Element x)
{
    const auto& poset = *bounded_poset(p);
    const Element fc = p.F(p.C(x));
    return {poset.leq(fc, x), poset.leq(x, fc), p.F(x) == x, p.C(x) == x};
}

std::string construction_name(Construction c)
{
    switch (c) {
    case Construction::droz_zakharevich:
        return "dz";
    case Construction::stanculescu:
        return "stanculescu";
    case Construction::main:
        return "main";
    case Construction::strong:
        return "strong";
    }
    return "unknown";
}

Construction construction_from_name(const std::string& name)
{
    for (auto c : {Construction::droz_zakharevich, Construction::stanculescu, Construction::main,
                   Construction::strong}) {
        if (construction_name(c) == name) {
            return c;
        }
    }
    throw argument_error("unknown construction '" + name + "'");
}

ModelStructure model_structure_from_classes(const PosetPtr& poset, const MorphismClass& cof,
                                            const MorphismClass& we, const MorphismClass& fib,
                                            const BracketCatalog* catalog)
{
    if (auto v = model_structure_violation(*poset, cof, we, fib)) {
        throw internal_consistency_error("classes are not a model structure: " + *v);
    }
    auto ms = from_systems(poset, cof & we, fib, cof, fib & we, catalog);
    if (!(ms.we == we)) {
        throw internal_consistency_error("bracket round trip changed the weak equivalences");
    }
    return ms;
}

MorphismClass inverted_by_fc(const ReplacementPair& p)
{
    const auto& poset = *bounded_poset(p);
    MorphismClass out = poset.empty_class();
    for (std::size_t r = 0; r < poset.rel_count(); ++r) {
        const auto& f = poset.rel(r);
        if (p.F(p.C(f.src)) == p.F(p.C(f.dst))) {
            out.insert(r);
        }
    }
    return out;
}

ConstructionResult dz_model_structure(const ReplacementPair& p, const BracketCatalog* catalog)
{
    const auto& poset = bounded_poset(p);
    require_compatible(p);
    const auto we = inverted_by_fc(p);
    MorphismClass semicofibrant_target = poset->empty_class();
    for (std::size_t r = 0; r < poset->rel_count(); ++r) {
        if (semistatus(p, poset->rel(r).dst).semicofibrant) {
            semicofibrant_target.insert(r);
        }
    }
    const auto afib = poset->inj(semicofibrant_target);
    const auto cof = poset->proj(afib);
    const auto fib = poset->inj(cof & we);
    return {model_structure_from_classes(poset, cof, we, fib, catalog),
            Construction::droz_zakharevich, p};
}

ConstructionResult stanculescu_model_structure(const ReplacementPair& p,
                                               const BracketCatalog* catalog)
{
    const auto& poset = bounded_poset(p);
    require_compatible(p);
    const auto we = inverted_by_fc(p);
    const auto fib = poset->inj(inverted_class(p.F));
    const auto cof = poset->proj(we & fib);
    return {model_structure_from_classes(poset, cof, we, fib, catalog), Construction::stanculescu,
            p};
}

namespace {

MorphismClass stanculescu_cofibrations(const ReplacementPair& p)
{
    const auto& poset = bounded_poset(p);
    return poset->proj(inverted_by_fc(p) & poset->inj(inverted_class(p.F)));
}

} // namespace

MorphismClass displayed_main_cofibrations(const ReplacementPair& p)
{
    const auto& poset = bounded_poset(p);
    const Element bottom = *poset->bottom();
    MorphismClass z = poset->empty_class();
    stanculescu_cofibrations(p).for_each([&](std::size_t r) {
        const auto& f = poset->rel(r);
        if (f.src != bottom || p.C(f.dst) == f.dst) {
            z.insert(r);
        }
    });
    return z;
}

MorphismClass main_cofibrations(const ReplacementPair& p)
{
    const auto& poset = bounded_poset(p);
    MorphismClass z = poset->empty_class();
    stanculescu_cofibrations(p).for_each([&](std::size_t r) {
        const auto& f = poset->rel(r);
        if (p.C(f.src) != f.src || p.C(f.dst) == f.dst) {
            z.insert(r);
        }
    });
    return z;
}

ConstructionResult main_construction(const ReplacementPair& p, const BracketCatalog* catalog)
{
    const auto& poset = bounded_poset(p);
    require_compatible(p);
    const auto we = inverted_by_fc(p);
    const auto cof = main_cofibrations(p);
    const auto fib = poset->inj(cof & we);
    return {model_structure_from_classes(poset, cof, we, fib, catalog), Construction::main, p};
}

ConstructionResult strong_from_orthogonal(const ReplacementPair& p, const BracketCatalog* catalog)
{
    const auto& poset = bounded_poset(p);
    if (auto v = orthogonality_violation(p)) {
        throw precondition_error("replacement pair is not orthogonal: " + *v);
    }
    const auto acof = inverted_class(p.F);
    const auto afib = inverted_class(p.C);
    auto ms = from_systems(poset, acof, poset->inj(acof), poset->proj(afib), afib, catalog);
    if (!ms.flags.strong) {
        throw internal_consistency_error("orthogonal pair produced a non-strong structure");
    }
    return {std::move(ms), Construction::strong, p};
}

ConstructionResult construct(Construction method, const ReplacementPair& p,
                             const BracketCatalog* catalog)
{
    switch (method) {
    case Construction::droz_zakharevich:
        return dz_model_structure(p, catalog);
    case Construction::stanculescu:
        return stanculescu_model_structure(p, catalog);
    case Construction::main:
        return main_construction(p, catalog);
    case Construction::strong:
        return strong_from_orthogonal(p, catalog);
    }
    throw argument_error("unknown construction");
}

} // namespace mscensus
