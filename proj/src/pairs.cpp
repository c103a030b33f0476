#include "mscensus/pairs.hpp"

#include "mscensus/errors.hpp"
#include "mscensus/factorization.hpp"
#include "mscensus/parallel.hpp"

#include <array>

namespace mscensus {

namespace {

const FinitePoset& common_poset(const ReplacementPair& p)
{
    if (!p.F.poset() || p.F.poset() != p.C.poset()) {
        throw argument_error("replacement pair operators live on different posets");
    }
    return *p.F.poset();
}

std::string name_pair(const FinitePoset& poset, Element x, Element y)
{
    return "(" + poset.element_name(x) + ", " + poset.element_name(y) + ")";
}

} // namespace

ReplacementPair identity_pair(const PosetPtr& poset)
{
    return {ClosureOperator::identity(poset), InteriorOperator::identity(poset)};
}

std::optional<std::string> compatibility_violation(const ReplacementPair& p)
{
    const auto& poset = common_poset(p);
    const auto& F = p.F;
    const auto& C = p.C;
    for (Element x = 0; x < poset.size(); ++x) {
        if (F(C(x)) != C(F(x))) {
            return "F and C do not commute at " + poset.element_name(x);
        }
    }
    for (Element x = 0; x < poset.size(); ++x) {
        for (Element y = 0; y < poset.size(); ++y) {
            if (poset.leq(x, C(y)) && poset.leq(F(x), y) && !poset.leq(F(x), C(y))) {
                return "mixed lifting fails at " + name_pair(poset, x, y);
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> orthogonality_violation(const ReplacementPair& p)
{
    if (auto v = compatibility_violation(p)) {
        return v;
    }
    const auto& poset = common_poset(p);
    const auto IF = inverted_class(p.F);
    const auto IC = inverted_class(p.C);
    std::optional<std::string> out;
    IF.for_each([&](std::size_t f) {
        if (out) {
            return;
        }
        IC.for_each([&](std::size_t g) {
            if (!out && !poset.has_lifting(poset.rel(f), poset.rel(g))) {
                const auto& rf = poset.rel(f);
                const auto& rg = poset.rel(g);
                out = "I_F member " + name_pair(poset, rf.src, rf.dst) +
                      " does not lift against I_C member " + name_pair(poset, rg.src, rg.dst);
            }
        });
    });
    return out;
}

bool is_compatible(const ReplacementPair& p) { return !compatibility_violation(p); }

bool is_strongly_compatible(const ReplacementPair& p)
{
    if (!is_compatible(p)) {
        return false;
    }
    const auto& poset = common_poset(p);
    return (inverted_class(p.F) & inverted_class(p.C)) == poset.identity_class();
}

bool is_orthogonal(const ReplacementPair& p) { return !orthogonality_violation(p); }

namespace {

constexpr std::size_t kWords = 2; // 3^4 = 81 comparable pairs at most.

using Words = std::array<std::uint64_t, kWords>;

Words words_of(const MorphismClass& m)
{
    Words out{};
    for (std::size_t w = 0; w < m.words(); ++w) {
        out[w] = m.word(w);
    }
    return out;
}

struct FamilyTables {
    std::array<std::uint8_t, 16> closure{};
    std::array<std::uint8_t, 16> interior{};
    Words inverted_closure{};
    Words inverted_interior{};
    Words proj_inverted_interior{};
    bool topology = false;
};

} // namespace

PairCensus enumerate_replacement_pairs(unsigned n, const PairQuery& query)
{
    if (n > kMaxPairRank) {
        throw size_limit_error("pair enumeration supports ground sets of size <= 4");
    }
    const auto poset = boolean_algebra(n);
    PairCensus census;
    census.n = n;
    census.families = enumerate_moore_families(n);
    const std::size_t count = census.families.size();
    const std::size_t size = poset->size();

    std::vector<FamilyTables> tables(count);
    for (std::size_t i = 0; i < count; ++i) {
        const auto& m = census.families[i];
        const auto cl = closure_from_family(m);
        const auto in = dual_interior(m);
        auto& t = tables[i];
        for (Element x = 0; x < size; ++x) {
            t.closure[x] = static_cast<std::uint8_t>(cl(x));
            t.interior[x] = static_cast<std::uint8_t>(in(x));
        }
        const auto ic = inverted_class(in);
        t.inverted_closure = words_of(inverted_class(cl));
        t.inverted_interior = words_of(ic);
        t.proj_inverted_interior = words_of(poset->proj(ic));
        t.topology = is_topology(m);
    }

    auto sweep = [&](std::size_t begin, std::size_t end) {
        std::vector<FamilyPair> found;
        for (std::size_t i = begin; i < end; ++i) {
            const auto& fi = tables[i];
            if (query.topologies_only && !fi.topology) {
                continue;
            }
            for (std::size_t j = 0; j < count; ++j) {
                const auto& cj = tables[j];
                if (query.topologies_only && !cj.topology) {
                    continue;
                }
                bool orthogonal = true;
                for (std::size_t w = 0; w < kWords; ++w) {
                    if ((fi.inverted_closure[w] & ~cj.proj_inverted_interior[w]) != 0) {
                        orthogonal = false;
                    }
                }
                if (query.orthogonal_only && !orthogonal) {
                    continue;
                }
                const auto& F = fi.closure;
                const auto& C = cj.interior;
                bool ok = true;
                for (std::size_t x = 0; x < size && ok; ++x) {
                    ok = F[C[x]] == C[F[x]];
                }
                for (std::size_t x = 0; x < size && ok; ++x) {
                    for (std::size_t y = 0; y < size && ok; ++y) {
                        const bool x_below_cy = (x & ~C[y]) == 0;
                        const bool fx_below_y = (F[x] & ~y) == 0;
                        ok = !(x_below_cy && fx_below_y) || (F[x] & ~C[y]) == 0;
                    }
                }
                if (ok) {
                    found.push_back({i, j, orthogonal});
                }
            }
        }
        return found;
    };
    census.pairs = flatten(parallel_chunks<std::vector<FamilyPair>>(count, query.jobs, sweep));
    return census;
}

PairCensus enumerate_orthogonal_pairs(unsigned n, bool topologies_only, unsigned jobs)
{
    return enumerate_replacement_pairs(n, PairQuery{true, topologies_only, jobs});
}

ReplacementPair materialize(const PairCensus& census, const FamilyPair& pair)
{
    return {closure_from_family(census.families.at(pair.closure_family)),
            dual_interior(census.families.at(pair.interior_family))};
}

ClassPair monad_to_fs(const ClosureOperator& F)
{
    const auto& poset = *F.poset();
    const auto L = inverted_class(F);
    const auto R = poset.inj(L);
    for (const auto& f : poset.rels()) {
        if (!find_factorization(poset, L, R, f)) {
            throw internal_consistency_error("monad does not induce a factorization of " +
                                             name_pair(poset, f.src, f.dst));
        }
    }
    return {F.poset(), L, R};
}

ClassPair comonad_to_fs(const InteriorOperator& C)
{
    const auto& poset = *C.poset();
    const auto R = inverted_class(C);
    const auto L = poset.proj(R);
    for (const auto& f : poset.rels()) {
        if (!find_factorization(poset, L, R, f)) {
            throw internal_consistency_error("comonad does not induce a factorization of " +
                                             name_pair(poset, f.src, f.dst));
        }
    }
    return {C.poset(), L, R};
}

namespace {

const PosetPtr& poset_of(const ClassPair& fs)
{
    if (!fs.poset) {
        throw argument_error("class pair has no poset");
    }
    fs.poset->require_same(fs.L);
    fs.poset->require_same(fs.R);
    if (!fs.poset->bottom() || !fs.poset->top()) {
        throw unsupported_structure_error("poset needs a bottom and a top");
    }
    return fs.poset;
}

} // namespace

ClosureOperator fs_to_monad(const ClassPair& fs)
{
    const auto& poset = poset_of(fs);
    if (!poset->is_retractile(fs.L)) {
        throw precondition_error("left class is not retractile");
    }
    const Element top = *poset->top();
    std::vector<Element> table(poset->size());
    for (Element x = 0; x < table.size(); ++x) {
        table[x] = factor_with_classes(*poset, fs.L, fs.R, {x, top});
    }
    return ClosureOperator(poset, std::move(table));
}

InteriorOperator fs_to_comonad(const ClassPair& fs)
{
    const auto& poset = poset_of(fs);
    if (!poset->is_sectile(fs.R)) {
        throw precondition_error("right class is not sectile");
    }
    const Element bottom = *poset->bottom();
    std::vector<Element> table(poset->size());
    for (Element x = 0; x < table.size(); ++x) {
        table[x] = factor_with_classes(*poset, fs.L, fs.R, {bottom, x});
    }
    return InteriorOperator(poset, std::move(table));
}

bool is_center(const PosetPtr& poset, const std::vector<Element>& chi, const MorphismClass& W)
{
    if (!poset->has_meets_joins()) {
        throw unsupported_structure_error("is_center needs meets and joins");
    }
    poset->require_same(W);
    if (chi.size() != poset->size()) {
        throw argument_error("chi table size does not match the poset");
    }
    bool c1 = true;
    W.for_each([&](std::size_t r) {
        const auto& w = poset->rel(r);
        if (chi[w.src] != chi[w.dst]) {
            c1 = false;
        }
    });
    if (!c1) {
        return false;
    }
    auto in_w = [&](Element a, Element b) {
        const auto idx = poset->rel_index(a, b);
        return idx && W.contains(*idx);
    };
    for (Element a = 0; a < poset->size(); ++a) {
        const Element c = chi[a];
        const Element lo = poset->meet(a, c);
        const Element hi = poset->join(a, c);
        if (!in_w(lo, c) || !in_w(lo, a) || !in_w(a, hi) || !in_w(c, hi)) {
            return false;
        }
    }
    return true;
}

bool powerset_strong_conditions(const ClosureOperator& cl, const InteriorOperator& in)
{
    if (!cl.poset() || cl.poset() != in.poset() || !cl.poset()->is_boolean()) {
        throw unsupported_structure_error("powerset conditions need one Boolean algebra");
    }
    const Element size = static_cast<Element>(cl.poset()->size());
    auto sub = [](Element a, Element b) { return (a & ~b) == 0; };
    for (Element u = 0; u < size; ++u) {
        if (cl(in(u)) != in(cl(u))) {
            return false;
        }
    }
    for (Element u = 0; u < size; ++u) {
        for (Element v = 0; v < size; ++v) {
            if (sub(u, in(v)) && sub(cl(u), v) && !sub(cl(u), in(v))) {
                return false;
            }
            if (sub(u, v) && u != v && cl(u) == cl(v) && in(u) == in(v)) {
                return false;
            }
        }
    }
    return true;
}

} // namespace mscensus
