#include "mscensus/brackets.hpp"

#include "mscensus/errors.hpp"
#include "mscensus/factorization.hpp"
#include "mscensus/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>

namespace mscensus {

namespace {

constexpr Element kUnset = ~Element{0};

std::string rel_text(const FinitePoset& poset, Element x, Element y)
{
    return "(" + poset.element_name(x) + ", " + poset.element_name(y) + ")";
}

// Evaluates the bracket axioms on a possibly partial table. Instances with an
// unassigned lookup are skipped, so checking every rel right after it is
// assigned covers each instance exactly when it becomes decidable.
class AxiomChecker {
public:
    AxiomChecker(const FinitePoset& poset, const std::vector<Element>& table)
        : poset_(poset), table_(table)
    {
    }

    // Name of a violated axiom among instances involving rel r, or nullptr.
    [[nodiscard]] const char* check_rel(std::size_t r) const
    {
        const Element a = poset_.rel(r).src;
        const Element b = poset_.rel(r).dst;
        const Element v = table_[r];
        if (v >= poset_.size() || !poset_.leq(a, v) || !poset_.leq(v, b)) {
            return "bounds";
        }
        const std::size_t rc = poset_.rel_count();

        // Left composition: Phi(Phi(x, y), z) = Phi(x, z) when Phi(x, y) <= z.
        for (ElementSet zs = poset_.up_set(v); zs != 0; zs &= zs - 1) {
            const auto z = static_cast<Element>(std::countr_zero(zs));
            if (differ(get(v, z), get(a, z))) {
                return "left composition";
            }
        }
        for (std::size_t s = 0; s < rc; ++s) {
            if (table_[s] == a && differ(v, get(poset_.rel(s).src, b))) {
                return "left composition";
            }
        }
        for (ElementSet ys = poset_.up_set(a); ys != 0; ys &= ys - 1) {
            const auto y = static_cast<Element>(std::countr_zero(ys));
            const Element m = get(a, y);
            if (m != kUnset && poset_.leq(m, b) && differ(get(m, b), v)) {
                return "left composition";
            }
        }

        // Right composition: Phi(x, Phi(y, z)) = Phi(x, z) when x <= Phi(y, z).
        for (ElementSet xs = poset_.down_set(v); xs != 0; xs &= xs - 1) {
            const auto x = static_cast<Element>(std::countr_zero(xs));
            if (differ(get(x, v), get(x, b))) {
                return "right composition";
            }
        }
        for (std::size_t s = 0; s < rc; ++s) {
            if (table_[s] == b && differ(v, get(a, poset_.rel(s).dst))) {
                return "right composition";
            }
        }
        for (ElementSet ys = poset_.down_set(b); ys != 0; ys &= ys - 1) {
            const auto y = static_cast<Element>(std::countr_zero(ys));
            const Element m = get(y, b);
            if (m != kUnset && poset_.leq(a, m) && differ(get(a, m), v)) {
                return "right composition";
            }
        }

        // Lifting: w <= Phi(y, z) and Phi(w, x) <= z imply Phi(w, x) <= Phi(y, z).
        for (std::size_t s = 0; s < rc; ++s) {
            const Element u = table_[s];
            if (u == kUnset) {
                continue;
            }
            const Element z = poset_.rel(s).dst;
            if (poset_.leq(a, u) && poset_.leq(v, z) && !poset_.leq(v, u)) {
                return "lifting";
            }
            const Element w = poset_.rel(s).src;
            if (poset_.leq(w, v) && poset_.leq(u, b) && !poset_.leq(u, v)) {
                return "lifting";
            }
        }
        return nullptr;
    }

    [[nodiscard]] std::optional<std::string> check_all() const
    {
        // Bounds first: the other checks index by values and assume them in range.
        for (std::size_t r = 0; r < poset_.rel_count(); ++r) {
            const auto& p = poset_.rel(r);
            const Element v = table_[r];
            if (v >= poset_.size() || !poset_.leq(p.src, v) || !poset_.leq(v, p.dst)) {
                return "bounds axiom fails at " + rel_text(poset_, p.src, p.dst);
            }
        }
        for (std::size_t r = 0; r < poset_.rel_count(); ++r) {
            if (const char* axiom = check_rel(r)) {
                const auto& p = poset_.rel(r);
                return std::string(axiom) + " axiom fails at " + rel_text(poset_, p.src, p.dst);
            }
        }
        return std::nullopt;
    }

private:
    [[nodiscard]] Element get(Element x, Element y) const
    {
        return table_[poset_.rel_index_unchecked(x, y)];
    }
    static bool differ(Element p, Element q) { return p != kUnset && q != kUnset && p != q; }

    const FinitePoset& poset_;
    const std::vector<Element>& table_;
};

void require_bounded(const FinitePoset& poset)
{
    if (!poset.bottom() || !poset.top()) {
        throw unsupported_structure_error("poset needs a bottom and a top element");
    }
}

} // namespace

FactorizationBracket::FactorizationBracket(PosetPtr poset, std::vector<Element> table)
    : poset_(std::move(poset)), table_(std::move(table))
{
    if (!poset_) {
        throw argument_error("bracket has no poset");
    }
    if (table_.size() != poset_->rel_count()) {
        throw argument_error("bracket table is not total over comparable pairs");
    }
}

FactorizationBracket FactorizationBracket::all_right(PosetPtr poset)
{
    std::vector<Element> table;
    for (const auto& r : poset->rels()) {
        table.push_back(r.src);
    }
    return FactorizationBracket(std::move(poset), std::move(table));
}

FactorizationBracket FactorizationBracket::all_left(PosetPtr poset)
{
    std::vector<Element> table;
    for (const auto& r : poset->rels()) {
        table.push_back(r.dst);
    }
    return FactorizationBracket(std::move(poset), std::move(table));
}

FactorizationBracket FactorizationBracket::from_classes(PosetPtr poset, const MorphismClass& L,
                                                        const MorphismClass& R)
{
    std::vector<Element> table;
    for (const auto& r : poset->rels()) {
        table.push_back(factor_with_classes(*poset, L, R, r));
    }
    return FactorizationBracket(std::move(poset), std::move(table));
}

MorphismClass FactorizationBracket::left_class() const
{
    MorphismClass out = poset_->empty_class();
    for (std::size_t r = 0; r < table_.size(); ++r) {
        if (table_[r] == poset_->rel(r).dst) {
            out.insert(r);
        }
    }
    return out;
}

MorphismClass FactorizationBracket::right_class() const
{
    MorphismClass out = poset_->empty_class();
    for (std::size_t r = 0; r < table_.size(); ++r) {
        if (table_[r] == poset_->rel(r).src) {
            out.insert(r);
        }
    }
    return out;
}

std::optional<std::string> bracket_violation(const FactorizationBracket& phi)
{
    return AxiomChecker(*phi.poset(), phi.table()).check_all();
}

bool is_bracket(const FactorizationBracket& phi) { return !bracket_violation(phi); }

bool is_localization(const FactorizationBracket& a, const FactorizationBracket& b)
{
    if (a.poset() != b.poset()) {
        throw argument_error("brackets live on different posets");
    }
    return b.right_class().subset_of(a.right_class());
}

namespace {

// Left classes compared as binary numbers over the display order, the last
// display position being most significant.
std::vector<std::uint8_t> canonical_key(const FactorizationBracket& phi)
{
    const auto& poset = *phi.poset();
    const auto& order = poset.display_rel_order();
    std::vector<std::uint8_t> key(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        const std::size_t r = order[order.size() - 1 - k];
        key[k] = phi.at(r) == poset.rel(r).dst ? 1 : 0;
    }
    return key;
}

} // namespace

void canonical_sort(std::vector<FactorizationBracket>& brackets)
{
    std::vector<std::pair<std::vector<std::uint8_t>, std::size_t>> keyed;
    keyed.reserve(brackets.size());
    for (std::size_t i = 0; i < brackets.size(); ++i) {
        if (i > 0 && brackets[i].poset() != brackets[0].poset()) {
            throw argument_error("brackets live on different posets");
        }
        keyed.emplace_back(canonical_key(brackets[i]), i);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<FactorizationBracket> sorted;
    sorted.reserve(brackets.size());
    for (const auto& [key, i] : keyed) {
        sorted.push_back(std::move(brackets[i]));
    }
    brackets = std::move(sorted);
}

BracketCatalog::BracketCatalog(PosetPtr poset, std::vector<FactorizationBracket> brackets)
    : poset_(std::move(poset))
{
    canonical_sort(brackets);
    for (auto& phi : brackets) {
        if (phi.poset() != poset_) {
            throw argument_error("bracket belongs to a different poset");
        }
        BracketInfo info;
        info.L = phi.left_class();
        info.R = phi.right_class();
        info.retractile = poset_->is_retractile(info.L);
        info.sectile = poset_->is_sectile(info.R);
        const auto [it, inserted] = index_.emplace(phi.table(), entries_.size());
        if (!inserted) {
            throw argument_error("duplicate bracket in catalog");
        }
        info.phi = std::move(phi);
        entries_.push_back(std::move(info));
    }
}

std::optional<std::size_t> BracketCatalog::find(const FactorizationBracket& phi) const
{
    if (phi.poset() != poset_) {
        return std::nullopt;
    }
    const auto it = index_.find(phi.table());
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::size_t BracketCatalog::all_right_index() const
{
    const auto idx = find(FactorizationBracket::all_right(poset_));
    if (!idx) {
        throw internal_consistency_error("catalog lacks the all-right bracket");
    }
    return *idx;
}

std::size_t BracketCatalog::all_left_index() const
{
    const auto idx = find(FactorizationBracket::all_left(poset_));
    if (!idx) {
        throw internal_consistency_error("catalog lacks the all-left bracket");
    }
    return *idx;
}

namespace {

class BracketSearch {
public:
    BracketSearch(const PosetPtr& poset, const EnumerationOptions& options)
        : poset_(poset), options_(options), start_(std::chrono::steady_clock::now())
    {
        for (std::size_t r = 0; r < poset->rel_count(); ++r) {
            if (!poset->rel(r).is_identity()) {
                order_.push_back(r);
            }
        }
        auto width = [&](std::size_t r) {
            const auto& p = poset->rel(r);
            return std::popcount(poset->up_set(p.src) & poset->down_set(p.dst));
        };
        std::stable_sort(order_.begin(), order_.end(),
                         [&](std::size_t x, std::size_t y) { return width(x) < width(y); });
    }

    std::vector<FactorizationBracket> run()
    {
        std::vector<Element> root(poset_->rel_count(), kUnset);
        for (Element x = 0; x < poset_->size(); ++x) {
            root[poset_->rel_index_unchecked(x, x)] = x;
        }
        // Expand a frontier of consistent prefixes to hand out to workers.
        std::vector<std::vector<Element>> frontier{root};
        std::size_t depth = 0;
        const std::size_t wanted = options_.jobs > 1 ? std::size_t{options_.jobs} * 16 : 1;
        while (depth < order_.size() && frontier.size() < wanted) {
            std::vector<std::vector<Element>> next;
            for (auto& table : frontier) {
                expand(table, depth, [&](const std::vector<Element>& t) { next.push_back(t); });
            }
            frontier = std::move(next);
            ++depth;
        }
        auto parts = parallel_chunks<std::vector<std::vector<Element>>>(
            frontier.size(), options_.jobs, [&](std::size_t begin, std::size_t end) {
                std::vector<std::vector<Element>> found;
                std::uint64_t nodes = 0;
                for (std::size_t i = begin; i < end; ++i) {
                    auto table = frontier[i];
                    dfs(table, depth, found, nodes);
                }
                return found;
            });
        std::vector<FactorizationBracket> out;
        for (auto& part : parts) {
            for (auto& table : part) {
                out.emplace_back(poset_, std::move(table));
            }
        }
        return out;
    }

private:
    template <typename Emit>
    void expand(std::vector<Element>& table, std::size_t depth, Emit emit) const
    {
        const std::size_t r = order_[depth];
        const auto& p = poset_->rel(r);
        const AxiomChecker checker(*poset_, table);
        for (ElementSet ms = poset_->up_set(p.src) & poset_->down_set(p.dst); ms != 0;
             ms &= ms - 1) {
            table[r] = static_cast<Element>(std::countr_zero(ms));
            if (checker.check_rel(r) == nullptr) {
                emit(table);
            }
        }
        table[r] = kUnset;
    }

    void dfs(std::vector<Element>& table, std::size_t depth,
             std::vector<std::vector<Element>>& found, std::uint64_t& nodes)
    {
        if ((++nodes & 0x3ff) == 0) {
            total_nodes_ += 0x400;
            check_budget();
        }
        if (depth == order_.size()) {
            found.push_back(table);
            ++total_found_;
            return;
        }
        const std::size_t r = order_[depth];
        const auto& p = poset_->rel(r);
        const AxiomChecker checker(*poset_, table);
        for (ElementSet ms = poset_->up_set(p.src) & poset_->down_set(p.dst); ms != 0;
             ms &= ms - 1) {
            table[r] = static_cast<Element>(std::countr_zero(ms));
            if (checker.check_rel(r) == nullptr) {
                dfs(table, depth + 1, found, nodes);
            }
        }
        table[r] = kUnset;
    }

    void check_budget() const
    {
        if (!options_.time_budget_seconds) {
            return;
        }
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
        if (elapsed.count() > *options_.time_budget_seconds) {
            throw resource_error("bracket enumeration exceeded its time budget of " +
                                 std::to_string(*options_.time_budget_seconds) + " s after " +
                                 std::to_string(total_nodes_.load()) + " search nodes with " +
                                 std::to_string(total_found_.load()) + " brackets found");
        }
    }

    PosetPtr poset_;
    EnumerationOptions options_;
    std::chrono::steady_clock::time_point start_;
    std::vector<std::size_t> order_;
    std::atomic<std::uint64_t> total_nodes_{0};
    std::atomic<std::uint64_t> total_found_{0};
};

} // namespace

BracketCatalog enumerate_brackets(const PosetPtr& poset, const EnumerationOptions& options)
{
    require_bounded(*poset);
    BracketSearch search(poset, options);
    return BracketCatalog(poset, search.run());
}

std::vector<FactorizationBracket> enumerate_brackets_naive(const PosetPtr& poset)
{
    const std::size_t rc = poset->rel_count();
    const double space = std::pow(static_cast<double>(poset->size()), static_cast<double>(rc));
    if (space > static_cast<double>(1u << 24)) {
        throw size_limit_error("naive bracket search space is too large");
    }
    std::vector<Element> table(rc, 0);
    std::vector<FactorizationBracket> out;
    const AxiomChecker checker(*poset, table);
    while (true) {
        if (!checker.check_all()) {
            out.emplace_back(poset, table);
        }
        std::size_t pos = 0;
        while (pos < rc && ++table[pos] == poset->size()) {
            table[pos] = 0;
            ++pos;
        }
        if (pos == rc) {
            break;
        }
    }
    canonical_sort(out);
    return out;
}

namespace {

std::optional<std::string> pair_axiom_violation(const FactorizationBracket& phi,
                                                const FactorizationBracket& psi)
{
    const auto& poset = *phi.poset();
    for (const auto& r : poset.rels()) {
        const Element x = r.src;
        const Element y = r.dst;
        if (psi(x, phi(x, y)) != phi(x, y)) {
            return "acyclic cofibration is not a cofibration at " + rel_text(poset, x, y);
        }
        if (phi(psi(x, y), y) != psi(x, y)) {
            return "acyclic fibration is not a fibration at " + rel_text(poset, x, y);
        }
    }
    for (const auto& r : poset.rels()) {
        const Element x = r.src;
        const Element z = r.dst;
        for (ElementSet ys = poset.up_set(x) & poset.down_set(z); ys != 0; ys &= ys - 1) {
            const auto y = static_cast<Element>(std::countr_zero(ys));
            const Element psi_xy = psi(x, y);
            const Element phi_yz = phi(y, z);
            if (phi(psi_xy, phi_yz) != psi(psi_xy, phi_yz)) {
                return "weak equivalences not composition closed at " + rel_text(poset, x, y) +
                       " then " + rel_text(poset, y, z);
            }
            const Element psi_yz = psi(y, z);
            if (phi(psi_xy, psi_yz) == psi(psi_xy, psi_yz) && phi(y, psi_yz) != psi_yz) {
                return "right cancellation fails at " + rel_text(poset, x, y) + " then " +
                       rel_text(poset, y, z);
            }
            const Element phi_xy = phi(x, y);
            if (phi(phi_xy, phi_yz) == psi(phi_xy, phi_yz) && psi(phi_xy, y) != phi_xy) {
                return "left cancellation fails at " + rel_text(poset, x, y) + " then " +
                       rel_text(poset, y, z);
            }
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<std::string> bracket_pair_violation(const BracketPair& pair)
{
    if (!pair.phi.poset() || pair.phi.poset() != pair.psi.poset()) {
        throw argument_error("bracket pair lives on different posets");
    }
    if (auto v = bracket_violation(pair.phi)) {
        return "phi: " + *v;
    }
    if (auto v = bracket_violation(pair.psi)) {
        return "psi: " + *v;
    }
    return pair_axiom_violation(pair.phi, pair.psi);
}

bool is_bracket_pair(const BracketPair& pair) { return !bracket_pair_violation(pair); }

ModelStructure derive_model_structure(const BracketPair& pair,
                                      std::optional<std::pair<std::size_t, std::size_t>> ids)
{
    const auto& poset_ptr = pair.phi.poset();
    const auto& poset = *poset_ptr;
    require_bounded(poset);
    ModelStructure ms;
    ms.pair = pair;
    ms.ids = ids;
    ms.acof = pair.phi.left_class();
    ms.fib = pair.phi.right_class();
    ms.cof = pair.psi.left_class();
    ms.afib = pair.psi.right_class();
    ms.we = poset.empty_class();
    for (std::size_t r = 0; r < poset.rel_count(); ++r) {
        if (pair.phi.at(r) == pair.psi.at(r)) {
            ms.we.insert(r);
        }
    }
    const Element top = *poset.top();
    const Element bottom = *poset.bottom();
    for (Element x = 0; x < poset.size(); ++x) {
        if (pair.phi(x, top) == x) {
            ms.fibrant |= ElementSet{1} << x;
        }
        if (pair.psi(bottom, x) == x) {
            ms.cofibrant |= ElementSet{1} << x;
        }
    }
    ms.bifibrant = ms.fibrant & ms.cofibrant;
    ms.replacement = associated_pair(ms);
    ms.flags = classify(ms);
    return ms;
}

std::optional<std::string> model_structure_violation(const FinitePoset& poset,
                                                     const MorphismClass& cof,
                                                     const MorphismClass& we,
                                                     const MorphismClass& fib)
{
    poset.require_same(cof);
    poset.require_same(we);
    poset.require_same(fib);
    const auto acof = cof & we;
    const auto afib = fib & we;
    if (!is_factorization_system(poset, acof, fib)) {
        return std::string("(acyclic cofibrations, fibrations) is not a factorization system");
    }
    if (!is_factorization_system(poset, cof, afib)) {
        return std::string("(cofibrations, acyclic fibrations) is not a factorization system");
    }
    if (!poset.identity_class().subset_of(we)) {
        return std::string("weak equivalences miss an identity");
    }
    for (const auto& r : poset.rels()) {
        for (ElementSet ys = poset.up_set(r.src) & poset.down_set(r.dst); ys != 0; ys &= ys - 1) {
            const auto y = static_cast<Element>(std::countr_zero(ys));
            const int count = static_cast<int>(we.contains(poset.rel_index_unchecked(r.src, y))) +
                              static_cast<int>(we.contains(poset.rel_index_unchecked(y, r.dst))) +
                              static_cast<int>(we.contains(poset.rel_index_unchecked(r.src, r.dst)));
            if (count == 2) {
                return "two-out-of-three fails on " + rel_text(poset, r.src, y) + " then " +
                       rel_text(poset, y, r.dst);
            }
        }
    }
    return std::nullopt;
}

ModelFlags classify(const ModelStructure& ms)
{
    const auto& poset = *ms.poset();
    ModelFlags flags;
    flags.strong = poset.is_sectile(ms.afib) && poset.is_retractile(ms.acof);
    const auto rank = poset.boolean_rank();
    flags.applicable = rank.has_value() && *rank <= kMaxMooreRank;
    if (flags.applicable && flags.strong) {
        const auto fibrant_family = family_from_closure(ms.replacement.F);
        const auto cofibrant_family = family_from_interior(ms.replacement.C);
        flags.topological = is_topology(fibrant_family) && is_topology(cofibrant_family);
        flags.matroidal = is_matroid(fibrant_family) && is_matroid(cofibrant_family);
        flags.geometric = is_geometry(fibrant_family) && is_geometry(cofibrant_family);
    }
    return flags;
}

ReplacementPair associated_pair(const ModelStructure& ms)
{
    const auto& poset_ptr = ms.poset();
    const auto& poset = *poset_ptr;
    require_bounded(poset);
    const Element top = *poset.top();
    const Element bottom = *poset.bottom();
    std::vector<Element> f(poset.size());
    std::vector<Element> c(poset.size());
    for (Element x = 0; x < poset.size(); ++x) {
        f[x] = ms.pair.phi(x, top);
        c[x] = ms.pair.psi(bottom, x);
    }
    return {ClosureOperator(poset_ptr, std::move(f)), InteriorOperator(poset_ptr, std::move(c))};
}

ModelCensus enumerate_model_structures(const BracketCatalog& catalog, unsigned jobs)
{
    ModelCensus census;
    census.catalog = catalog;
    const std::size_t count = catalog.size();
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            if (catalog[j].R.subset_of(catalog[i].R)) {
                census.localization_pairs.emplace_back(i, j);
            }
        }
    }
    const auto& pairs = census.localization_pairs;
    auto parts = parallel_chunks<std::vector<ModelStructure>>(
        pairs.size(), jobs, [&](std::size_t begin, std::size_t end) {
            std::vector<ModelStructure> found;
            for (std::size_t k = begin; k < end; ++k) {
                const auto [i, j] = pairs[k];
                const auto& phi = catalog[i].phi;
                const auto& psi = catalog[j].phi;
                if (!pair_axiom_violation(phi, psi)) {
                    found.push_back(derive_model_structure({phi, psi}, std::pair{i, j}));
                }
            }
            return found;
        });
    census.structures = flatten(std::move(parts));
    return census;
}

ModelCensus enumerate_model_structures(const PosetPtr& poset, const EnumerationOptions& options)
{
    return enumerate_model_structures(enumerate_brackets(poset, options), options.jobs);
}

std::optional<ReplacementPair> pair_from_objects(const PosetPtr& poset, ElementSet fibrant,
                                                 ElementSet cofibrant)
{
    require_bounded(*poset);
    auto F = closure_from_fixed_points(poset, fibrant);
    auto C = interior_from_fixed_points(poset, cofibrant);
    if (!F || !C) {
        return std::nullopt;
    }
    return ReplacementPair{std::move(*F), std::move(*C)};
}

bool exists_ms_with_objects(const PosetPtr& poset, ElementSet fibrant, ElementSet cofibrant)
{
    const auto pair = pair_from_objects(poset, fibrant, cofibrant);
    return pair && is_compatible(*pair);
}

bool exists_strong_ms_with_objects(const PosetPtr& poset, ElementSet fibrant,
                                   ElementSet cofibrant)
{
    const auto pair = pair_from_objects(poset, fibrant, cofibrant);
    return pair && is_strongly_compatible(*pair);
}

} // namespace mscensus
