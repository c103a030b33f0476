#include "mscensus/poset.hpp"

#include "mscensus/errors.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdio>
#include <mutex>
#include <numeric>

namespace mscensus {

struct FinitePoset::Private {};

namespace {

std::atomic<std::uint64_t> next_poset_id{1};

std::string pair_text(std::size_t a, std::size_t b)
{
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

} // namespace

std::string boolean_element_name(Element mask)
{
    std::string out = "{";
    bool first = true;
    for (unsigned i = 0; i < 32; ++i) {
        if ((mask >> i) & 1u) {
            if (!first) {
                out += ",";
            }
            out += std::to_string(i);
            first = false;
        }
    }
    out += "}";
    return out;
}

FinitePoset::FinitePoset(const Private&, std::vector<ElementSet> up, std::vector<std::string> names,
                         std::optional<unsigned> boolean_rank)
    : id_(next_poset_id.fetch_add(1)), up_(std::move(up)), boolean_rank_(boolean_rank),
      names_(std::move(names))
{
    const std::size_t n = up_.size();
    down_.assign(n, 0);
    for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
            if (leq(a, b)) {
                down_[b] |= ElementSet{1} << a;
            }
        }
    }

    for (Element a = 0; a < n; ++a) {
        if (up_[a] == all_elements()) {
            bottom_ = a;
        }
        if (down_[a] == all_elements()) {
            top_ = a;
        }
    }

    // Meets and joins, kept only when every pair has both.
    std::vector<Element> meet(n * n);
    std::vector<Element> join(n * n);
    bool lattice = n > 0;
    for (Element a = 0; a < n && lattice; ++a) {
        for (Element b = 0; b < n && lattice; ++b) {
            const ElementSet lower = down_[a] & down_[b];
            const ElementSet upper = up_[a] & up_[b];
            bool found_meet = false;
            bool found_join = false;
            for (Element g = 0; g < n; ++g) {
                if (((lower >> g) & 1u) && down_[g] == lower) {
                    meet[a * n + b] = g;
                    found_meet = true;
                }
                if (((upper >> g) & 1u) && up_[g] == upper) {
                    join[a * n + b] = g;
                    found_join = true;
                }
            }
            lattice = found_meet && found_join;
        }
    }
    if (lattice) {
        meet_ = std::move(meet);
        join_ = std::move(join);
    }

    // Ranks: process elements by increasing down-set size, which is a linear
    // extension of the order.
    std::vector<Element> order(n);
    std::iota(order.begin(), order.end(), Element{0});
    std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) {
        return std::popcount(down_[a]) < std::popcount(down_[b]);
    });
    rank_.assign(n, 0);
    for (Element a : order) {
        for (Element b = 0; b < n; ++b) {
            if (b != a && leq(b, a)) {
                rank_[a] = std::max(rank_[a], rank_[b] + 1);
            }
        }
    }

    rel_index_.assign(n * n, -1);
    for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
            if (leq(a, b)) {
                rel_index_[a * n + b] = static_cast<std::int32_t>(rels_.size());
                rels_.push_back({a, b});
            }
        }
    }
    if (rels_.size() > MorphismClass::kMaxWords * 64) {
        throw size_limit_error("poset has too many comparable pairs");
    }

    std::vector<Element> by_display(n);
    std::iota(by_display.begin(), by_display.end(), Element{0});
    std::stable_sort(by_display.begin(), by_display.end(),
                     [&](Element a, Element b) { return rank_[a] > rank_[b]; });
    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i) {
        position[by_display[i]] = i;
    }
    for (std::size_t r = 0; r < rels_.size(); ++r) {
        if (!rels_[r].is_identity()) {
            display_rel_order_.push_back(r);
        }
    }
    std::stable_sort(display_rel_order_.begin(), display_rel_order_.end(),
                     [&](std::size_t x, std::size_t y) {
                         const auto& rx = rels_[x];
                         const auto& ry = rels_[y];
                         if (position[rx.dst] != position[ry.dst]) {
                             return position[rx.dst] < position[ry.dst];
                         }
                         return position[rx.src] < position[ry.src];
                     });

    const std::size_t rc = rels_.size();
    lifts_against_.assign(rc, MorphismClass(id_, rc));
    lifted_by_.assign(rc, MorphismClass(id_, rc));
    for (std::size_t i = 0; i < rc; ++i) {
        for (std::size_t p = 0; p < rc; ++p) {
            if (has_lifting(rels_[i], rels_[p])) {
                lifts_against_[p].insert(i);
                lifted_by_[i].insert(p);
            }
        }
    }
}

ElementSet FinitePoset::all_elements() const
{
    return size() == 64 ? ~ElementSet{0} : (ElementSet{1} << size()) - 1;
}

Element FinitePoset::meet(Element a, Element b) const
{
    if (!has_meets_joins()) {
        throw unsupported_structure_error("poset has no meets");
    }
    return meet_[a * size() + b];
}

Element FinitePoset::join(Element a, Element b) const
{
    if (!has_meets_joins()) {
        throw unsupported_structure_error("poset has no joins");
    }
    return join_[a * size() + b];
}

Element FinitePoset::complement(Element a) const
{
    if (!boolean_rank_) {
        throw unsupported_structure_error("complement requires a Boolean algebra");
    }
    return static_cast<Element>(~a & (size() - 1));
}

std::optional<std::size_t> FinitePoset::rel_index(Element src, Element dst) const
{
    if (src >= size() || dst >= size()) {
        return std::nullopt;
    }
    const auto idx = rel_index_[src * size() + dst];
    if (idx < 0) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(idx);
}

std::string FinitePoset::hash_hex() const
{
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xffu;
            h *= 1099511628211ull;
        }
    };
    mix(size());
    for (ElementSet u : up_) {
        mix(u);
    }
    for (const auto& name : names_) {
        for (char c : name) {
            h ^= static_cast<unsigned char>(c);
            h *= 1099511628211ull;
        }
        mix(0);
    }
    std::array<char, 17> buf{};
    std::snprintf(buf.data(), buf.size(), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf.data());
}

MorphismClass FinitePoset::empty_class() const { return MorphismClass(id_, rels_.size()); }

MorphismClass FinitePoset::all_class() const { return empty_class().complement(); }

MorphismClass FinitePoset::identity_class() const
{
    MorphismClass out = empty_class();
    for (Element a = 0; a < size(); ++a) {
        out.insert(rel_index_unchecked(a, a));
    }
    return out;
}

MorphismClass FinitePoset::class_of(const std::vector<RelPair>& pairs) const
{
    MorphismClass out = empty_class();
    for (const auto& p : pairs) {
        const auto idx = rel_index(p.src, p.dst);
        if (!idx) {
            throw argument_error("not a comparable pair: " + pair_text(p.src, p.dst));
        }
        out.insert(*idx);
    }
    return out;
}

bool FinitePoset::has_lifting(RelPair i, RelPair p) const
{
    if (std::max({i.src, i.dst, p.src, p.dst}) >= size()) {
        throw argument_error("pair does not belong to this poset");
    }
    return !(leq(i.src, p.src) && leq(i.dst, p.dst)) || leq(i.dst, p.src);
}

void FinitePoset::require_same(const MorphismClass& m) const
{
    if (m.poset_id() != id_ || m.rel_count() != rels_.size()) {
        throw argument_error("morphism class belongs to a different poset");
    }
}

MorphismClass FinitePoset::proj(const MorphismClass& m) const
{
    require_same(m);
    MorphismClass out = all_class();
    m.for_each([&](std::size_t p) { out &= lifts_against_[p]; });
    return out;
}

MorphismClass FinitePoset::inj(const MorphismClass& m) const
{
    require_same(m);
    MorphismClass out = all_class();
    m.for_each([&](std::size_t i) { out &= lifted_by_[i]; });
    return out;
}

bool FinitePoset::is_retractile(const MorphismClass& m) const
{
    return class_predicates(m).retractile;
}

bool FinitePoset::is_sectile(const MorphismClass& m) const
{
    return class_predicates(m).sectile;
}

ClassPredicates FinitePoset::class_predicates(const MorphismClass& m) const
{
    require_same(m);
    ClassPredicates out{true, true, true, true, true};
    for (Element a = 0; a < size(); ++a) {
        if (!m.contains(rel_index_unchecked(a, a))) {
            out.contains_identities = false;
        }
    }
    for (const auto& r : rels_) {
        const bool outer = m.contains(rel_index_unchecked(r.src, r.dst));
        ElementSet between = up_[r.src] & down_[r.dst];
        while (between != 0) {
            const auto y = static_cast<Element>(std::countr_zero(between));
            between &= between - 1;
            const bool first = m.contains(rel_index_unchecked(r.src, y));
            const bool second = m.contains(rel_index_unchecked(y, r.dst));
            if (outer && !first) {
                out.retractile = false;
            }
            if (outer && !second) {
                out.sectile = false;
            }
            if (first && second && !outer) {
                out.composition_closed = false;
            }
        }
    }
    out.decomposable = out.retractile && out.sectile;
    return out;
}

PosetPtr boolean_algebra(unsigned n)
{
    if (n > FinitePoset::kMaxBooleanRank) {
        throw size_limit_error("Boolean algebra rank " + std::to_string(n) + " exceeds " +
                               std::to_string(FinitePoset::kMaxBooleanRank));
    }
    static std::mutex mutex;
    static std::array<PosetPtr, FinitePoset::kMaxBooleanRank + 1> cache;
    std::lock_guard lock(mutex);
    if (!cache[n]) {
        const std::size_t size = std::size_t{1} << n;
        std::vector<ElementSet> up(size, 0);
        std::vector<std::string> names(size);
        for (Element a = 0; a < size; ++a) {
            for (Element b = 0; b < size; ++b) {
                if ((a & ~b) == 0) {
                    up[a] |= ElementSet{1} << b;
                }
            }
            names[a] = boolean_element_name(a);
        }
        cache[n] = std::make_shared<const FinitePoset>(FinitePoset::Private{}, std::move(up),
                                                       std::move(names), n);
    }
    return cache[n];
}

namespace {

void check_square(const std::vector<std::vector<bool>>& leq)
{
    const std::size_t n = leq.size();
    if (n == 0) {
        throw validation_error("poset must have at least one element");
    }
    if (n > FinitePoset::kMaxElements) {
        throw size_limit_error("poset has more than 64 elements");
    }
    for (const auto& row : leq) {
        if (row.size() != n) {
            throw validation_error("relation matrix is not square");
        }
    }
}

void check_preorder(const std::vector<std::vector<bool>>& leq)
{
    const std::size_t n = leq.size();
    for (std::size_t a = 0; a < n; ++a) {
        if (!leq[a][a]) {
            throw validation_error("relation is not reflexive at " + pair_text(a, a));
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (!leq[a][b]) {
                continue;
            }
            for (std::size_t c = 0; c < n; ++c) {
                if (leq[b][c] && !leq[a][c]) {
                    throw validation_error("relation is not transitive: " + pair_text(a, b) +
                                           " and " + pair_text(b, c) + " without " +
                                           pair_text(a, c));
                }
            }
        }
    }
}

std::vector<std::string> default_names(std::size_t n, std::vector<std::string> names)
{
    if (names.empty()) {
        names.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            names[i] = std::to_string(i);
        }
    }
    if (names.size() != n) {
        throw validation_error("element name count does not match relation size");
    }
    return names;
}

} // namespace

PosetPtr poset_from_relation(const std::vector<std::vector<bool>>& leq,
                             std::vector<std::string> names)
{
    check_square(leq);
    check_preorder(leq);
    const std::size_t n = leq.size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (leq[a][b] && leq[b][a]) {
                throw validation_error("relation is not antisymmetric at " + pair_text(a, b));
            }
        }
    }
    std::vector<ElementSet> up(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (leq[a][b]) {
                up[a] |= ElementSet{1} << b;
            }
        }
    }
    return std::make_shared<const FinitePoset>(FinitePoset::Private{}, std::move(up),
                                               default_names(n, std::move(names)), std::nullopt);
}

SkeletonResult skeletonize(const std::vector<std::vector<bool>>& raw,
                           const std::vector<std::string>& names)
{
    check_square(raw);
    check_preorder(raw);
    const std::size_t n = raw.size();
    const auto raw_names = default_names(n, names);

    SkeletonResult out;
    out.class_of.assign(n, 0);
    std::vector<std::size_t> representative;
    for (std::size_t a = 0; a < n; ++a) {
        bool placed = false;
        for (std::size_t c = 0; c < representative.size(); ++c) {
            const std::size_t r = representative[c];
            if (raw[a][r] && raw[r][a]) {
                out.class_of[a] = static_cast<Element>(c);
                placed = true;
                break;
            }
        }
        if (!placed) {
            out.class_of[a] = static_cast<Element>(representative.size());
            representative.push_back(a);
        }
    }
    const std::size_t m = representative.size();
    std::vector<std::vector<bool>> quotient(m, std::vector<bool>(m, false));
    std::vector<std::string> quotient_names(m);
    for (std::size_t c = 0; c < m; ++c) {
        quotient_names[c] = raw_names[representative[c]];
        for (std::size_t d = 0; d < m; ++d) {
            quotient[c][d] = raw[representative[c]][representative[d]];
        }
    }
    out.poset = poset_from_relation(quotient, std::move(quotient_names));
    return out;
}

std::vector<std::vector<bool>> reflexive_transitive_closure(
    std::size_t size, const std::vector<std::pair<std::size_t, std::size_t>>& pairs)
{
    std::vector<std::vector<bool>> leq(size, std::vector<bool>(size, false));
    for (std::size_t a = 0; a < size; ++a) {
        leq[a][a] = true;
    }
    for (const auto& [a, b] : pairs) {
        if (a >= size || b >= size) {
            throw validation_error("relation pair " + pair_text(a, b) + " is out of range");
        }
        leq[a][b] = true;
    }
    for (std::size_t k = 0; k < size; ++k) {
        for (std::size_t a = 0; a < size; ++a) {
            if (!leq[a][k]) {
                continue;
            }
            for (std::size_t b = 0; b < size; ++b) {
                if (leq[k][b]) {
                    leq[a][b] = true;
                }
            }
        }
    }
    return leq;
}

} // namespace mscensus
