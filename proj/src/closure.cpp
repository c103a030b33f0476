#include "mscensus/closure.hpp"

#include "mscensus/errors.hpp"

#include <algorithm>
#include <bit>

namespace mscensus {

namespace {

void check_table(const PosetPtr& poset, const std::vector<Element>& table, bool extensive)
{
    if (!poset) {
        throw argument_error("operator has no poset");
    }
    const std::size_t n = poset->size();
    if (table.size() != n) {
        throw validation_error("operator table size does not match the poset");
    }
    for (Element x = 0; x < n; ++x) {
        const Element fx = table[x];
        if (fx >= n) {
            throw validation_error("operator value out of range at element " + std::to_string(x));
        }
        if (extensive ? !poset->leq(x, fx) : !poset->leq(fx, x)) {
            throw validation_error(std::string(extensive ? "not extensive" : "not intensive") +
                                   " at element " + std::to_string(x));
        }
        if (table[fx] != fx) {
            throw validation_error("not idempotent at element " + std::to_string(x));
        }
    }
    for (const auto& r : poset->rels()) {
        if (!poset->leq(table[r.src], table[r.dst])) {
            throw validation_error("not monotone on (" + std::to_string(r.src) + ", " +
                                   std::to_string(r.dst) + ")");
        }
    }
}

ElementSet fixed_of(const std::vector<Element>& table)
{
    ElementSet out = 0;
    for (Element x = 0; x < table.size(); ++x) {
        if (table[x] == x) {
            out |= ElementSet{1} << x;
        }
    }
    return out;
}

template <typename Op>
MorphismClass inverted(const Op& op)
{
    const auto& poset = *op.poset();
    MorphismClass out = poset.empty_class();
    for (std::size_t r = 0; r < poset.rel_count(); ++r) {
        const auto& p = poset.rel(r);
        if (op(p.src) == op(p.dst)) {
            out.insert(r);
        }
    }
    return out;
}

PosetPtr require_boolean(unsigned n)
{
    if (n > kMaxMooreRank) {
        throw size_limit_error("Moore family rank " + std::to_string(n) + " exceeds " +
                               std::to_string(kMaxMooreRank));
    }
    return boolean_algebra(n);
}

} // namespace

ClosureOperator::ClosureOperator(PosetPtr poset, std::vector<Element> table)
    : poset_(std::move(poset)), table_(std::move(table))
{
    check_table(poset_, table_, true);
}

ClosureOperator ClosureOperator::identity(PosetPtr poset)
{
    std::vector<Element> table(poset->size());
    for (Element x = 0; x < table.size(); ++x) {
        table[x] = x;
    }
    return ClosureOperator(std::move(poset), std::move(table));
}

ClosureOperator ClosureOperator::constant_top(PosetPtr poset)
{
    if (!poset->top()) {
        throw unsupported_structure_error("poset has no top element");
    }
    std::vector<Element> table(poset->size(), *poset->top());
    return ClosureOperator(std::move(poset), std::move(table));
}

ElementSet ClosureOperator::fixed_points() const { return fixed_of(table_); }

InteriorOperator::InteriorOperator(PosetPtr poset, std::vector<Element> table)
    : poset_(std::move(poset)), table_(std::move(table))
{
    check_table(poset_, table_, false);
}

InteriorOperator InteriorOperator::identity(PosetPtr poset)
{
    std::vector<Element> table(poset->size());
    for (Element x = 0; x < table.size(); ++x) {
        table[x] = x;
    }
    return InteriorOperator(std::move(poset), std::move(table));
}

InteriorOperator InteriorOperator::constant_bottom(PosetPtr poset)
{
    if (!poset->bottom()) {
        throw unsupported_structure_error("poset has no bottom element");
    }
    std::vector<Element> table(poset->size(), *poset->bottom());
    return InteriorOperator(std::move(poset), std::move(table));
}

ElementSet InteriorOperator::fixed_points() const { return fixed_of(table_); }

std::vector<Element> MooreFamily::sets() const
{
    std::vector<Element> out;
    for (std::uint64_t bits = closed; bits != 0; bits &= bits - 1) {
        out.push_back(static_cast<Element>(std::countr_zero(bits)));
    }
    return out;
}

void validate_moore_family(const MooreFamily& m)
{
    if (m.n > kMaxMooreRank) {
        throw size_limit_error("Moore family rank exceeds 5");
    }
    const std::uint64_t universe = (std::uint64_t{1} << (1u << m.n)) - 1;
    if ((m.closed & ~universe) != 0) {
        throw validation_error("Moore family contains a set outside the ground set");
    }
    if (!m.contains(m.ground())) {
        throw validation_error("Moore family does not contain the ground set");
    }
    const auto sets = m.sets();
    for (Element a : sets) {
        for (Element b : sets) {
            if (!m.contains(a & b)) {
                throw validation_error("Moore family is not closed under intersection: " +
                                       boolean_element_name(a) + " and " +
                                       boolean_element_name(b));
            }
        }
    }
}

std::vector<MooreFamily> enumerate_moore_families(unsigned n)
{
    require_boolean(n);
    const Element ground = static_cast<Element>((1u << n) - 1);
    std::vector<MooreFamily> out;

    // Masks are decided in descending order; the top is always included.
    // Including a mask forces its intersections with every earlier member,
    // all of which are numerically smaller and still undecided.
    struct Frame {
        std::uint64_t family;
        std::uint64_t forced;
    };
    auto include = [](std::uint64_t family, std::uint64_t forced, Element k) {
        for (std::uint64_t bits = family; bits != 0; bits &= bits - 1) {
            const auto t = static_cast<Element>(std::countr_zero(bits));
            forced |= std::uint64_t{1} << (k & t);
        }
        return Frame{family | (std::uint64_t{1} << k), forced};
    };

    auto recurse = [&](auto&& self, Frame frame, int k) -> void {
        if (k < 0) {
            out.push_back({n, frame.family});
            return;
        }
        const auto mask = static_cast<Element>(k);
        if ((frame.forced >> mask) & 1u) {
            self(self, include(frame.family, frame.forced, mask), k - 1);
            return;
        }
        self(self, frame, k - 1);
        self(self, include(frame.family, frame.forced, mask), k - 1);
    };
    recurse(recurse, include(0, 0, ground), static_cast<int>(ground) - 1);
    std::sort(out.begin(), out.end());
    return out;
}

ClosureOperator closure_from_family(const MooreFamily& m)
{
    validate_moore_family(m);
    const auto poset = require_boolean(m.n);
    const auto sets = m.sets();
    std::vector<Element> table(poset->size());
    for (Element u = 0; u < table.size(); ++u) {
        Element cl = m.ground();
        for (Element s : sets) {
            if ((u & ~s) == 0) {
                cl &= s;
            }
        }
        table[u] = cl;
    }
    return ClosureOperator(poset, std::move(table));
}

MooreFamily family_from_closure(const ClosureOperator& f)
{
    const auto rank = f.poset()->boolean_rank();
    if (!rank || *rank > kMaxMooreRank) {
        throw unsupported_structure_error("Moore families need a Boolean algebra of rank <= 5");
    }
    return MooreFamily{*rank, f.fixed_points()};
}

InteriorOperator dual_interior(const MooreFamily& m)
{
    const auto cl = closure_from_family(m);
    const auto& poset = *cl.poset();
    std::vector<Element> table(poset.size());
    for (Element u = 0; u < table.size(); ++u) {
        table[u] = poset.complement(cl(poset.complement(u)));
    }
    return InteriorOperator(cl.poset(), std::move(table));
}

MooreFamily family_from_interior(const InteriorOperator& c)
{
    const auto& poset = *c.poset();
    const auto rank = poset.boolean_rank();
    if (!rank || *rank > kMaxMooreRank) {
        throw unsupported_structure_error("Moore families need a Boolean algebra of rank <= 5");
    }
    MooreFamily out{*rank, 0};
    for (Element u = 0; u < poset.size(); ++u) {
        if (c(u) == u) {
            out.closed |= std::uint64_t{1} << poset.complement(u);
        }
    }
    return out;
}

bool is_topology(const MooreFamily& m)
{
    validate_moore_family(m);
    if (!m.contains(0)) {
        return false;
    }
    const auto sets = m.sets();
    for (Element a : sets) {
        for (Element b : sets) {
            if (!m.contains(a | b)) {
                return false;
            }
        }
    }
    return true;
}

bool is_matroid(const MooreFamily& m)
{
    const auto cl = closure_from_family(m);
    const Element size = static_cast<Element>(1u << m.n);
    for (Element a = 0; a < size; ++a) {
        const Element cla = cl(a);
        for (unsigned x = 0; x < m.n; ++x) {
            const Element bx = Element{1} << x;
            if ((cla & bx) != 0) {
                continue;
            }
            for (unsigned y = 0; y < m.n; ++y) {
                const Element by = Element{1} << y;
                if ((cl(a | by) & bx) != 0 && (cl(a | bx) & by) == 0) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_geometry(const MooreFamily& m)
{
    if (!is_matroid(m) || !m.contains(0)) {
        return false;
    }
    for (unsigned x = 0; x < m.n; ++x) {
        if (!m.contains(Element{1} << x)) {
            return false;
        }
    }
    return true;
}

MorphismClass inverted_class(const ClosureOperator& f) { return inverted(f); }

MorphismClass inverted_class(const InteriorOperator& c) { return inverted(c); }

std::optional<ClosureOperator> closure_from_fixed_points(const PosetPtr& poset, ElementSet fixed)
{
    std::vector<Element> table(poset->size());
    for (Element x = 0; x < table.size(); ++x) {
        const ElementSet candidates = poset->up_set(x) & fixed;
        bool found = false;
        for (ElementSet bits = candidates; bits != 0; bits &= bits - 1) {
            const auto c = static_cast<Element>(std::countr_zero(bits));
            if ((poset->up_set(c) & candidates) == candidates) {
                table[x] = c;
                found = true;
                break;
            }
        }
        if (!found) {
            return std::nullopt;
        }
    }
    return ClosureOperator(poset, std::move(table));
}

std::optional<InteriorOperator> interior_from_fixed_points(const PosetPtr& poset, ElementSet fixed)
{
    std::vector<Element> table(poset->size());
    for (Element x = 0; x < table.size(); ++x) {
        const ElementSet candidates = poset->down_set(x) & fixed;
        bool found = false;
        for (ElementSet bits = candidates; bits != 0; bits &= bits - 1) {
            const auto c = static_cast<Element>(std::countr_zero(bits));
            if ((poset->down_set(c) & candidates) == candidates) {
                table[x] = c;
                found = true;
                break;
            }
        }
        if (!found) {
            return std::nullopt;
        }
    }
    return InteriorOperator(poset, std::move(table));
}

} // namespace mscensus
