#include "oracle.hpp"

#include "mscensus/closure.hpp"
#include "mscensus/errors.hpp"

#include <doctest.h>

#include <set>

using namespace mscensus;

namespace {

std::set<std::vector<Element>> tables(const std::vector<oracle::Table>& ts)
{
    std::set<std::vector<Element>> out;
    for (const auto& t : ts) {
        out.insert(std::vector<Element>(t.begin(), t.end()));
    }
    return out;
}

} // namespace

TEST_SUITE("closure")
{
    TEST_CASE("moore family counts")
    {
        const std::size_t expected[] = {1, 2, 7, 61, 2480};
        for (unsigned n = 0; n <= 4; ++n) {
            const auto families = enumerate_moore_families(n);
            CHECK(families.size() == expected[n]);
            CHECK(std::is_sorted(families.begin(), families.end()));
            CHECK(std::adjacent_find(families.begin(), families.end()) == families.end());
        }
        CHECK_THROWS_AS(enumerate_moore_families(6), size_limit_error);
    }

    TEST_CASE("moore families match the oracle")
    {
        for (unsigned n = 0; n <= 4; ++n) {
            std::vector<std::uint64_t> ours;
            for (const auto& m : enumerate_moore_families(n)) {
                ours.push_back(m.closed);
            }
            CHECK(ours == oracle::moore_families(n));
        }
    }

    TEST_CASE("topology counts")
    {
        const std::size_t expected[] = {1, 1, 4, 29, 355};
        for (unsigned n = 0; n <= 4; ++n) {
            std::size_t count = 0;
            for (const auto& m : enumerate_moore_families(n)) {
                const bool t = is_topology(m);
                CHECK(t == oracle::topology(n, m.closed));
                count += t;
            }
            CHECK(count == expected[n]);
        }
    }

    TEST_CASE("matroid and geometry counts")
    {
        const std::size_t matroids[] = {1, 2, 5, 16};
        const std::size_t geometries[] = {1, 1, 1, 2};
        for (unsigned n = 0; n <= 3; ++n) {
            std::size_t m_count = 0;
            std::size_t g_count = 0;
            for (const auto& m : enumerate_moore_families(n)) {
                CHECK(is_matroid(m) == oracle::matroid(n, m.closed));
                CHECK(is_geometry(m) == oracle::geometry(n, m.closed));
                m_count += is_matroid(m);
                g_count += is_geometry(m);
            }
            CHECK(m_count == matroids[n]);
            CHECK(g_count == geometries[n]);
        }
    }

    TEST_CASE("small examples")
    {
        const MooreFamily indiscrete{2, (1u << 0) | (1u << 3)};
        const MooreFamily only_top{2, 1u << 3};
        const MooreFamily full{2, 0xF};
        CHECK(is_topology(indiscrete));
        CHECK(is_topology(full));
        CHECK_FALSE(is_topology(only_top));
        CHECK(is_matroid(indiscrete));
        CHECK(is_matroid(full));
        CHECK(is_geometry(full));
        CHECK_FALSE(is_geometry(indiscrete));

        const auto P = boolean_algebra(2);
        CHECK(closure_from_family(only_top) == ClosureOperator::constant_top(P));
        CHECK(closure_from_family(full) == ClosureOperator::identity(P));
        CHECK(dual_interior(full) == InteriorOperator::identity(P));
        CHECK(dual_interior(only_top) == InteriorOperator::constant_bottom(P));
        CHECK_THROWS_AS(validate_moore_family(MooreFamily{2, 0b0110}), validation_error);
        CHECK_THROWS_AS(validate_moore_family(MooreFamily{2, 0b0111}), validation_error);
    }

    TEST_CASE("closure operators are exactly the oracle's")
    {
        for (unsigned n = 0; n <= 3; ++n) {
            const auto P = boolean_algebra(n);
            const oracle::Lattice O(n);
            std::set<std::vector<Element>> ours;
            std::set<std::vector<Element>> interiors;
            for (const auto& m : enumerate_moore_families(n)) {
                ours.insert(closure_from_family(m).table());
                interiors.insert(dual_interior(m).table());
            }
            CHECK(ours == tables(oracle::closure_operators(O)));
            CHECK(interiors == tables(oracle::interior_operators(O)));
        }
    }

    TEST_CASE("family and closure round trips")
    {
        for (unsigned n = 0; n <= 3; ++n) {
            for (const auto& m : enumerate_moore_families(n)) {
                const auto cl = closure_from_family(m);
                CHECK(family_from_closure(cl) == m);
                CHECK(closure_from_family(family_from_closure(cl)) == cl);
                CHECK(family_from_interior(dual_interior(m)) == m);
                CHECK(closure_from_fixed_points(cl.poset(), cl.fixed_points()) == cl);
                const auto in = dual_interior(m);
                CHECK(interior_from_fixed_points(in.poset(), in.fixed_points()) == in);
            }
        }
    }

    TEST_CASE("operator validation")
    {
        const auto P = boolean_algebra(1);
        CHECK_THROWS_AS(ClosureOperator(P, {0, 0}), validation_error);
        CHECK_THROWS_AS(InteriorOperator(P, {1, 1}), validation_error);
        CHECK_THROWS_AS(ClosureOperator(P, {1}), validation_error);
        CHECK_NOTHROW(ClosureOperator(P, {1, 1}));
        const auto chain = boolean_algebra(2);
        // Extensive but not monotone.
        CHECK_THROWS_AS(ClosureOperator(chain, {1, 3, 2, 3}), validation_error);
        CHECK_FALSE(closure_from_fixed_points(chain, 0b0110).has_value());
    }

    TEST_CASE("inverted classes")
    {
        const auto P = boolean_algebra(2);
        CHECK(inverted_class(ClosureOperator::identity(P)) == P->identity_class());
        CHECK(inverted_class(ClosureOperator::constant_top(P)) == P->all_class());
        CHECK(inverted_class(InteriorOperator::constant_bottom(P)) == P->all_class());

        // Indiscrete topology {{}, {0,1}}: F({}) = {}, every other subset closes to the top.
        const auto F = closure_from_family(MooreFamily{2, 0b1001});
        CHECK(F.table() == std::vector<Element>{0, 3, 3, 3});
        const auto I = inverted_class(F);
        CHECK(I == P->class_of({{0, 0}, {1, 1}, {1, 3}, {2, 2}, {2, 3}, {3, 3}}));
    }

    TEST_CASE("inverted classes of closure operators are decomposable")
    {
        for (unsigned n = 0; n <= 3; ++n) {
            const auto P = boolean_algebra(n);
            for (const auto& m : enumerate_moore_families(n)) {
                const auto flags = P->class_predicates(inverted_class(closure_from_family(m)));
                CHECK(flags.decomposable);
                CHECK(flags.composition_closed);
                const auto in_flags = P->class_predicates(inverted_class(dual_interior(m)));
                CHECK(in_flags.decomposable);
            }
        }
    }

    TEST_CASE("topological closures preserve finite joins")
    {
        for (unsigned n = 0; n <= 4; ++n) {
            const auto P = boolean_algebra(n);
            for (const auto& m : enumerate_moore_families(n)) {
                if (!is_topology(m)) {
                    continue;
                }
                const auto F = closure_from_family(m);
                CHECK(F(0) == 0);
                for (Element a = 0; a < P->size(); ++a) {
                    for (Element b = 0; b < P->size(); ++b) {
                        CHECK(F(a | b) == (F(a) | F(b)));
                    }
                }
            }
        }
    }

    TEST_CASE("interiors are intensive monotone idempotent on a 2-set")
    {
        const auto P = boolean_algebra(2);
        for (const auto& m : enumerate_moore_families(2)) {
            const auto in = dual_interior(m);
            for (Element a = 0; a < 4; ++a) {
                CHECK(P->leq(in(a), a));
                CHECK(in(in(a)) == in(a));
                for (Element b = 0; b < 4; ++b) {
                    if (P->leq(a, b)) {
                        CHECK(P->leq(in(a), in(b)));
                    }
                }
            }
        }
    }

    TEST_CASE("pullback-stable classes and inverted maps")
    {
        // For G and F closure operators on P(2), with M = inj(I_F):
        // I_G and proj(I_G and M) is contained in proj(M).
        const auto P = boolean_algebra(2);
        const auto families = enumerate_moore_families(2);
        for (const auto& g : families) {
            const auto IG = inverted_class(closure_from_family(g));
            for (const auto& f : families) {
                const auto M = P->inj(inverted_class(closure_from_family(f)));
                CHECK((IG & P->proj(IG & M)).subset_of(P->proj(M)));
            }
        }
    }
}
