#include "oracle.hpp"

#include "mscensus/errors.hpp"
#include "mscensus/factorization.hpp"
#include "mscensus/poset.hpp"

#include <doctest.h>

using namespace mscensus;

TEST_SUITE("poset")
{
    TEST_CASE("boolean algebra sizes")
    {
        CHECK(boolean_algebra(0)->size() == 1);
        CHECK(boolean_algebra(0)->rel_count() == 1);
        CHECK(boolean_algebra(2)->size() == 4);
        CHECK(boolean_algebra(2)->rel_count() == 9);
        CHECK(boolean_algebra(3)->size() == 8);
        CHECK(boolean_algebra(3)->rel_count() == 27);
        CHECK(boolean_algebra(3) == boolean_algebra(3));
        CHECK_THROWS_AS(boolean_algebra(7), size_limit_error);
    }

    TEST_CASE("boolean algebra lattice operations")
    {
        const auto P = boolean_algebra(3);
        CHECK(P->bottom() == Element{0});
        CHECK(P->top() == Element{7});
        CHECK(P->is_boolean());
        for (Element a = 0; a < 8; ++a) {
            for (Element b = 0; b < 8; ++b) {
                CHECK(P->leq(a, b) == ((a & ~b) == 0));
                CHECK(P->meet(a, b) == (a & b));
                CHECK(P->join(a, b) == (a | b));
            }
            CHECK(P->complement(a) == (7u & ~a));
        }
        CHECK(P->element_name(5) == "{0,2}");
        CHECK(P->element_name(0) == "{}");
    }

    TEST_CASE("rels are lexicographic")
    {
        const auto P = boolean_algebra(2);
        const std::vector<RelPair> expected{{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1},
                                            {1, 3}, {2, 2}, {2, 3}, {3, 3}};
        REQUIRE(P->rels().size() == expected.size());
        for (std::size_t i = 0; i < expected.size(); ++i) {
            CHECK(P->rel(i) == expected[i]);
            CHECK(P->rel_index(expected[i].src, expected[i].dst) == i);
        }
        CHECK_FALSE(P->rel_index(1, 2).has_value());
    }

    TEST_CASE("relation validation and skeleton")
    {
        using Matrix = std::vector<std::vector<bool>>;
        CHECK_THROWS_AS(poset_from_relation(Matrix{{true, true}, {true, true}}), validation_error);
        CHECK_THROWS_AS(poset_from_relation(Matrix{{false, false}, {false, true}}),
                        validation_error);
        const Matrix chain{{true, true, true}, {false, true, true}, {false, false, true}};
        const auto identical = skeletonize(chain);
        CHECK(identical.poset->size() == 3);
        CHECK(identical.class_of == std::vector<Element>{0, 1, 2});

        const auto pair = skeletonize(Matrix{{true, true}, {true, true}});
        CHECK(pair.poset->size() == 1);

        const auto cycle = skeletonize(reflexive_transitive_closure(3, {{0, 1}, {1, 2}, {2, 0}}));
        CHECK(cycle.poset->size() == 1);
        CHECK(cycle.class_of == std::vector<Element>{0, 0, 0});

        CHECK_THROWS_AS(skeletonize(Matrix{{true, true, false}, {false, true, true},
                                           {false, false, true}}),
                        validation_error);
        CHECK_THROWS_AS(skeletonize(Matrix{{false}}), validation_error);
    }

    TEST_CASE("lifting examples")
    {
        const auto P = boolean_algebra(2);
        CHECK_FALSE(P->has_lifting({0, 1}, {2, 3}));
        CHECK(P->has_lifting({0, 1}, {1, 3}));
        for (const auto& p : P->rels()) {
            for (Element x = 0; x < 4; ++x) {
                CHECK(P->has_lifting({x, x}, p));
                CHECK(P->has_lifting(p, {x, x}));
            }
        }
    }

    TEST_CASE("lifting matches the direct definition")
    {
        for (unsigned n = 0; n <= 3; ++n) {
            const auto P = boolean_algebra(n);
            for (const auto& i : P->rels()) {
                for (const auto& p : P->rels()) {
                    CHECK(P->has_lifting(i, p) == oracle::lifts({i.src, i.dst}, {p.src, p.dst}));
                }
            }
        }
    }

    TEST_CASE("proj and inj of the extreme classes")
    {
        for (unsigned n = 0; n <= 3; ++n) {
            const auto P = boolean_algebra(n);
            CHECK(P->inj(P->all_class()) == P->identity_class());
            CHECK(P->proj(P->all_class()) == P->identity_class());
            CHECK(P->proj(P->identity_class()) == P->all_class());
            CHECK(P->inj(P->identity_class()) == P->all_class());
            CHECK(P->proj(P->empty_class()) == P->all_class());
        }
    }

    TEST_CASE("proj and inj agree with the oracle on every class of P(2)")
    {
        const auto P = boolean_algebra(2);
        const oracle::Lattice O(2);
        for (unsigned bits = 0; bits < 512; ++bits) {
            auto m = P->empty_class();
            oracle::Class c(9);
            for (std::size_t r = 0; r < 9; ++r) {
                if ((bits >> r) & 1u) {
                    m.insert(r);
                    c[r] = true;
                }
            }
            const auto inj = P->inj(m);
            const auto proj = P->proj(m);
            const auto right = oracle::right_of(O, c);
            const auto left = oracle::left_of(O, c);
            for (std::size_t r = 0; r < 9; ++r) {
                CHECK(inj.contains(r) == right[r]);
                CHECK(proj.contains(r) == left[r]);
            }
            CHECK(P->proj(P->inj(P->proj(m))) == proj);
            CHECK(P->inj(P->proj(P->inj(m))) == inj);
        }
    }

    TEST_CASE("proj and inj are antitone")
    {
        const auto P = boolean_algebra(2);
        for (unsigned a = 0; a < 512; a += 7) {
            for (unsigned b = 0; b < 512; b += 11) {
                auto m = P->empty_class();
                auto m2 = P->empty_class();
                for (std::size_t r = 0; r < 9; ++r) {
                    if ((a >> r) & 1u) {
                        m.insert(r);
                        m2.insert(r);
                    }
                    if ((b >> r) & 1u) {
                        m2.insert(r);
                    }
                }
                CHECK(P->inj(m2).subset_of(P->inj(m)));
                CHECK(P->proj(m2).subset_of(P->proj(m)));
            }
        }
    }

    TEST_CASE("class predicates on extreme classes")
    {
        const auto P = boolean_algebra(2);
        const auto all = P->class_predicates(P->all_class());
        CHECK(all.retractile);
        CHECK(all.sectile);
        CHECK(all.decomposable);
        CHECK(all.composition_closed);
        CHECK(all.contains_identities);
        const auto ids = P->class_predicates(P->identity_class());
        CHECK(ids.retractile);
        CHECK(ids.sectile);

        // {} -> {0,1} alone: a composite without its factors.
        auto lone = P->identity_class();
        lone.insert(*P->rel_index(0, 3));
        const auto flags = P->class_predicates(lone);
        CHECK_FALSE(flags.retractile);
        CHECK_FALSE(flags.sectile);
        CHECK(flags.composition_closed);
    }

    TEST_CASE("factorization system classes from the oracle")
    {
        const auto P = boolean_algebra(2);
        const oracle::Lattice O(2);
        const auto systems = oracle::factorization_systems(O);
        CHECK(systems.size() == 10);
        for (const auto& L : systems) {
            auto left = P->empty_class();
            for (std::size_t r = 0; r < 9; ++r) {
                if (L[r]) {
                    left.insert(r);
                }
            }
            const auto right = P->inj(left);
            CHECK(P->proj(right) == left);
            CHECK(is_factorization_system(*P, left, right));
            CHECK(P->is_retractile(right));
            CHECK(P->is_sectile(left));
        }
        CHECK(oracle::factorization_systems(oracle::Lattice(1)).size() == 2);
    }

    TEST_CASE("factorization lookup")
    {
        const auto P = boolean_algebra(2);
        const auto ids = P->identity_class();
        const auto all = P->all_class();
        for (const auto& r : P->rels()) {
            CHECK(factor_with_classes(*P, ids, all, r) == r.src);
            CHECK(factor_with_classes(*P, all, ids, r) == r.dst);
        }
        CHECK_THROWS_AS(factor_with_classes(*P, all, all, RelPair{0, 3}),
                        internal_consistency_error);
        CHECK_FALSE(find_factorization(*P, ids, ids, RelPair{0, 3}).has_value());
    }

    TEST_CASE("hash is stable and structural")
    {
        CHECK(boolean_algebra(2)->hash_hex() == boolean_algebra(2)->hash_hex());
        CHECK(boolean_algebra(2)->hash_hex() != boolean_algebra(3)->hash_hex());
        CHECK(boolean_algebra(2)->hash_hex().size() == 16);
    }

    TEST_CASE("mismatched classes are rejected")
    {
        const auto a = boolean_algebra(1);
        const auto b = boolean_algebra(2);
        CHECK_THROWS_AS((void)a->proj(b->all_class()), argument_error);
        CHECK_THROWS_AS((void)(a->all_class() & b->all_class()), argument_error);
    }
}
