#include "mscensus/brackets.hpp"
#include "mscensus/constructions.hpp"
#include "mscensus/errors.hpp"

#include <doctest.h>

#include <set>

using namespace mscensus;

namespace {

std::vector<ReplacementPair> compatible_pairs(unsigned n)
{
    const auto census = enumerate_replacement_pairs(n, {false, false, 1});
    std::vector<ReplacementPair> out;
    for (const auto& fp : census.pairs) {
        out.push_back(materialize(census, fp));
    }
    return out;
}

ElementSet semicofibrants(const ReplacementPair& p)
{
    ElementSet out = 0;
    for (Element x = 0; x < p.F.poset()->size(); ++x) {
        if (semistatus(p, x).semicofibrant) {
            out |= ElementSet{1} << x;
        }
    }
    return out;
}

bool same_classes(const ModelStructure& a, const ModelStructure& b)
{
    return a.cof == b.cof && a.we == b.we && a.fib == b.fib;
}

} // namespace

TEST_SUITE("constructions")
{
    TEST_CASE("identity pair gives the discrete structure")
    {
        for (unsigned n = 0; n <= 3; ++n) {
            const auto P = boolean_algebra(n);
            const auto p = identity_pair(P);
            for (auto method : {Construction::droz_zakharevich, Construction::stanculescu,
                                Construction::main, Construction::strong}) {
                const auto r = construct(method, p);
                CHECK(r.provenance == method);
                CHECK(r.ms.we == P->identity_class());
                CHECK(r.ms.cof == P->all_class());
                CHECK(r.ms.fib == P->all_class());
            }
        }
    }

    TEST_CASE("construction names")
    {
        for (auto method : {Construction::droz_zakharevich, Construction::stanculescu,
                            Construction::main, Construction::strong}) {
            CHECK(construction_from_name(construction_name(method)) == method);
        }
        CHECK(construction_from_name("dz") == Construction::droz_zakharevich);
        CHECK_THROWS_AS(construction_from_name("quillen"), argument_error);
    }

    TEST_CASE("preconditions")
    {
        const auto P = boolean_algebra(1);
        // F constant top and C constant bottom do not commute.
        const ReplacementPair bad{ClosureOperator::constant_top(P),
                                  InteriorOperator::constant_bottom(P)};
        REQUIRE_FALSE(is_compatible(bad));
        CHECK_THROWS_AS(main_construction(bad), precondition_error);
        CHECK_THROWS_AS(dz_model_structure(bad), precondition_error);
        CHECK_THROWS_AS(stanculescu_model_structure(bad), precondition_error);
        CHECK_THROWS_AS(strong_from_orthogonal(bad), precondition_error);

        for (const auto& p : compatible_pairs(2)) {
            if (!is_orthogonal(p)) {
                CHECK_THROWS_AS(strong_from_orthogonal(p), precondition_error);
            }
        }
    }

    TEST_CASE("shared weak equivalences and verified output")
    {
        for (unsigned n = 1; n <= 3; ++n) {
            const auto catalog = enumerate_brackets(boolean_algebra(n));
            for (const auto& p : compatible_pairs(n)) {
                const auto fc = inverted_by_fc(p);
                for (auto method : {Construction::droz_zakharevich, Construction::stanculescu,
                                    Construction::main}) {
                    const auto r = construct(method, p, &catalog);
                    CHECK(r.ms.we == fc);
                    CHECK(is_bracket_pair(r.ms.pair));
                    CHECK(r.ms.ids.has_value());
                    CHECK_FALSE(model_structure_violation(*catalog.poset(), r.ms.cof, r.ms.we,
                                                          r.ms.fib)
                                    .has_value());
                }
            }
        }
    }

    TEST_CASE("semicofibrant objects")
    {
        for (unsigned n = 1; n <= 3; ++n) {
            for (const auto& p : compatible_pairs(n)) {
                const auto semi = semicofibrants(p);
                const auto dz = dz_model_structure(p);
                const auto st = stanculescu_model_structure(p);
                CHECK((semi & ~dz.ms.cofibrant) == 0);
                CHECK(st.ms.cofibrant == semi);
                CHECK((p.C.fixed_points() & ~semi) == 0);
            }
        }
    }

    TEST_CASE("semicofibrant but not cofibrant on a 2-set")
    {
        const auto catalog = enumerate_brackets(boolean_algebra(2));
        std::set<std::pair<std::size_t, std::size_t>> witnesses;
        for (const auto& p : compatible_pairs(2)) {
            if ((semicofibrants(p) & ~p.C.fixed_points()) != 0) {
                witnesses.insert(*main_construction(p, &catalog).ms.ids);
            }
        }
        const std::set<std::pair<std::size_t, std::size_t>> expected{{4, 4}, {6, 6}, {8, 8}};
        CHECK(witnesses == expected);
    }

    TEST_CASE("semistatus")
    {
        for (unsigned n = 1; n <= 3; ++n) {
            for (const auto& p : compatible_pairs(n)) {
                const auto& P = *p.F.poset();
                for (Element x = 0; x < P.size(); ++x) {
                    const auto s = semistatus(p, x);
                    CHECK(s.f_fibrant == (p.F(x) == x));
                    CHECK(s.c_cofibrant == (p.C(x) == x));
                    CHECK(s.semifibrant == P.leq(p.F(p.C(x)), x));
                    CHECK(s.semicofibrant == P.leq(x, p.F(p.C(x))));
                    if (s.f_fibrant) {
                        CHECK(s.semifibrant);
                    }
                    if (s.c_cofibrant) {
                        CHECK(s.semicofibrant);
                    }
                }
            }
        }
    }

    TEST_CASE("main construction objects and round trip")
    {
        for (unsigned n = 1; n <= 3; ++n) {
            for (const auto& p : compatible_pairs(n)) {
                const auto r = main_construction(p);
                CHECK(r.ms.fibrant == p.F.fixed_points());
                CHECK(r.ms.cofibrant == p.C.fixed_points());
                const auto q = associated_pair(r.ms);
                CHECK(q.F == p.F);
                CHECK(q.C == p.C);
            }
        }
    }

    TEST_CASE("every compatible pair comes from a model structure")
    {
        const auto census = enumerate_model_structures(boolean_algebra(3));
        std::set<std::pair<std::vector<Element>, std::vector<Element>>> pairs;
        for (const auto& ms : census.structures) {
            const auto p = associated_pair(ms);
            pairs.insert({p.F.table(), p.C.table()});
        }
        CHECK(pairs.size() == 690);
    }

    TEST_CASE("inverse image identity for the displayed cofibrations")
    {
        for (unsigned n = 1; n <= 3; ++n) {
            for (const auto& p : compatible_pairs(n)) {
                const auto& P = *p.F.poset();
                const auto Z = displayed_main_cofibrations(p);
                const auto fc = inverted_by_fc(p);
                CHECK((fc & P.inj(Z & fc)) == P.inj(Z));
            }
        }
    }

    TEST_CASE("displayed cofibrations versus the repaired class")
    {
        const std::size_t expected_failures[] = {0, 0, 0, 135};
        for (unsigned n = 1; n <= 3; ++n) {
            std::size_t failures = 0;
            for (const auto& p : compatible_pairs(n)) {
                const auto& P = *p.F.poset();
                const auto Z = displayed_main_cofibrations(p);
                const bool left_class = P.proj(P.inj(Z)) == Z;
                failures += !left_class;
                const auto repaired = main_cofibrations(p);
                CHECK(P.proj(P.inj(repaired)) == repaired);
                CHECK(repaired.subset_of(Z));
                if (left_class) {
                    CHECK(repaired == Z);
                }
            }
            CHECK(failures == expected_failures[n]);
        }

        // F constant top, C with fixed points {}, {2}, {0,1,2}.
        const auto P = boolean_algebra(3);
        const auto C = interior_from_fixed_points(P, (1u << 0) | (1u << 4) | (1u << 7));
        REQUIRE(C.has_value());
        const ReplacementPair p{ClosureOperator::constant_top(P), *C};
        REQUIRE(is_compatible(p));
        const auto Z = displayed_main_cofibrations(p);
        CHECK(Z.contains(*P->rel_index(0, 4)));
        CHECK(Z.contains(*P->rel_index(4, 5)));
        CHECK_FALSE(Z.contains(*P->rel_index(0, 5)));
        CHECK_FALSE(P->class_predicates(Z).composition_closed);
    }

    TEST_CASE("cofibrant objects across constructions")
    {
        const std::size_t expected_extra[] = {0, 0, 3, 143};
        for (unsigned n = 1; n <= 3; ++n) {
            std::size_t extra = 0;
            for (const auto& p : compatible_pairs(n)) {
                const auto dz = dz_model_structure(p).ms.cofibrant;
                const auto st = stanculescu_model_structure(p).ms.cofibrant;
                const auto main = main_construction(p).ms.cofibrant;
                CHECK((main & ~dz) == 0);
                CHECK((main & ~st) == 0);
                const bool equal = dz == st && st == main;
                if (is_strongly_compatible(p)) {
                    CHECK(equal);
                } else {
                    extra += equal;
                }
            }
            CHECK(extra == expected_extra[n]);
        }
    }

    TEST_CASE("constructions agree on strongly compatible pairs of a 2-set")
    {
        std::size_t count = 0;
        for (const auto& p : compatible_pairs(2)) {
            if (!is_strongly_compatible(p)) {
                continue;
            }
            ++count;
            const auto main = main_construction(p).ms;
            CHECK(same_classes(main, stanculescu_model_structure(p).ms));
            CHECK(same_classes(main, strong_from_orthogonal(p).ms));
        }
        CHECK(count == 17);
    }

    TEST_CASE("strong construction hits every strong structure")
    {
        for (unsigned n = 1; n <= 3; ++n) {
            const auto P = boolean_algebra(n);
            const auto catalog = enumerate_brackets(P);
            const auto census = enumerate_model_structures(catalog);
            std::set<std::pair<std::size_t, std::size_t>> strong;
            for (const auto& ms : census.structures) {
                if (ms.flags.strong) {
                    strong.insert(*ms.ids);
                }
            }
            std::set<std::pair<std::size_t, std::size_t>> image;
            std::size_t orthogonal = 0;
            for (const auto& p : compatible_pairs(n)) {
                if (!is_orthogonal(p)) {
                    continue;
                }
                ++orthogonal;
                const auto r = strong_from_orthogonal(p, &catalog);
                CHECK(r.ms.flags.strong);
                CHECK(r.ms.acof == inverted_class(p.F));
                CHECK(r.ms.afib == inverted_class(p.C));
                image.insert(*r.ms.ids);
            }
            CHECK(image.size() == orthogonal);
            CHECK(image == strong);
        }
    }

    TEST_CASE("matroidal pairs have flats as fibrant objects")
    {
        for (unsigned n = 1; n <= 3; ++n) {
            const auto P = boolean_algebra(n);
            for (const auto& m : enumerate_moore_families(n)) {
                if (!is_matroid(m)) {
                    continue;
                }
                const auto F = closure_from_family(m);
                for (const auto& c : enumerate_moore_families(n)) {
                    const ReplacementPair p{F, dual_interior(c)};
                    if (!is_orthogonal(p)) {
                        continue;
                    }
                    const auto r = strong_from_orthogonal(p);
                    CHECK(r.ms.fibrant == static_cast<ElementSet>(m.closed));
                }
            }
        }
    }
}
