#include <doctest.h>

#include <set>

#include "permstab/group.hpp"
#include "permstab/errors.hpp"

using namespace permstab;

TEST_CASE("multiplication table construction") {
    auto triv = FiniteGroup::from_mul_table({{0}});
    CHECK(triv->order() == 1);
    CHECK(triv->identity() == 0);

    auto z3 = FiniteGroup::from_mul_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
    CHECK(z3->order() == 3);
    CHECK(z3->same_table(*FiniteGroup::cyclic(3)));

    // break associativity: identity and inverses still work, the triple check fires
    CHECK_THROWS_WITH_AS(FiniteGroup::from_mul_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 0}}),
                         doctest::Contains("not associative"), domain_error);
    CHECK_THROWS_AS(FiniteGroup::from_mul_table({{1, 0}, {1, 0}}), domain_error);  // no identity
    CHECK_THROWS_AS(FiniteGroup::from_mul_table({{0, 1}, {1, 7}}), domain_error);  // out of range
    CHECK_THROWS_AS(FiniteGroup::from_mul_table({{0, 1}, {1}}), domain_error);     // not square
}

TEST_CASE("cyclic groups") {
    CHECK(FiniteGroup::cyclic(1)->order() == 1);
    auto z2 = FiniteGroup::cyclic(2);
    CHECK(z2->mul(1, 1) == 0);
    auto z5 = FiniteGroup::cyclic(5);
    for (int g = 1; g < 5; ++g) CHECK(z5->element_order(g) == 5);
}

TEST_CASE("element order") {
    auto z6 = FiniteGroup::cyclic(6);
    CHECK(z6->element_order(0) == 1);
    CHECK(z6->element_order(1) == 6);
    CHECK(z6->element_order(2) == 3);
    CHECK(z6->element_order(3) == 2);
}

TEST_CASE("generated subgroups") {
    auto z6 = FiniteGroup::cyclic(6);
    CHECK(subgroup_generated(z6, {}).elements == std::vector<int>{0});
    CHECK(subgroup_generated(z6, {3}).elements == std::vector<int>{0, 3});
    CHECK(subgroup_generated(z6, {1}).size() == 6);
    CHECK(subgroup_generated(z6, {2, 3}).size() == 6);
}

TEST_CASE("lagrange and measure identities") {
    for (const GroupPtr& g : {FiniteGroup::cyclic(12), FiniteGroup::symmetric(3)}) {
        for (const Subgroup& h : small_generated_subgroups(g)) {
            CHECK(g->order() % h.size() == 0);
            // [G:H] = 1 / m(H)
            CHECK(Rational(h.index()) == Rational(1) / g->measure_of_count(h.size()));
            // counting measure is left, right and inverse invariant
            for (int a = 0; a < g->order(); ++a) {
                std::set<int> left, right, inv;
                for (int x : h.elements) {
                    left.insert(g->mul(a, x));
                    right.insert(g->mul(x, a));
                    inv.insert(g->inv(x));
                }
                CHECK(static_cast<int>(left.size()) == h.size());
                CHECK(static_cast<int>(right.size()) == h.size());
                CHECK(static_cast<int>(inv.size()) == h.size());
            }
        }
    }
}

TEST_CASE("left cosets") {
    auto z6 = FiniteGroup::cyclic(6);

    CosetSpace whole = left_cosets(subgroup_generated(z6, {1}));
    CHECK(whole.index() == 1);

    CosetSpace regular = left_cosets(Subgroup{z6, {0}});
    CHECK(regular.index() == 6);
    for (int g = 0; g < 6; ++g)
        for (int c = 0; c < 6; ++c) CHECK(regular.act(g, c) == (g + c) % 6); // left regular action

    CosetSpace idx3 = left_cosets(subgroup_generated(z6, {3}));
    CHECK(idx3.index() == 3);
    CHECK(idx3.transversal == std::vector<int>{0, 1, 2}); // minimal representatives
    for (int c = 0; c < 3; ++c) CHECK(idx3.act(1, c) == (c + 1) % 3); // shift on 3 points
}

TEST_CASE("quotients") {
    auto z6 = FiniteGroup::cyclic(6);

    auto [q1, p1] = quotient(subgroup_generated(z6, {1}));
    CHECK(q1->order() == 1);
    (void)p1;

    auto [q2, p2] = quotient(Subgroup{z6, {0}});
    CHECK(q2->same_table(*z6));
    for (int g = 0; g < 6; ++g) CHECK(p2[static_cast<std::size_t>(g)] == g);

    auto [q3, p3] = quotient(subgroup_generated(z6, {3}));
    CHECK(q3->same_table(*FiniteGroup::cyclic(3)));
    // projection is a homomorphism
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            CHECK(p3[static_cast<std::size_t>(z6->mul(a, b))] ==
                  q3->mul(p3[static_cast<std::size_t>(a)], p3[static_cast<std::size_t>(b)]));

    auto s3 = FiniteGroup::symmetric(3);
    Subgroup flip = subgroup_generated(s3, {1}); // an order-2 subgroup, not normal
    REQUIRE(flip.size() == 2);
    int bad = -1;
    CHECK(!is_normal(flip, &bad));
    CHECK(bad >= 0);
    CHECK_THROWS_WITH_AS(quotient(flip), doctest::Contains("not normal"), domain_error);
}

TEST_CASE("explicit subgroup validation") {
    auto z6 = FiniteGroup::cyclic(6);
    CHECK(subgroup_from_elements(z6, {0, 2, 4}).size() == 3);
    CHECK_THROWS_AS(subgroup_from_elements(z6, {0, 2}), domain_error);  // not closed
    CHECK_THROWS_AS(subgroup_from_elements(z6, {2, 4}), domain_error);  // no identity
}

TEST_CASE("symmetric groups as tables") {
    auto s3 = FiniteGroup::symmetric(3);
    CHECK(s3->order() == 6);
    bool abelian = true;
    for (int a = 0; a < 6 && abelian; ++a)
        for (int b = 0; b < 6; ++b)
            if (s3->mul(a, b) != s3->mul(b, a)) {
                abelian = false;
                break;
            }
    CHECK(!abelian);
}
