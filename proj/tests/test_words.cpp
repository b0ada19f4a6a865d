#include <doctest.h>

#include "helpers.hpp"
#include "permstab/errors.hpp"
#include "permstab/oracle.hpp"
#include "permstab/words.hpp"

using namespace permstab;
using permstab::testing::shift_map;

TEST_CASE("word parsing and reduction") {
    CHECK(FreeWord::parse("").empty());
    CHECK(FreeWord::parse("   ").empty());

    FreeWord w = FreeWord::parse("x1^13 x2^-9 x1^3 x2 x1^-77");
    REQUIRE(w.syllables().size() == 5);
    CHECK(w.syllables()[0].gen == 1);
    CHECK(w.syllables()[0].exponent == 13);
    CHECK(w.syllables()[1].exponent == -9);
    CHECK(w.syllables()[3].gen == 2);
    CHECK(w.syllables()[3].exponent == 1);
    CHECK(w.syllables()[4].exponent == -77);

    FreeWord r = FreeWord::parse("x1^2 x1^-2 x2");
    REQUIRE(r.syllables().size() == 1);
    CHECK(r.syllables()[0].gen == 2);

    // cancellation cascades across the junction
    FreeWord c = FreeWord::parse("x1 x2^3 x2^-3 x1^-1 x2^5");
    REQUIRE(c.syllables().size() == 1);
    CHECK(c.syllables()[0].exponent == 5);

    CHECK_THROWS_WITH_AS(FreeWord::parse("x3"), doctest::Contains("offset 0"), parse_error);
    CHECK_THROWS_WITH_AS(FreeWord::parse("x1 y2"), doctest::Contains("offset 3"), parse_error);
    CHECK_THROWS_WITH_AS(FreeWord::parse("x1^0"), doctest::Contains("zero exponent"), parse_error);
    CHECK_THROWS_AS(FreeWord::parse("x1^"), parse_error);
    CHECK_THROWS_AS(FreeWord::parse("x1^2x2"), parse_error);
}

TEST_CASE("free reduction is confluent under concatenation") {
    Rng rng(51);
    for (int trial = 0; trial < 200; ++trial) {
        FreeWord a = sample_reduced_word(4, 5, rng);
        FreeWord b = sample_reduced_word(4, 5, rng);
        FreeWord joined = FreeWord::parse(a.str() + " " + b.str());
        CHECK(joined == a.concat(b));
    }
    FreeWord w = FreeWord::parse("x1^2 x2^-1 x1");
    CHECK(w.concat(w.inverse()).empty());
    CHECK(FreeWord::parse(w.str()) == w);
}

TEST_CASE("exponent reduction") {
    CHECK(exponent_reduce(7, 5) == 2);
    CHECK(exponent_reduce(-12, 5) == -2);
    CHECK(exponent_reduce(0, 9) == 0);
    CHECK(exponent_reduce(5, 5) == 0);
    CHECK(exponent_reduce(-5, 5) == 0);
    Rng rng(52);
    for (int trial = 0; trial < 300; ++trial) {
        int k = 1 + rng.below(12);
        long long t = rng.below64(2000) - 1000;
        long long r = exponent_reduce(t, k);
        CHECK(((t - r) % k) == 0);
        CHECK(r > -k);
        CHECK(r < k);
        if (r != 0) CHECK((t >= 0) == (r > 0)); // negative multiples of k reduce to 0

    }
}

TEST_CASE("grid evaluator basics") {
    const int k = 5;
    GridMap grid(k);
    CHECK(grid.eval(FreeWord::parse("")) == Perm::identity(25));
    CHECK(grid.eval(FreeWord::parse("x2^5")) == Perm::identity(25));

    // alpha1^k touches only the two pinched rows C_k x {0,1}
    Perm a1k = power(grid.alpha1(), k);
    CHECK(hamming_to_identity(a1k) <= Rational(2, k));
    for (int i = 0; i < k; ++i)
        for (int j = 2; j < k; ++j) CHECK(a1k(i * k + j) == i * k + j);
    CHECK(grid.eval(FreeWord::parse("x1^5")) == Perm::identity(25)); // reduced exponent is 0

    // the worked example: residues 3, -4, 3, 1, -2
    Perm lhs = grid.eval(FreeWord::parse("x1^13 x2^-9 x1^3 x2 x1^-77"));
    Perm rhs = compose(power(grid.alpha1(), 3),
                       compose(power(grid.alpha2(), -4),
                               compose(power(grid.alpha1(), 3), compose(grid.alpha2(), power(grid.alpha1(), -2)))));
    CHECK(lhs == rhs);
}

TEST_CASE("word pair defect never exceeds 2/k") {
    Rng rng(53);
    Rational worst = gk_defect_sample(6, 6, 500, rng); // asserts the cap on every pair
    CHECK(worst <= Rational(2, 6));
    CHECK(worst > Rational(0)); // the sample does hit genuine violations

    // pairing with the identity word contributes nothing
    GridMap grid(6);
    FreeWord w = FreeWord::parse("x1^4 x2^-7 x1");
    FreeWord e;
    CHECK(hamming(grid.eval(w.concat(e)), compose(grid.eval(w), grid.eval(e))) == Rational(0));
    CHECK(hamming(grid.eval(e.concat(w)), compose(grid.eval(e), grid.eval(w))) == Rational(0));
}

TEST_CASE("structured wrap families stay within 2/k") {
    // pairs of powers of one generator whose reduced exponents wrap by k
    for (int k : {5, 6}) {
        GridMap grid(k);
        for (int gen : {1, 2})
            for (int a = 1; a < k; ++a)
                for (int b = 1; b < k; ++b) {
                    if (a + b < k) continue; // no wrap
                    FreeWord w1 = FreeWord::parse("x" + std::to_string(gen) + "^" + std::to_string(a));
                    FreeWord w2 = FreeWord::parse("x" + std::to_string(gen) + "^" + std::to_string(b));
                    Rational d = hamming(grid.eval(w1.concat(w2)), compose(grid.eval(w1), grid.eval(w2)));
                    CHECK(d <= Rational(2, k));
                    if (gen == 2) CHECK(d == Rational(0)); // the unpinched shift has exact order k
                }
    }
}

TEST_CASE("cancellation pairs contribute the same defect as their shortened pair") {
    const int k = 7;
    GridMap grid(k);
    auto defect_of = [&](const FreeWord& w1, const FreeWord& w2) {
        return hamming(grid.eval(w1.concat(w2)), compose(grid.eval(w1), grid.eval(w2)));
    };
    FreeWord w1 = FreeWord::parse("x1^2 x2^3");
    FreeWord w2 = FreeWord::parse("x2^-3 x1^4");
    FreeWord t1 = FreeWord::parse("x1^2");
    FreeWord t2 = FreeWord::parse("x1^4");
    CHECK(defect_of(w1, w2) == defect_of(t1, t2));

    FreeWord u1 = FreeWord::parse("x2 x1^9");
    FreeWord u2 = FreeWord::parse("x1^-9 x2^2");
    CHECK(defect_of(u1, u2) == defect_of(FreeWord::parse("x2"), FreeWord::parse("x2^2")));
}

TEST_CASE("the hard element is far from the identity") {
    for (int k : {6, 10}) {
        auto [perm, dist] = gamma0_image(k);
        CHECK(perm.degree() == k * k);
        CHECK(dist >= Rational(k - 5, k));

        GridMap grid(k);
        Perm a = power(compose(grid.alpha1(), grid.alpha2()), k);
        CHECK(hamming_to_identity(a) <= Rational(2, k));
        Perm b = power(compose(grid.alpha_power(1, -(k - 1)), grid.alpha2()), k);
        CHECK(hamming_to_identity(b) >= Rational(k - 1, k));
    }
    auto [perm, dist] = gamma0_image(3); // below k = 6 the bound is vacuous; must still run
    CHECK(perm.degree() == 9);
    (void)dist;
}

TEST_CASE("drop point") {
    GroupMap triv = GroupMap::trivial(FiniteGroup::cyclic(4), 6);
    GroupMap dropped = drop_point(triv);
    CHECK(dropped.degree() == 5);
    CHECK(defects(dropped).defect_inf == Rational(0));

    GroupMap fhat = drop_point(shift_map(6));
    CHECK(fhat.at(1) == Perm({1, 2, 3, 4, 0})); // the (n-1)-cycle bypassing the dropped point
    CHECK(defects(fhat).defect_inf <= Rational(2, 5));

    Rng rng(54);
    GroupMap not_hom = perturb(shift_map(5), 1, rng);
    CHECK_THROWS_AS(drop_point(not_hom), domain_error);
    CHECK_THROWS_AS(drop_point(GroupMap::trivial(FiniteGroup::cyclic(2), 1)), domain_error);
}

TEST_CASE("strict-model gap for dropped shifts, small range") {
    for (int n : {4, 5, 6}) {
        GroupMap fhat = drop_point(shift_map(n));
        Rational best_inf(2), best_mean(2);
        enumerate_homomorphisms(fhat.group(), n - 1, [&](const GroupMap& h) {
            MapDistance d = distance(fhat, h);
            best_inf = std::min(best_inf, d.d_inf);
            best_mean = std::min(best_mean, d.d_mean);
        });
        CHECK(best_inf >= Rational(1, 2) - Rational(1, n - 1));
        CHECK(best_mean >= Rational(1, 4) - Rational(1, n - 1));
    }
    // flexible model: allowing one more point recovers a conjugate of the shift
    GroupMap fhat = drop_point(shift_map(5));
    NearestHom strict = nearest_homomorphism(fhat, 4);
    CHECK(strict.d_inf == Rational(1)); // only the trivial homomorphism exists in Sym(4)
    NearestHom flexible = nearest_homomorphism(fhat, 5);
    CHECK(flexible.d_inf <= Rational(2, 5));
}
