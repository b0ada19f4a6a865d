#include <doctest.h>

#include "helpers.hpp"
#include "permstab/errors.hpp"
#include "permstab/testers.hpp"

using namespace permstab;
using permstab::testing::shift_map;

namespace {

// Straight transcription of the defect definitions, kept independent of the
// library scan for cross-checking.
std::pair<Rational, Rational> defect_oracle(const GroupMap& f) {
    const auto& g = *f.group();
    Rational worst(0), total(0);
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b) {
            Rational d = hamming(f.at(g.mul(a, b)), compose(f.at(a), f.at(b)));
            worst = std::max(worst, d);
            total += d;
        }
    return {worst, total / Rational(static_cast<std::int64_t>(g.order()) * g.order())};
}

} // namespace

TEST_CASE("defects of a homomorphism vanish") {
    DefectReport rep = defects(shift_map(6));
    CHECK(rep.defect_inf == Rational(0));
    CHECK(rep.defect_mean == Rational(0));
}

TEST_CASE("defects of the dropped shift") {
    GroupMap f = drop_point(shift_map(5));
    DefectReport rep = defects(f);
    CHECK(rep.defect_inf <= Rational(2, 4));
    auto [winf, wmean] = defect_oracle(f);
    CHECK(rep.defect_inf == winf);
    CHECK(rep.defect_mean == wmean);
    CHECK(rep.defect_mean <= rep.defect_inf);
}

TEST_CASE("defects of a single-entry corruption match the oracle") {
    auto z3 = FiniteGroup::cyclic(3);
    Rng rng(7);
    GroupMap f = random_action(z3, 6, rng);
    REQUIRE(is_homomorphism(f));
    GroupMap corrupted = f.with_entry(1, compose(f.at(1), Perm({1, 0, 2, 3, 4, 5})));
    DefectReport rep = defects(corrupted);
    auto [winf, wmean] = defect_oracle(corrupted);
    CHECK(rep.defect_inf == winf);
    CHECK(rep.defect_mean == wmean);
    CHECK(rep.defect_inf > Rational(0));
    // the argmax pair really attains the max
    const auto& g = *corrupted.group();
    CHECK(hamming(corrupted.at(g.mul(rep.argmax.first, rep.argmax.second)),
                  compose(corrupted.at(rep.argmax.first), corrupted.at(rep.argmax.second))) == rep.defect_inf);
}

TEST_CASE("distance between maps") {
    GroupMap f = shift_map(5);
    MapDistance self = distance(f, f);
    CHECK(!self.infinite);
    CHECK(self.d_inf == Rational(0));
    CHECK(self.d_mean == Rational(0));

    auto z3 = FiniteGroup::cyclic(3);
    MapDistance d = distance(GroupMap::trivial(z3, 2), GroupMap::trivial(z3, 4));
    CHECK(d.d_inf == Rational(1, 2));
    CHECK(d.d_mean == Rational(1, 2));

    // cross-size distance to the dropped map, against a direct scan
    GroupMap fhat = drop_point(f);
    MapDistance cross = distance(f, fhat);
    Rational worst(0), total(0);
    for (int g = 0; g < 5; ++g) {
        Rational h = hamming(f.at(g), fhat.at(g));
        worst = std::max(worst, h);
        total += h;
    }
    CHECK(cross.d_inf == worst);
    CHECK(cross.d_mean == total / Rational(5));

    MapDistance inf = distance(f, shift_map(6));
    CHECK(inf.infinite);
}

TEST_CASE("homomorphism and symmetry predicates") {
    GroupMap f = shift_map(4);
    CHECK(is_homomorphism(f));
    CHECK(is_symmetric(f));
    CHECK(is_homomorphism(GroupMap::trivial(FiniteGroup::cyclic(3), 5)));

    GroupMap corrupted = f.with_entry(1, compose(f.at(1), Perm({1, 0, 2, 3})));
    CHECK(!is_homomorphism(corrupted));

    GroupMap bad_id = f.with_entry(0, Perm({1, 0, 2, 3}));
    CHECK(!is_symmetric(bad_id));

    GroupMap fhat = drop_point(shift_map(5));
    bool direct = fhat.at(0).is_identity();
    for (int g = 0; g < 5 && direct; ++g) direct = fhat.at(fhat.group()->inv(g)) == fhat.at(g).inverse();
    CHECK(is_symmetric(fhat) == direct);
}

TEST_CASE("symmetrize leaves homomorphisms alone") {
    GroupMap f = shift_map(6);
    GroupMap out = symmetrize(f);
    for (int g = 0; g < 6; ++g) CHECK(out.at(g) == f.at(g));
}

TEST_CASE("symmetrize forces the identity to id") {
    auto z2 = FiniteGroup::cyclic(2);
    GroupMap f(z2, 3, {Perm({1, 0, 2}), Perm({0, 2, 1})});
    DefectReport before = defects(f);
    GroupMap out = symmetrize(f);
    CHECK(out.at(0).is_identity());
    CHECK(is_symmetric(out));
    CHECK(hamming(f.at(0), out.at(0)) <= before.defect_inf); // moving f(1_G) costs at most the defect
}

TEST_CASE("symmetrization bounds hold on random perturbations of the regular action") {
    GroupMap base = shift_map(6);
    Rng rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        GroupMap f = perturb(base, 1 + rng.below(3), rng);
        DefectReport before = defects(f);
        GroupMap out = symmetrize(f); // throws on any violated bound
        DefectReport after = defects(out);
        MapDistance moved = distance(f, out);
        CHECK(is_symmetric(out));
        CHECK(moved.d_inf <= Rational(2) * before.defect_inf);
        CHECK(moved.d_mean <= Rational(3) * before.defect_mean);
        CHECK(after.defect_inf <= Rational(7) * before.defect_inf);
        CHECK(after.defect_mean <= Rational(10) * before.defect_mean);
    }
}

TEST_CASE("proximity implies similar local defect") {
    auto z6 = FiniteGroup::cyclic(6);
    Rng rng(102);
    for (int trial = 0; trial < 50; ++trial) {
        GroupMap f = random_map(z6, 7, rng);
        GroupMap g = random_map(z6, 7, rng);
        MapDistance d = distance(f, g);
        CHECK(defects(g).defect_inf <= Rational(3) * d.d_inf + defects(f).defect_inf);
        CHECK(defects(g).defect_mean <= Rational(3) * d.d_mean + defects(f).defect_mean);
    }
}

TEST_CASE("maps approximately respect inverses") {
    auto z6 = FiniteGroup::cyclic(6);
    Rng rng(103);
    for (int trial = 0; trial < 50; ++trial) {
        GroupMap f = perturb(shift_map(6), 1 + rng.below(2), rng);
        Rational bound = Rational(2) * defects(f).defect_inf;
        for (int g = 0; g < 6; ++g) CHECK(hamming(f.at(g), f.at(z6->inv(g)).inverse()) <= bound);
    }
}

TEST_CASE("mean defect equals the exact rejection probability") {
    Rng rng(104);
    for (int trial = 0; trial < 20; ++trial) {
        GroupMap f = random_map(FiniteGroup::cyclic(4), 5, rng);
        CHECK(defects(f).defect_mean == rejection_probability_exact(f));
    }
}

TEST_CASE("random actions are genuine actions") {
    Rng rng(105);
    for (const GroupPtr& g : {FiniteGroup::cyclic(8), FiniteGroup::symmetric(3)})
        for (int n : {3, 7, 12}) {
            GroupMap f = random_action(g, n, rng);
            CHECK(is_homomorphism(f));
            CHECK(f.degree() == n);
        }
}
