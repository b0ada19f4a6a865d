#pragma once

#include "permstab/group_map.hpp"
#include "permstab/words.hpp"

namespace permstab::testing {

// The Z/m shift on [m]: the left regular action of the cyclic group.
inline GroupMap shift_map(int m) { return GroupMap::regular(FiniteGroup::cyclic(m)); }

// Postcomposes f(g) with a transposition and keeps the map symmetric by
// setting f(g^-1) to the inverse. For g of order 2 the transposition is taken
// from a 2-cycle of f(g) (or two fixed points), so the entry stays an
// involution.
inline GroupMap perturb_symmetric(const GroupMap& f, int g, Rng& rng) {
    const auto& grp = *f.group();
    const int n = f.degree();
    if (g == grp.identity()) throw domain_error("cannot symmetric-perturb the identity entry");
    if (grp.inv(g) != g) {
        Perm corrupted = compose(f.at(g), random_transposition(n, rng));
        GroupMap out = f.with_entry(g, corrupted);
        return out.with_entry(grp.inv(g), corrupted.inverse());
    }
    const Perm& p = f.at(g);
    std::vector<int> two_cycle, fixed;
    for (int x = 0; x < n; ++x) {
        if (p(x) == x) fixed.push_back(x);
        else if (p(x) > x) two_cycle.push_back(x);
    }
    std::vector<int> img = p.image();
    if (!two_cycle.empty()) {
        int a = two_cycle[static_cast<std::size_t>(rng.below(static_cast<int>(two_cycle.size())))];
        int b = p(a); // unsplice the 2-cycle (a b)
        img[static_cast<std::size_t>(a)] = a;
        img[static_cast<std::size_t>(b)] = b;
    } else {
        int a = fixed[static_cast<std::size_t>(rng.below(static_cast<int>(fixed.size())))];
        int b = a;
        while (b == a || p(b) != b) b = rng.below(n);
        img[static_cast<std::size_t>(a)] = b;
        img[static_cast<std::size_t>(b)] = a;
    }
    return f.with_entry(g, Perm(img));
}

// Z/12 on 29 regular orbits plus one fixed point, with f(3), f(4) swapping
// the fixed point into orbits and f(8), f(9) their inverses. Symmetric, mean
// defect under 1/78, yet the fixed point drops out of the repaired core and
// takes its singleton coset space with it: |V1| = 348 < n = 349.
inline GroupMap adversarial_fixed_point_instance() {
    auto z12 = FiniteGroup::cyclic(12);
    const int orbits = 29;
    const int n = 12 * orbits + 1;
    const int pstar = n - 1;
    std::vector<std::vector<int>> img(12, std::vector<int>(static_cast<std::size_t>(n)));
    for (int k = 0; k < 12; ++k) {
        for (int o = 0; o < orbits; ++o)
            for (int x = 0; x < 12; ++x) img[static_cast<std::size_t>(k)][static_cast<std::size_t>(12 * o + x)] = 12 * o + (x + k) % 12;
        img[static_cast<std::size_t>(k)][static_cast<std::size_t>(pstar)] = pstar;
    }
    auto postswap = [&](int k, int a, int b) {
        for (int x = 0; x < n; ++x) {
            int& v = img[static_cast<std::size_t>(k)][static_cast<std::size_t>(x)];
            if (v == a) v = b;
            else if (v == b) v = a;
        }
    };
    postswap(3, pstar, 5);
    postswap(4, pstar, 17);
    std::vector<Perm> table;
    for (int k = 0; k < 12; ++k) table.push_back(Perm(img[static_cast<std::size_t>(k)]));
    GroupMap f(z12, n, table);
    f = f.with_entry(8, f.at(4).inverse());
    return f.with_entry(9, f.at(3).inverse());
}

} // namespace permstab::testing
