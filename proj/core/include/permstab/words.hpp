#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permstab/group_map.hpp"

namespace permstab {

// Reduced word in the free group on x1, x2: alternating generators, nonzero
// exponents, empty = identity.
class FreeWord {
public:
    struct Syllable {
        int gen;            // 1 or 2
        long long exponent; // nonzero
    };

    FreeWord() = default;

    // Reduces on the way in: merges adjacent equal generators, drops zero
    // sums, cascades.
    static FreeWord from_syllables(const std::vector<Syllable>& raw);

    // Grammar: whitespace-separated tokens `x1` or `x2`, each optionally
    // followed by `^` and a signed nonzero decimal exponent.
    static FreeWord parse(std::string_view text);

    const std::vector<Syllable>& syllables() const { return syl_; }
    bool empty() const { return syl_.empty(); }
    int length() const; // sum of |exponent|

    FreeWord concat(const FreeWord& other) const; // reduced product
    FreeWord inverse() const;

    std::string str() const;

    friend bool operator==(const FreeWord& a, const FreeWord& b);

private:
    std::vector<Syllable> syl_;
};

// Signed residue: the element of {0,...,k-1} congruent to t for t >= 0,
// negated reduction of -t for t < 0.
long long exponent_reduce(long long t, int k);

// The pinched-grid evaluator on C_k x C_k (row-major point (i,j) = i*k + j):
// alpha2 shifts the second coordinate, alpha1 shifts the first after swapping
// (0,0) with (0,1). Words map to products of reduced powers of the two.
class GridMap {
public:
    explicit GridMap(int k);

    int k() const { return k_; }
    int points() const { return k_ * k_; }

    const Perm& alpha1() const { return alpha_power(1, 1); }
    const Perm& alpha2() const { return alpha_power(2, 1); }
    const Perm& alpha_power(int gen, long long exponent) const { return power_of(gen, exponent_reduce(exponent, k_)); }

    Perm eval(const FreeWord& w) const;

private:
    const Perm& power_of(int gen, long long reduced) const;
    int k_;
    std::vector<Perm> pow1_; // alpha1^t for t in (-k, k), index t + k - 1
    std::vector<Perm> pow2_;
};

// Drops the last point: each image permutation routes through the removed
// point. Requires an exact homomorphism of degree >= 2; the result has
// uniform defect at most 2/(n-1), asserted.
GroupMap drop_point(const GroupMap& f);

// Uniform random reduced word: syllable count in [1, max_syllables],
// exponents in [-3k, 3k] \ {0}, alternating generators from a random start.
FreeWord sample_reduced_word(int max_syllables, int k, Rng& rng);

// Max over sampled reduced pairs (w1, w2) of d(g_k(w1 w2), g_k(w1) g_k(w2));
// asserts the 2/k cap on every pair.
Rational gk_defect_sample(int k, int max_syllables, long long trials, Rng& rng);

// The hard element: (a1 a2)^k composed with the inverse of (a1^{1-k} a2)^k,
// realizing the image of (x1^{N!-k+1} x2)^k (x1^{-k+1} x2)^{-k} through the
// reduced residues. Distance to id is asserted >= 1 - 5/k for k >= 6.
std::pair<Perm, Rational> gamma0_image(int k);

} // namespace permstab
