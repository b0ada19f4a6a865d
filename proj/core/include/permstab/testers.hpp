#pragma once

#include <vector>

#include "permstab/group_map.hpp"
#include "permstab/rng.hpp"

namespace permstab {

// A map between two multiplication-table groups, for the plain homomorphism
// tester that reads whole images.
struct FiniteGroupMap {
    GroupPtr dom;
    GroupPtr cod;
    std::vector<int> images; // element of dom -> element of cod

    FiniteGroupMap(GroupPtr d, GroupPtr c, std::vector<int> imgs);
};

struct TestOutcome {
    bool accept = true;
    int g1 = -1;
    int g2 = -1;
    int x = -1; // sampled point; -1 for the pair-only tester
};

// Sample (g1,g2) uniformly; accept iff f(g1 g2) = f(g1) f(g2).
TestOutcome blr_test_once(const FiniteGroupMap& f, Rng& rng);

// The same check applied to a permutation-valued map, still reading whole
// permutations.
TestOutcome blr_test_once(const GroupMap& f, Rng& rng);

// Sample (g1,g2,x) uniformly; accept iff f(g1 g2)(x) = f(g1) f(g2) (x).
TestOutcome sym_test_once(const GroupMap& f, Rng& rng);

// Exact rejection probability of the point tester: violating triples over
// |G|^2 * n. Coincides with defect_mean, which the test suite pins down.
Rational rejection_probability_exact(const GroupMap& f);

// Exact rejection probability of the pair tester: violating pairs over |G|^2.
Rational blr_rejection_probability_exact(const FiniteGroupMap& f);

// k = ceil(log(alpha) / log(1 - eps/2913)): iterations needed to push the
// accept probability of an eps-far map below alpha, using the worst-case
// per-run rejection rate eps/2913. rate_denominator overrides 2913 when an
// empirically measured rate is available.
long long amplification_iterations(const Rational& eps, const Rational& alpha,
                                   const Rational& rate_denominator = Rational(2913));

struct AmplifiedOutcome {
    bool accept = true;
    long long iterations = 0;
    TestOutcome witness; // first rejecting sample when !accept
};

AmplifiedOutcome amplified_test(const GroupMap& f, const Rational& eps, const Rational& alpha, Rng& rng,
                                const Rational& rate_denominator = Rational(2913));

struct TestStats {
    long long samples = 0;
    long long rejections = 0;
    double estimate = 0.0;
    double confidence_radius = 0.0;          // 3 sigma, floored at 10/samples
    std::vector<long long> batch_rejections; // per deterministic batch
    long long batch_size = 0;
};

TestStats monte_carlo(const GroupMap& f, long long samples, Rng& rng);

} // namespace permstab
