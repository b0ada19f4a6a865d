#pragma once

#include <functional>
#include <vector>

#include "permstab/group_map.hpp"

namespace permstab {

inline constexpr long long kDefaultEnumerationBudget = 10'000'000;

// Exhaustive, duplicate-free enumeration of all homomorphisms G -> Sym(degree)
// by backtracking over generator images (candidates filtered by element
// order). Refuses upfront when the search-space estimate exceeds the budget.
// Deterministic order. Returns the number of homomorphisms yielded.
long long enumerate_homomorphisms(const GroupPtr& group, int degree,
                                  const std::function<void(const GroupMap&)>& yield,
                                  long long budget = kDefaultEnumerationBudget);

std::vector<GroupMap> all_homomorphisms(const GroupPtr& group, int degree,
                                        long long budget = kDefaultEnumerationBudget);

struct NearestHom {
    GroupMap h;
    int n_used;
    Rational d_inf;
    Rational d_mean;
};

// Brute-force minimizer of d_inf(f, h) over all homomorphisms into Sym(N) for
// f.degree() <= N <= n_max. Ties: smaller N, then lexicographically smaller
// table.
NearestHom nearest_homomorphism(const GroupMap& f, int n_max, long long budget = kDefaultEnumerationBudget);

struct IntertwinerCheck {
    int n = 0;           // degree of the transitive action
    double distance = 0; // exact minimum distance from the padded inclusion to an intertwiner
    double bound = 0;    // sqrt((n-1)/2)
};

// For homomorphisms h into Sym(n-1) and transitive f into Sym(n): distance
// from the inclusion T_{n-1} to the space of intertwiners, realized exactly by
// the group-average orthogonal projection. Asserts distance >= bound - 1e-9.
IntertwinerCheck intertwiner_min_distance(const GroupMap& h, const GroupMap& f);

// Applies the group-average projection onto intertwiners to a (b x a)
// row-major matrix, b = f.degree(), a = h.degree().
std::vector<double> intertwiner_projection(const GroupMap& h, const GroupMap& f, const std::vector<double>& t);

// |{i : a_i > 1 - theta}| >= (1 - (1 - mean)/theta) * m, exactly. A theorem
// for inputs in [0,1]; exposed as a fuzzable helper.
bool markov_bound_check(const std::vector<Rational>& values, const Rational& theta);

bool is_transitive(const GroupMap& f);

} // namespace permstab
