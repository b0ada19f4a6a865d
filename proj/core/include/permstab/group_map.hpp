#pragma once

#include <utility>
#include <vector>

#include "permstab/group.hpp"
#include "permstab/perm.hpp"

namespace permstab {

// A function from a finite group into Sym(degree), stored as one permutation
// per element index. The central object of the library: everything else
// measures, tests, repairs or perturbs one of these.
class GroupMap {
public:
    GroupMap(GroupPtr group, int degree, std::vector<Perm> table);

    const GroupPtr& group() const { return group_; }
    int degree() const { return degree_; }
    const Perm& at(int g) const { return table_[static_cast<std::size_t>(g)]; }
    const std::vector<Perm>& table() const { return table_; }

    int apply(int g, int x) const { return table_[static_cast<std::size_t>(g)](x); }

    GroupMap with_entry(int g, Perm p) const; // copy with one table entry replaced

    static GroupMap trivial(GroupPtr group, int degree);
    static GroupMap regular(const GroupPtr& group);
    static GroupMap coset_action(const CosetSpace& cosets);

private:
    GroupPtr group_;
    int degree_;
    std::vector<Perm> table_;
};

struct DefectReport {
    Rational defect_inf;       // max over ordered pairs
    Rational defect_mean;      // exact average over all |G|^2 ordered pairs
    std::pair<int, int> argmax; // first pair attaining defect_inf in scan order
};

DefectReport defects(const GroupMap& f);

// Uniform/mean distance between maps over the same group; degrees may differ
// (cross-size Hamming per element). Maps over different groups are at the
// tagged infinity, matching the d_inf = infinity convention.
struct MapDistance {
    bool infinite = false;
    Rational d_inf;
    Rational d_mean;
};

MapDistance distance(const GroupMap& f, const GroupMap& h);

bool is_homomorphism(const GroupMap& f);

// f(1) = id and f(g^-1) = f(g)^-1 for every g.
bool is_symmetric(const GroupMap& f);

// Deforms f into a symmetric map: identity forced to id, each {g, g^-1} pair
// made mutually inverse (keeping the member with smaller element index), and
// 2-torsion entries replaced by their canonical nearby involution. Asserts
// d_inf(f,f') <= C*defect_inf, d_1 <= (C+1)*defect_1, defect_inf(f') <=
// (3C+1)*defect_inf and defect_1(f') <= (3C+4)*defect_1, with C = 2*max{1,m2};
// the concrete construction achieves m2 = 1.
GroupMap symmetrize(const GroupMap& f, const Rational& m2 = Rational(1));

GroupMap random_map(const GroupPtr& group, int degree, Rng& rng);

// Genuine action assembled from coset actions of pseudo-randomly chosen
// subgroups, padded with fixed points; always an exact homomorphism.
GroupMap random_action(const GroupPtr& group, int degree, Rng& rng);

// Postcomposes `corruptions` randomly chosen table entries with random
// transpositions.
GroupMap perturb(const GroupMap& f, int corruptions, Rng& rng);

} // namespace permstab
