#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "permstab/rational.hpp"

namespace permstab {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Finite group given extensionally by its multiplication table, carrying the
// normalized counting measure m(A) = |A|/|Gamma|. Immutable after
// construction; construction validates identity, inverses and associativity
// (exhaustively up to order 64, by 10*|G|^2 sampled triples above).
class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
public:
    static GroupPtr from_mul_table(const std::vector<std::vector<int>>& table, std::string name = "");
    static GroupPtr cyclic(int m);
    static GroupPtr symmetric(int points); // Sym(points) with elements in lex one-line order

    int order() const { return order_; }
    int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
    int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
    int identity() const { return identity_; }
    const std::string& name() const { return name_; }

    int element_order(int g) const; // least k >= 1 with g^k = 1

    Rational measure_of_count(int count) const { return Rational(count, order_); }

    bool same_table(const FiniteGroup& other) const {
        return order_ == other.order_ && mul_ == other.mul_;
    }

    const std::vector<int>& mul_table_flat() const { return mul_; }

private:
    FiniteGroup() = default;

    int order_ = 0;
    int identity_ = 0;
    std::vector<int> mul_; // row-major order_ x order_
    std::vector<int> inv_;
    std::string name_;
};

// Subgroup as a sorted element set plus its parent group.
struct Subgroup {
    GroupPtr parent;
    std::vector<int> elements; // sorted, contains identity

    int size() const { return static_cast<int>(elements.size()); }
    bool contains(int g) const;
    int index() const { return parent->order() / size(); }
};

Subgroup subgroup_generated(const GroupPtr& group, const std::vector<int>& gens);

// Validates closure/identity/inverses of an explicit element set.
Subgroup subgroup_from_elements(const GroupPtr& group, std::vector<int> elements);

bool is_normal(const Subgroup& h, int* violating_conjugator = nullptr);

// Left cosets gH with minimal-element-index representatives; cosets ordered
// by representative.
struct CosetSpace {
    Subgroup subgroup;
    std::vector<int> transversal; // transversal[c] = minimal element of coset c
    std::vector<int> coset_of;    // element index -> coset index

    int index() const { return static_cast<int>(transversal.size()); }
    // gamma . (gH) = (gamma g)H
    int act(int gamma, int coset) const {
        return coset_of[static_cast<std::size_t>(subgroup.parent->mul(gamma, transversal[static_cast<std::size_t>(coset)]))];
    }
};

CosetSpace left_cosets(const Subgroup& h);

// Quotient by a normal subgroup; second component maps each element to the
// index of its coset in the quotient's numbering.
std::pair<GroupPtr, std::vector<int>> quotient(const Subgroup& normal);

// All subgroups obtainable as closures of <= 2 elements (every subgroup, for
// the 2-generated groups this library targets). Deterministic order.
std::vector<Subgroup> small_generated_subgroups(const GroupPtr& group);

} // namespace permstab
