#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permstab/group_map.hpp"

namespace permstab {

// Gamma-labelled functional graph: at most one outgoing edge per (vertex,
// label), endpoints inside the vertex set. Vertices are a subset of
// {0,...,ambient-1}.
class GammaGraph {
public:
    GammaGraph(GroupPtr group, int ambient, std::vector<int> vertices);

    const GroupPtr& group() const { return group_; }
    int ambient() const { return ambient_; }
    const std::vector<int>& vertices() const { return verts_; }
    int vertex_count() const { return static_cast<int>(verts_.size()); }
    bool has_vertex(int x) const { return in_[static_cast<std::size_t>(x)] != 0; }

    // -1 when absent.
    int edge(int x, int g) const { return dest_[static_cast<std::size_t>(x) * order_ + g]; }
    void add_edge(int x, int g, int y);

    int degree_count(int x) const; // |OE(x)|; degree = that / |G|
    int domain_count(int g) const; // |D(g)|
    long long edge_count() const;

private:
    GroupPtr group_;
    int ambient_;
    int order_;
    std::vector<int> verts_; // sorted
    std::vector<char> in_;
    std::vector<int> dest_;
};

// The function graph X_f: total edges (x, g) -> f(g)(x) on all of [n].
GammaGraph function_graph(const GroupMap& f);

// T(x -g-> y) = { t : f(t) f(t^-1 g) (x) = y }, by full scan.
std::vector<int> supporters(const GroupMap& f, int x, int g, int y);

// Edge weights of f's function graph: count(x,g) voters support the actual
// target f(g)(x); majority_dest/majority_count describe the most voted
// target, which the cascade uses as the repaired edge.
class WeightTable {
public:
    WeightTable(const GroupMap& f);

    int order() const { return order_; }
    int fn_count(int x, int g) const { return fcount_[idx(x, g)]; }
    Rational weight(int x, int g) const { return Rational(fcount_[idx(x, g)], order_); }
    int majority_dest(int x, int g) const { return mdest_[idx(x, g)]; }
    int majority_count(int x, int g) const { return mcount_[idx(x, g)]; }

private:
    std::size_t idx(int x, int g) const { return static_cast<std::size_t>(x) * order_ + g; }
    int order_;
    std::vector<int> fcount_;
    std::vector<int> mdest_;
    std::vector<int> mcount_;
};

struct GroupoidCheck {
    bool ok = true;
    std::string violation; // first failing edge or triangle, when !ok
};

GroupoidCheck check_groupoid(const GammaGraph& x);

// Connected components of a groupoid, each sorted, ordered by minimal vertex.
std::vector<std::vector<int>> components(const GammaGraph& x);

// Loop labels at x; closure is guaranteed by the groupoid axioms and verified.
Subgroup stabilizer(const GammaGraph& x, int vertex);

// The high-weight cascade at 0 < eps <= 1/6. Edges carry the majority target
// of the supporter vote, so Y_eps and Z_eps are groupoids; weight thresholds
// are strict (> 1-eps, > 1-2eps), the degree filters are deg > 2/3 (strict)
// into Y and deg >= 1/2 into Z, all compared in exact rationals. Z_eps is
// cross-checked against its other characterization as the union of the
// components of Y_eps with degree >= 1/2, and every quantitative graph lemma
// is asserted on the way.
struct Cascade {
    Rational eps;
    GammaGraph x_eps;
    GammaGraph y_eps;
    GammaGraph z_eps;
    WeightTable weights;
    DefectReport defect;
};

Cascade build_cascade(const GroupMap& f, const Rational& eps);
Cascade build_cascade(const GroupMap& f, const Rational& eps, const DefectReport& report);

} // namespace permstab
