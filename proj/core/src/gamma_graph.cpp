#include "permstab/gamma_graph.hpp"

#include <algorithm>
#include <numeric>

#include "permstab/errors.hpp"

namespace permstab {

GammaGraph::GammaGraph(GroupPtr group, int ambient, std::vector<int> vertices)
    : group_(std::move(group)), ambient_(ambient), order_(group_->order()), verts_(std::move(vertices)),
      in_(static_cast<std::size_t>(ambient), 0),
      dest_(static_cast<std::size_t>(ambient) * static_cast<std::size_t>(order_), -1) {
    std::sort(verts_.begin(), verts_.end());
    for (int v : verts_) {
        if (v < 0 || v >= ambient_) throw domain_error("graph vertex out of range");
        in_[static_cast<std::size_t>(v)] = 1;
    }
}

void GammaGraph::add_edge(int x, int g, int y) {
    if (!has_vertex(x) || !has_vertex(y)) throw domain_error("graph edge endpoint is not a vertex");
    if (g < 0 || g >= order_) throw domain_error("graph edge label out of range");
    int& slot = dest_[static_cast<std::size_t>(x) * order_ + g];
    if (slot != -1 && slot != y) throw domain_error("second destination for the same (vertex,label)");
    slot = y;
}

int GammaGraph::degree_count(int x) const {
    int c = 0;
    for (int g = 0; g < order_; ++g)
        if (edge(x, g) >= 0) ++c;
    return c;
}

int GammaGraph::domain_count(int g) const {
    int c = 0;
    for (int x : verts_)
        if (edge(x, g) >= 0) ++c;
    return c;
}

long long GammaGraph::edge_count() const {
    long long c = 0;
    for (int x : verts_) c += degree_count(x);
    return c;
}

GammaGraph function_graph(const GroupMap& f) {
    std::vector<int> verts(static_cast<std::size_t>(f.degree()));
    std::iota(verts.begin(), verts.end(), 0);
    GammaGraph x(f.group(), f.degree(), std::move(verts));
    for (int v = 0; v < f.degree(); ++v)
        for (int g = 0; g < f.group()->order(); ++g) x.add_edge(v, g, f.apply(g, v));
    return x;
}

std::vector<int> supporters(const GroupMap& f, int x, int g, int y) {
    const auto& grp = *f.group();
    if (x < 0 || x >= f.degree() || y < 0 || y >= f.degree()) throw domain_error("supporter endpoint out of range");
    std::vector<int> out;
    for (int t = 0; t < grp.order(); ++t)
        if (f.apply(t, f.apply(grp.mul(grp.inv(t), g), x)) == y) out.push_back(t);
    return out;
}

WeightTable::WeightTable(const GroupMap& f) : order_(f.group()->order()) {
    const auto& grp = *f.group();
    const int n = f.degree();
    const int m = order_;
    fcount_.assign(static_cast<std::size_t>(n) * m, 0);
    mdest_.assign(static_cast<std::size_t>(n) * m, -1);
    mcount_.assign(static_cast<std::size_t>(n) * m, 0);

    std::vector<int> tally(static_cast<std::size_t>(n), 0);
    std::vector<int> touched;
    touched.reserve(static_cast<std::size_t>(m));
    for (int g = 0; g < m; ++g) {
        // precompute t^-1 g per voter
        std::vector<int> tg(static_cast<std::size_t>(m));
        for (int t = 0; t < m; ++t) tg[static_cast<std::size_t>(t)] = grp.mul(grp.inv(t), g);
        for (int x = 0; x < n; ++x) {
            touched.clear();
            int best = -1;
            int best_count = 0;
            for (int t = 0; t < m; ++t) {
                int y = f.apply(t, f.apply(tg[static_cast<std::size_t>(t)], x));
                int& c = tally[static_cast<std::size_t>(y)];
                if (c == 0) touched.push_back(y);
                ++c;
                if (c > best_count) {
                    best_count = c;
                    best = y;
                }
            }
            const std::size_t i = idx(x, g);
            fcount_[i] = tally[static_cast<std::size_t>(f.apply(g, x))];
            mdest_[i] = best;
            mcount_[i] = best_count;
            for (int y : touched) tally[static_cast<std::size_t>(y)] = 0;
        }
    }
}

GroupoidCheck check_groupoid(const GammaGraph& x) {
    const auto& grp = *x.group();
    for (int v : x.vertices()) {
        for (int g = 0; g < grp.order(); ++g) {
            int w = x.edge(v, g);
            if (w < 0) continue;
            if (x.edge(w, grp.inv(g)) != v) {
                return {false, "symmetry fails at edge (" + std::to_string(v) + " -" + std::to_string(g) + "-> " +
                                   std::to_string(w) + "): reverse with inverse label missing"};
            }
        }
    }
    for (int v : x.vertices()) {
        for (int g1 = 0; g1 < grp.order(); ++g1) {
            int y = x.edge(v, g1);
            if (y < 0) continue;
            for (int g2 = 0; g2 < grp.order(); ++g2) {
                int z = x.edge(y, g2);
                if (z < 0) continue;
                if (x.edge(v, grp.mul(g2, g1)) != z) {
                    return {false, "triangle fails at " + std::to_string(v) + " -" + std::to_string(g1) + "-> " +
                                       std::to_string(y) + " -" + std::to_string(g2) + "-> " + std::to_string(z) +
                                       ": composite edge missing or different"};
                }
            }
        }
    }
    return {};
}

std::vector<std::vector<int>> components(const GammaGraph& x) {
    GroupoidCheck chk = check_groupoid(x);
    if (!chk.ok) throw domain_error("components need a groupoid: " + chk.violation);
    const int a = x.ambient();
    std::vector<int> comp(static_cast<std::size_t>(a), -1);
    std::vector<std::vector<int>> out;
    for (int v : x.vertices()) {
        if (comp[static_cast<std::size_t>(v)] >= 0) continue;
        int id = static_cast<int>(out.size());
        std::vector<int> stack{v};
        std::vector<int> members;
        comp[static_cast<std::size_t>(v)] = id;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            members.push_back(u);
            for (int g = 0; g < x.group()->order(); ++g) {
                int w = x.edge(u, g);
                if (w >= 0 && comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    // Out-degree is constant inside each component of a groupoid.
    for (const auto& c : out) {
        int d0 = x.degree_count(c.front());
        for (int v : c)
            if (x.degree_count(v) != d0)
                throw invariant_error("out-degree not constant on a groupoid component");
    }
    return out;
}

Subgroup stabilizer(const GammaGraph& x, int vertex) {
    if (!x.has_vertex(vertex)) throw domain_error("stabilizer of a non-vertex");
    std::vector<int> loops;
    for (int g = 0; g < x.group()->order(); ++g)
        if (x.edge(vertex, g) == vertex) loops.push_back(g);
    return subgroup_from_elements(x.group(), std::move(loops));
}

namespace {

struct LevelBounds {
    // Lower bound (1 - coef_inf * d_inf / eps) n on every |D(g)| and
    // (1 - coef_mean * d_1 / eps) n on the mean of |D(g)| over g.
    Rational coef_inf;
    Rational coef_mean;
};

void assert_domain_bounds(const GammaGraph& graph, const char* level, const LevelBounds& b, const Rational& eps,
                          const DefectReport& d, int n,
                          const std::vector<int>& agree_domain_counts) {
    const int m = graph.group()->order();
    const Rational bound_inf = (Rational(1) - b.coef_inf * d.defect_inf / eps) * Rational(n);
    long long total_edges = 0;
    long long total_agree = 0;
    for (int g = 0; g < m; ++g) {
        const int dom = graph.domain_count(g);
        const int agree = agree_domain_counts[static_cast<std::size_t>(g)];
        total_edges += dom;
        total_agree += agree;
        if (Rational(agree) < bound_inf || Rational(dom) < bound_inf)
            throw invariant_error(std::string(level) + "-graph domain bound violated at label " + std::to_string(g));
    }
    const Rational bound_mean = (Rational(1) - b.coef_mean * d.defect_mean / eps) * Rational(n) * Rational(m);
    if (Rational(total_agree) < bound_mean || Rational(total_edges) < bound_mean)
        throw invariant_error(std::string(level) + "-graph mean domain bound violated");

    // Sum of out-degrees equals the integral of domain cardinalities.
    long long deg_sum = 0;
    for (int v : graph.vertices()) deg_sum += graph.degree_count(v);
    if (deg_sum != total_edges) throw invariant_error(std::string(level) + "-graph degree/domain sum mismatch");
}

} // namespace

Cascade build_cascade(const GroupMap& f, const Rational& eps) { return build_cascade(f, eps, defects(f)); }

Cascade build_cascade(const GroupMap& f, const Rational& eps, const DefectReport& report) {
    if (!(eps > Rational(0)) || eps > Rational(1, 6))
        throw domain_error("cascade needs 0 < eps <= 1/6, got " + eps.str());
    if (!is_symmetric(f))
        throw domain_error("cascade needs a symmetric map; run symmetrize first");

    const int n = f.degree();
    const int m = f.group()->order();
    WeightTable weights(f);

    // weight > threshold, both in exact integers: count/m > thr  <=>  count*thr.den > m*thr.num
    auto above = [m](int count, const Rational& thr) {
        return static_cast<long long>(count) * thr.den() > static_cast<long long>(m) * thr.num();
    };
    const Rational thr_x = Rational(1) - eps;
    const Rational thr_y = Rational(1) - Rational(2) * eps;

    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    GammaGraph x_eps(f.group(), n, all);
    GammaGraph x_2eps(f.group(), n, all);
    for (int v = 0; v < n; ++v) {
        for (int g = 0; g < m; ++g) {
            const int mc = weights.majority_count(v, g);
            const int md = weights.majority_dest(v, g);
            if (above(mc, thr_x)) x_eps.add_edge(v, g, md);
            if (above(mc, thr_y)) x_2eps.add_edge(v, g, md);
        }
    }

    std::vector<int> y_verts;
    for (int v = 0; v < n; ++v)
        if (3LL * x_eps.degree_count(v) > 2LL * m) y_verts.push_back(v); // deg > 2/3, strict
    GammaGraph y_eps(f.group(), n, y_verts);
    for (int v : y_verts)
        for (int g = 0; g < m; ++g) {
            int w = x_2eps.edge(v, g);
            if (w >= 0 && y_eps.has_vertex(w)) y_eps.add_edge(v, g, w);
        }

    std::vector<int> z_verts;
    for (int v : y_verts)
        if (2LL * y_eps.degree_count(v) >= static_cast<long long>(m)) z_verts.push_back(v); // deg >= 1/2
    GammaGraph z_eps(f.group(), n, z_verts);
    for (int v : z_verts)
        for (int g = 0; g < m; ++g) {
            int w = y_eps.edge(v, g);
            if (w >= 0 && z_eps.has_vertex(w)) z_eps.add_edge(v, g, w);
        }

    // --- everything below is verification -------------------------------

    // Inverse edge weights agree for a symmetric map.
    for (int v = 0; v < n; ++v)
        for (int g = 0; g < m; ++g) {
            int y = f.apply(g, v);
            if (weights.fn_count(v, g) !=
                static_cast<int>(supporters(f, y, f.group()->inv(g), v).size()))
                throw invariant_error("inverse edge weight mismatch");
        }

    GroupoidCheck cy = check_groupoid(y_eps);
    if (!cy.ok) throw invariant_error("Y_eps is not a groupoid: " + cy.violation);
    GroupoidCheck cz = check_groupoid(z_eps);
    if (!cz.ok) throw invariant_error("Z_eps is not a groupoid: " + cz.violation);

    // Z_eps must equal the union of the components of Y_eps of degree >= 1/2.
    {
        std::vector<char> in_z(static_cast<std::size_t>(n), 0);
        for (const auto& comp : components(y_eps)) {
            const int dc = y_eps.degree_count(comp.front());
            if (2LL * dc >= static_cast<long long>(m))
                for (int v : comp) in_z[static_cast<std::size_t>(v)] = 1;
        }
        for (int v = 0; v < n; ++v)
            if ((in_z[static_cast<std::size_t>(v)] != 0) != z_eps.has_vertex(v))
                throw invariant_error("Z_eps differs from the union of heavy components of Y_eps");
    }

    // Index-degree identity |V(C)| / [G:G_x] = deg(C) on every component with
    // positive degree, i.e. |V(C)| * |G_x| = deg_count(C) exactly.
    for (const GammaGraph* graph : {&y_eps, &z_eps}) {
        for (const auto& comp : components(*graph)) {
            const int dc = graph->degree_count(comp.front());
            if (dc == 0) continue;
            Subgroup stab = stabilizer(*graph, comp.front());
            if (static_cast<long long>(comp.size()) * stab.size() != dc)
                throw invariant_error("index-degree identity violated on a component");
        }
    }

    // Quantitative lemmas. Domains are checked both for all cascade edges and
    // for the subset that agrees with f (which is what the estimates below
    // are proved for).
    auto agree_counts = [&](const GammaGraph& graph, const Rational& thr) {
        std::vector<int> counts(static_cast<std::size_t>(m), 0);
        for (int g = 0; g < m; ++g) {
            int c = 0;
            for (int v : graph.vertices()) {
                int target = f.apply(g, v);
                if (graph.has_vertex(target) && above(weights.fn_count(v, g), thr)) ++c;
            }
            counts[static_cast<std::size_t>(g)] = c;
        }
        return counts;
    };

    assert_domain_bounds(x_eps, "X", {Rational(1), Rational(1)}, eps, report, n, agree_counts(x_eps, thr_x));
    assert_domain_bounds(y_eps, "Y", {Rational(13, 2), Rational(13, 2)}, eps, report, n, agree_counts(y_eps, thr_y));

    if (Rational(static_cast<int>(y_verts.size())) < (Rational(1) - Rational(3) * report.defect_mean / eps) * Rational(n))
        throw invariant_error("Y-graph vertex bound violated");

    if (report.defect_mean <= eps / Rational(13)) {
        assert_domain_bounds(z_eps, "Z", {Rational(39, 2), Rational(39, 2)}, eps, report, n, agree_counts(z_eps, thr_y));
        if (Rational(static_cast<int>(z_verts.size())) <
            (Rational(1) - Rational(16) * report.defect_mean / eps) * Rational(n))
            throw invariant_error("Z-graph vertex bound violated");
        Rational inv_deg_sum(0);
        for (int v : z_verts) inv_deg_sum += Rational(m, z_eps.degree_count(v));
        if (inv_deg_sum > (Rational(1) + Rational(13) * report.defect_mean / eps) * Rational(n))
            throw invariant_error("Z-graph inverse-degree sum bound violated");
    }

    return Cascade{eps, std::move(x_eps), std::move(y_eps), std::move(z_eps), std::move(weights), report};
}

} // namespace permstab
