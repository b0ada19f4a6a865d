#include "permstab/group_map.hpp"

#include <algorithm>

#include "permstab/errors.hpp"

namespace permstab {

GroupMap::GroupMap(GroupPtr group, int degree, std::vector<Perm> table)
    : group_(std::move(group)), degree_(degree), table_(std::move(table)) {
    if (!group_) throw domain_error("map needs a group");
    if (static_cast<int>(table_.size()) != group_->order())
        throw domain_error("map table length " + std::to_string(table_.size()) + " != group order " +
                           std::to_string(group_->order()));
    for (const Perm& p : table_)
        if (p.degree() != degree_)
            throw domain_error("map entry degree " + std::to_string(p.degree()) + " != " + std::to_string(degree_));
}

GroupMap GroupMap::with_entry(int g, Perm p) const {
    std::vector<Perm> t = table_;
    t[static_cast<std::size_t>(g)] = std::move(p);
    return GroupMap(group_, degree_, std::move(t));
}

GroupMap GroupMap::trivial(GroupPtr group, int degree) {
    std::vector<Perm> t(static_cast<std::size_t>(group->order()), Perm::identity(degree));
    return GroupMap(std::move(group), degree, std::move(t));
}

GroupMap GroupMap::regular(const GroupPtr& group) {
    Subgroup triv{group, {group->identity()}};
    return coset_action(left_cosets(triv));
}

GroupMap GroupMap::coset_action(const CosetSpace& cosets) {
    const GroupPtr& group = cosets.subgroup.parent;
    const int n = cosets.index();
    std::vector<Perm> t;
    t.reserve(static_cast<std::size_t>(group->order()));
    for (int g = 0; g < group->order(); ++g) {
        std::vector<int> img(static_cast<std::size_t>(n));
        for (int c = 0; c < n; ++c) img[static_cast<std::size_t>(c)] = cosets.act(g, c);
        t.push_back(Perm(std::move(img)));
    }
    return GroupMap(group, n, std::move(t));
}

DefectReport defects(const GroupMap& f) {
    const auto& g = *f.group();
    const int m = g.order();
    const int n = f.degree();
    long long total_disagreements = 0;
    int worst = -1;
    std::pair<int, int> argmax{0, 0};
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            const Perm& lhs = f.at(g.mul(a, b));
            const Perm& fa = f.at(a);
            const Perm& fb = f.at(b);
            int diff = 0;
            for (int x = 0; x < n; ++x)
                if (lhs(x) != fa(fb(x))) ++diff;
            total_disagreements += diff;
            if (diff > worst) {
                worst = diff;
                argmax = {a, b};
            }
        }
    }
    DefectReport r;
    r.defect_inf = Rational(worst, n);
    r.defect_mean = Rational(total_disagreements, static_cast<std::int64_t>(m) * m * n);
    r.argmax = argmax;
    if (r.defect_mean > r.defect_inf) throw invariant_error("mean defect exceeded uniform defect");
    return r;
}

MapDistance distance(const GroupMap& f, const GroupMap& h) {
    MapDistance d;
    if (f.group().get() != h.group().get() && !f.group()->same_table(*h.group())) {
        d.infinite = true; // maps over different groups have distance infinity
        return d;
    }
    const int m = f.group()->order();
    const int N = std::max(f.degree(), h.degree());
    long long total = 0;
    long long worst = -1;
    for (int g = 0; g < m; ++g) {
        Rational dist = hamming(f.at(g), h.at(g)); // denominator is always N
        long long count = dist.num() * (N / dist.den());
        total += count;
        worst = std::max(worst, count);
    }
    d.d_inf = Rational(worst, N);
    d.d_mean = Rational(total, static_cast<std::int64_t>(m) * N);
    return d;
}

bool is_homomorphism(const GroupMap& f) {
    const auto& g = *f.group();
    const int m = g.order();
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            const Perm& lhs = f.at(g.mul(a, b));
            const Perm& fa = f.at(a);
            const Perm& fb = f.at(b);
            for (int x = 0; x < f.degree(); ++x)
                if (lhs(x) != fa(fb(x))) return false;
        }
    return true;
}

bool is_symmetric(const GroupMap& f) {
    const auto& g = *f.group();
    if (!f.at(g.identity()).is_identity()) return false;
    for (int a = 0; a < g.order(); ++a)
        if (!(f.at(g.inv(a)) == f.at(a).inverse())) return false;
    return true;
}

GroupMap symmetrize(const GroupMap& f, const Rational& m2) {
    const auto& g = *f.group();
    const int m = g.order();
    std::vector<Perm> t;
    t.reserve(static_cast<std::size_t>(m));
    for (int a = 0; a < m; ++a) {
        if (a == g.identity()) {
            t.push_back(Perm::identity(f.degree()));
        } else if (g.inv(a) == a) {
            t.push_back(nearest_involution(f.at(a)));
        } else if (a < g.inv(a)) {
            t.push_back(f.at(a)); // the selector set B: smaller index of each pair
        } else {
            t.push_back(f.at(g.inv(a)).inverse());
        }
    }
    GroupMap out(f.group(), f.degree(), std::move(t));

    const Rational c = Rational(2) * std::max(Rational(1), m2);
    DefectReport before = defects(f);
    DefectReport after = defects(out);
    MapDistance moved = distance(f, out);
    auto require = [](bool ok, const char* what) {
        if (!ok) throw invariant_error(std::string("symmetrization bound violated: ") + what);
    };
    require(moved.d_inf <= c * before.defect_inf, "d_inf(f,f') <= C*defect_inf(f)");
    require(moved.d_mean <= (c + 1) * before.defect_mean, "d_1(f,f') <= (C+1)*defect_1(f)");
    require(after.defect_inf <= (Rational(3) * c + 1) * before.defect_inf, "defect_inf(f') <= (3C+1)*defect_inf(f)");
    require(after.defect_mean <= (Rational(3) * c + 4) * before.defect_mean, "defect_1(f') <= (3C+4)*defect_1(f)");
    return out;
}

GroupMap random_map(const GroupPtr& group, int degree, Rng& rng) {
    std::vector<Perm> t;
    t.reserve(static_cast<std::size_t>(group->order()));
    for (int g = 0; g < group->order(); ++g) t.push_back(random_perm(degree, rng));
    return GroupMap(group, degree, std::move(t));
}

GroupMap random_action(const GroupPtr& group, int degree, Rng& rng) {
    std::vector<Subgroup> subs = small_generated_subgroups(group);
    const int m = group->order();
    // Fill [degree] with orbits: pick subgroups whose index still fits,
    // falling back to fixed points (index 1) when nothing else fits.
    std::vector<Perm> t(static_cast<std::size_t>(m), Perm::identity(degree));
    std::vector<std::vector<int>> images(static_cast<std::size_t>(m),
                                         std::vector<int>(static_cast<std::size_t>(degree)));
    int base = 0;
    while (base < degree) {
        const int room = degree - base;
        std::vector<const Subgroup*> fitting;
        for (const Subgroup& h : subs)
            if (h.index() <= room) fitting.push_back(&h);
        const Subgroup& h = *fitting[static_cast<std::size_t>(rng.below(static_cast<int>(fitting.size())))];
        CosetSpace cs = left_cosets(h);
        for (int g = 0; g < m; ++g)
            for (int c = 0; c < cs.index(); ++c)
                images[static_cast<std::size_t>(g)][static_cast<std::size_t>(base + c)] = base + cs.act(g, c);
        base += cs.index();
    }
    for (int g = 0; g < m; ++g) t[static_cast<std::size_t>(g)] = Perm(images[static_cast<std::size_t>(g)]);
    return GroupMap(group, degree, std::move(t));
}

GroupMap perturb(const GroupMap& f, int corruptions, Rng& rng) {
    if (f.degree() < 2) throw domain_error("cannot perturb a map of degree < 2");
    GroupMap out = f;
    for (int i = 0; i < corruptions; ++i) {
        int g = rng.below(f.group()->order());
        out = out.with_entry(g, compose(out.at(g), random_transposition(f.degree(), rng)));
    }
    return out;
}

} // namespace permstab
