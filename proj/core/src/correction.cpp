#include "permstab/correction.hpp"

#include <algorithm>

#include "permstab/errors.hpp"

namespace permstab {

namespace {

const Rational kFallbackThreshold(1, 78);

void check(CorrectionReport& report, std::string name, const Rational& lhs, const Rational& rhs) {
    report.bounds.push_back(BoundCheck{name, lhs, rhs});
    if (lhs > rhs)
        throw correction_invariant_error(
            "correction bound '" + name + "' violated: " + lhs.str() + " > " + rhs.str(), report);
}

// Recorded in the report but never enforced; see the V1 remark below.
void record(CorrectionReport& report, std::string name, const Rational& lhs, const Rational& rhs) {
    report.bounds.push_back(BoundCheck{name, lhs, rhs});
}

// Smallest count of f-agreeing Z-edges over all labels, plus their total.
struct DomainCounts {
    std::vector<int> agree; // per label
    std::vector<int> all;   // per label
};

DomainCounts z_domain_counts(const GammaGraph& z, const GroupMap& f) {
    const int m = f.group()->order();
    DomainCounts d;
    d.agree.assign(static_cast<std::size_t>(m), 0);
    d.all.assign(static_cast<std::size_t>(m), 0);
    for (int g = 0; g < m; ++g) {
        for (int v : z.vertices()) {
            int w = z.edge(v, g);
            if (w < 0) continue;
            ++d.all[static_cast<std::size_t>(g)];
            if (w == f.apply(g, v)) ++d.agree[static_cast<std::size_t>(g)];
        }
    }
    return d;
}

} // namespace

CorrectionResult correct_symmetric(const GroupMap& f) {
    if (!is_symmetric(f)) throw domain_error("correct_symmetric needs a symmetric map; run symmetrize first");
    const int n = f.degree();
    const int m = f.group()->order();
    const DefectReport rep = defects(f);

    CorrectionReport report;
    report.n = n;
    report.defect_inf = rep.defect_inf;
    report.defect_mean = rep.defect_mean;

    if (rep.defect_mean > kFallbackThreshold) {
        GroupMap h = GroupMap::trivial(f.group(), n);
        MapDistance dist = distance(h, f);
        report.big_n = n;
        report.d_inf = dist.d_inf;
        report.d_mean = dist.d_mean;
        report.used_trivial_fallback = true;
        check(report, "N-upper-mean", Rational(n), (Rational(1) + Rational(174) * rep.defect_mean) * Rational(n));
        check(report, "d-inf", dist.d_inf, Rational(291) * rep.defect_inf);
        check(report, "d-mean", dist.d_mean, Rational(291) * rep.defect_mean);
        return CorrectionResult{std::move(h), {}, {}, std::move(report)};
    }

    Cascade cascade = build_cascade(f, Rational(1, 6), rep);
    const GammaGraph& z = cascade.z_eps;
    const std::vector<std::vector<int>> comps = components(z);

    // Per-component stabilizer coset spaces; base point = minimal vertex.
    std::vector<CosetSpace> spaces;
    std::vector<int> offset; // first V1 slot of each component
    int v1_total = 0;
    for (const auto& comp : comps) {
        Subgroup stab = stabilizer(z, comp.front());
        spaces.push_back(left_cosets(stab));
        offset.push_back(v1_total);
        v1_total += spaces.back().index();
    }

    // |V1| = sum over V(Z) of deg^-1, exactly.
    {
        Rational inv_sum(0);
        for (int v : z.vertices()) inv_sum += Rational(m, z.degree_count(v));
        if (inv_sum != Rational(v1_total)) throw invariant_error("|V1| != sum of inverse degrees");
    }

    // |V1| >= |V(Z)| is what the distance and size guarantees rest on (every
    // inverse degree is >= 1), and it makes N >= n unconditional. The
    // stronger |V1| >= n is recorded for the report but can genuinely fail:
    // a corrupted fixed point whose component drops out of the core takes
    // its one-point coset space with it (e.g. Z/3 on 38 points with one
    // symmetric transposition corruption touching two fixed points).
    check(report, "V1-covers-core", Rational(z.vertex_count()), Rational(v1_total));
    record(report, "V1-lower", Rational(n), Rational(v1_total));
    check(report, "V1-upper", Rational(v1_total), (Rational(1) + Rational(78) * rep.defect_mean) * Rational(n));
    check(report, "Z-vertices-lower", (Rational(1) - Rational(96) * rep.defect_mean) * Rational(n),
          Rational(z.vertex_count()));

    DomainCounts dom = z_domain_counts(z, f);
    {
        long long agree_total = 0;
        int agree_min = n;
        int all_min = n;
        for (int g = 0; g < m; ++g) {
            agree_total += dom.agree[static_cast<std::size_t>(g)];
            agree_min = std::min(agree_min, dom.agree[static_cast<std::size_t>(g)]);
            all_min = std::min(all_min, dom.all[static_cast<std::size_t>(g)]);
        }
        const Rational lower_inf = (Rational(1) - Rational(117) * rep.defect_inf) * Rational(n);
        check(report, "DZ-inf-lower", lower_inf, Rational(std::min(agree_min, all_min)));
        const Rational lower_mean = (Rational(1) - Rational(117) * rep.defect_mean) * Rational(n);
        check(report, "DZ-mean-lower", lower_mean, Rational(agree_total, m));
    }

    // Embedding of each component into its coset space: phi(y) = gG_x for any
    // edge x -g-> y. Well-definedness and injectivity are asserted.
    const int big_n = v1_total + (n - z.vertex_count());
    report.big_n = big_n;

    std::vector<int> label(static_cast<std::size_t>(v1_total), -1); // V1 slot -> point of [N]
    std::vector<int> z_vertex_list = z.vertices();
    std::vector<int> phi_of_vertex(static_cast<std::size_t>(f.degree()), -1);

    for (std::size_t i = 0; i < comps.size(); ++i) {
        const auto& comp = comps[i];
        const CosetSpace& cs = spaces[i];
        const int base = comp.front();
        std::vector<char> coset_taken(static_cast<std::size_t>(cs.index()), 0);
        for (int y : comp) {
            int coset = -1;
            bool found = false;
            for (int g = 0; g < m; ++g) {
                if (z.edge(base, g) != y) continue;
                int c = cs.coset_of[static_cast<std::size_t>(g)];
                if (!found) {
                    coset = c;
                    found = true;
                } else if (coset != c) {
                    throw invariant_error("embedding not well defined: two labels give different cosets");
                }
            }
            if (!found) throw invariant_error("groupoid component lacks a direct edge from its base point");
            if (coset_taken[static_cast<std::size_t>(coset)]) throw invariant_error("embedding not injective");
            coset_taken[static_cast<std::size_t>(coset)] = 1;
            label[static_cast<std::size_t>(offset[i] + coset)] = y;
            phi_of_vertex[static_cast<std::size_t>(y)] = offset[i] + coset;
        }
    }

    // Points of V(Z) keep their labels; unhit coset slots get fresh labels
    // n, n+1, ... in (component, coset) order; [n] \ V(Z) stays fixed.
    int fresh = n;
    for (int slot = 0; slot < v1_total; ++slot)
        if (label[static_cast<std::size_t>(slot)] < 0) label[static_cast<std::size_t>(slot)] = fresh++;
    if (fresh != big_n) throw invariant_error("label assignment does not cover [N]");
    {
        std::vector<char> seen(static_cast<std::size_t>(big_n), 0);
        for (int slot = 0; slot < v1_total; ++slot) seen[static_cast<std::size_t>(label[static_cast<std::size_t>(slot)])] = 1;
        for (int x = 0; x < n; ++x)
            if (!z.has_vertex(x)) seen[static_cast<std::size_t>(x)] = 1;
        for (int x = 0; x < big_n; ++x)
            if (!seen[static_cast<std::size_t>(x)]) throw invariant_error("label assignment does not cover [N]");
    }

    std::vector<Perm> h_table;
    h_table.reserve(static_cast<std::size_t>(m));
    for (int g = 0; g < m; ++g) {
        std::vector<int> img(static_cast<std::size_t>(big_n));
        for (int x = 0; x < big_n; ++x) img[static_cast<std::size_t>(x)] = x; // [n] \ V(Z) stays put
        for (std::size_t i = 0; i < comps.size(); ++i) {
            const CosetSpace& cs = spaces[i];
            for (int c = 0; c < cs.index(); ++c) {
                int from = label[static_cast<std::size_t>(offset[i] + c)];
                int to = label[static_cast<std::size_t>(offset[i] + cs.act(g, c))];
                img[static_cast<std::size_t>(from)] = to;
            }
        }
        h_table.push_back(Perm(std::move(img)));
    }
    GroupMap h(f.group(), big_n, std::move(h_table));

    if (!is_homomorphism(h)) throw invariant_error("repaired map is not a homomorphism");

    // Z embeds in the function graph of h: every Z-edge is realized by h.
    for (int v : z.vertices())
        for (int g = 0; g < m; ++g) {
            int w = z.edge(v, g);
            if (w >= 0 && h.apply(g, v) != w) throw invariant_error("embedding is not a graph morphism");
        }

    // Per-element chain d(h(g), f(g)) <= (N - |D_Z(g)|) / N.
    for (int g = 0; g < m; ++g) {
        Rational lhs = hamming(h.at(g), f.at(g));
        Rational rhs = Rational(big_n - dom.agree[static_cast<std::size_t>(g)], big_n);
        if (lhs > rhs) throw invariant_error("per-element distance chain violated");
    }

    MapDistance dist = distance(h, f);
    report.d_inf = dist.d_inf;
    report.d_mean = dist.d_mean;
    check(report, "N-lower", Rational(n), Rational(big_n));
    check(report, "N-upper-mean", Rational(big_n), (Rational(1) + Rational(174) * rep.defect_mean) * Rational(n));
    check(report, "d-inf", dist.d_inf, Rational(291) * rep.defect_inf);
    check(report, "d-mean", dist.d_mean, Rational(291) * rep.defect_mean);

    std::vector<int> embedding;
    embedding.reserve(z_vertex_list.size());
    for (int v : z_vertex_list) embedding.push_back(label[static_cast<std::size_t>(phi_of_vertex[static_cast<std::size_t>(v)])]);

    return CorrectionResult{std::move(h), std::move(z_vertex_list), std::move(embedding), std::move(report)};
}

CorrectionResult correct(const GroupMap& f) {
    const DefectReport rep = defects(f);
    GroupMap fsym = symmetrize(f);

    CorrectionResult inner = correct_symmetric(fsym);

    CorrectionReport report;
    report.n = f.degree();
    report.big_n = inner.report.big_n;
    report.defect_inf = rep.defect_inf;
    report.defect_mean = rep.defect_mean;
    report.used_trivial_fallback = inner.report.used_trivial_fallback;

    // Stage records: how far symmetrization moved f, then the inner stage.
    DefectReport symrep = defects(fsym);
    MapDistance moved = distance(f, fsym);
    check(report, "sym:d-inf", moved.d_inf, Rational(2) * rep.defect_inf);
    check(report, "sym:d-mean", moved.d_mean, Rational(3) * rep.defect_mean);
    check(report, "sym:defect-inf", symrep.defect_inf, Rational(7) * rep.defect_inf);
    check(report, "sym:defect-mean", symrep.defect_mean, Rational(10) * rep.defect_mean);
    for (const BoundCheck& b : inner.report.bounds)
        report.bounds.push_back(BoundCheck{"core:" + b.name, b.lhs, b.rhs});

    MapDistance dist = distance(inner.h, f);
    report.d_inf = dist.d_inf;
    report.d_mean = dist.d_mean;
    const Rational n(f.degree());
    check(report, "d-inf", dist.d_inf, Rational(2039) * rep.defect_inf);
    check(report, "N-upper-inf", Rational(report.big_n), (Rational(1) + Rational(1218) * rep.defect_inf) * n);
    check(report, "d-mean", dist.d_mean, Rational(2913) * rep.defect_mean);
    check(report, "N-upper-mean", Rational(report.big_n), (Rational(1) + Rational(1740) * rep.defect_mean) * n);

    return CorrectionResult{std::move(inner.h), std::move(inner.z_vertices), std::move(inner.embedding),
                            std::move(report)};
}

CorrectionResult correct_via_quotient(const GroupMap& f, const Subgroup& normal) {
    if (normal.parent.get() != f.group().get() && !normal.parent->same_table(*f.group()))
        throw domain_error("subgroup belongs to a different group");
    int bad = -1;
    if (!is_normal(normal, &bad))
        throw domain_error("subgroup is not normal; conjugation by element " + std::to_string(bad) + " escapes it");

    const int n = f.degree();
    const DefectReport rep = defects(f);
    Rational delta_sub(0);
    for (int g : normal.elements) delta_sub = std::max(delta_sub, hamming_to_identity(f.at(g)));

    CosetSpace cs = left_cosets(normal);
    auto [qgroup, projection] = quotient(normal);

    std::vector<Perm> bar_table;
    bar_table.reserve(static_cast<std::size_t>(qgroup->order()));
    for (int c = 0; c < qgroup->order(); ++c) bar_table.push_back(f.at(cs.transversal[static_cast<std::size_t>(c)]));
    GroupMap fbar(qgroup, n, std::move(bar_table));

    CorrectionReport report;
    report.n = n;
    report.defect_inf = rep.defect_inf;
    report.defect_mean = rep.defect_mean;
    report.values.emplace_back("delta-subgroup", delta_sub);

    DefectReport bar_rep = defects(fbar);
    check(report, "quotient:defect-inf", bar_rep.defect_inf, Rational(2) * rep.defect_inf + delta_sub);

    CorrectionResult inner = correct(fbar);
    report.big_n = inner.report.big_n;
    report.used_trivial_fallback = inner.report.used_trivial_fallback;
    for (const BoundCheck& b : inner.report.bounds)
        report.bounds.push_back(BoundCheck{"quotient:" + b.name, b.lhs, b.rhs});

    std::vector<Perm> h_table;
    h_table.reserve(static_cast<std::size_t>(f.group()->order()));
    for (int g = 0; g < f.group()->order(); ++g) h_table.push_back(inner.h.at(projection[static_cast<std::size_t>(g)]));
    GroupMap h(f.group(), inner.h.degree(), std::move(h_table));
    if (!is_homomorphism(h)) throw invariant_error("pulled-back map is not a homomorphism");

    MapDistance dist = distance(h, f);
    report.d_inf = dist.d_inf;
    report.d_mean = dist.d_mean;
    check(report, "d-inf", dist.d_inf, Rational(4079) * rep.defect_inf + Rational(2040) * delta_sub);
    check(report, "N-upper", Rational(report.big_n),
          (Rational(1) + Rational(2436) * rep.defect_inf + Rational(1218) * delta_sub) * Rational(n));

    return CorrectionResult{std::move(h), std::move(inner.z_vertices), std::move(inner.embedding), std::move(report)};
}

} // namespace permstab
