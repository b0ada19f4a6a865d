#include "permstab/group.hpp"

#include <algorithm>
#include <set>

#include "permstab/errors.hpp"
#include "permstab/perm.hpp"
#include "permstab/rng.hpp"

namespace permstab {

namespace {

constexpr int kExhaustiveAssocLimit = 64;

void check_associativity(const std::vector<int>& mul, int m) {
    auto at = [&](int a, int b) { return mul[static_cast<std::size_t>(a) * m + b]; };
    auto check_triple = [&](int a, int b, int c) {
        if (at(a, at(b, c)) != at(at(a, b), c))
            throw domain_error("multiplication table is not associative at triple (" + std::to_string(a) +
                               "," + std::to_string(b) + "," + std::to_string(c) + ")");
    };
    if (m <= kExhaustiveAssocLimit) {
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                for (int c = 0; c < m; ++c) check_triple(a, b, c);
    } else {
        Rng rng(0x5eedA550C1A7EULL ^ static_cast<std::uint64_t>(m));
        const long long trials = 10LL * m * m;
        for (long long i = 0; i < trials; ++i) check_triple(rng.below(m), rng.below(m), rng.below(m));
    }
}

} // namespace

GroupPtr FiniteGroup::from_mul_table(const std::vector<std::vector<int>>& table, std::string name) {
    const int m = static_cast<int>(table.size());
    if (m == 0) throw domain_error("empty multiplication table");
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(m) * m);
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != m) throw domain_error("multiplication table is not square");
        for (int v : row) {
            if (v < 0 || v >= m) throw domain_error("multiplication table entry out of range: " + std::to_string(v));
            flat.push_back(v);
        }
    }

    auto at = [&](int a, int b) { return flat[static_cast<std::size_t>(a) * m + b]; };

    int identity = -1;
    for (int e = 0; e < m; ++e) {
        bool ok = true;
        for (int x = 0; x < m && ok; ++x) ok = at(e, x) == x && at(x, e) == x;
        if (ok) {
            identity = e;
            break;
        }
    }
    if (identity < 0) throw domain_error("multiplication table has no two-sided identity");

    std::vector<int> inv(static_cast<std::size_t>(m), -1);
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            if (at(a, b) == identity && at(b, a) == identity) {
                inv[static_cast<std::size_t>(a)] = b;
                break;
            }
        }
        if (inv[static_cast<std::size_t>(a)] < 0)
            throw domain_error("element " + std::to_string(a) + " has no two-sided inverse");
    }

    check_associativity(flat, m);

    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->order_ = m;
    g->identity_ = identity;
    g->mul_ = std::move(flat);
    g->inv_ = std::move(inv);
    g->name_ = std::move(name);
    return g;
}

GroupPtr FiniteGroup::cyclic(int m) {
    if (m < 1) throw domain_error("cyclic group order must be >= 1");
    std::vector<std::vector<int>> table(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % m;
    return from_mul_table(table, "Z" + std::to_string(m));
}

GroupPtr FiniteGroup::symmetric(int points) {
    if (points < 1 || points > 8) throw domain_error("symmetric group supported for 1..8 points");
    std::vector<int> base(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) base[static_cast<std::size_t>(i)] = i;
    std::vector<Perm> elems;
    std::vector<int> cur = base;
    do {
        elems.push_back(Perm(cur));
    } while (std::next_permutation(cur.begin(), cur.end()));

    const int m = static_cast<int>(elems.size());
    auto index_of = [&](const Perm& p) {
        auto it = std::lower_bound(elems.begin(), elems.end(), p,
                                   [](const Perm& a, const Perm& b) { return a < b; });
        return static_cast<int>(it - elems.begin());
    };
    std::vector<std::vector<int>> table(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                index_of(compose(elems[static_cast<std::size_t>(a)], elems[static_cast<std::size_t>(b)]));
    return from_mul_table(table, "S" + std::to_string(points));
}

int FiniteGroup::element_order(int g) const {
    if (g < 0 || g >= order_) throw domain_error("element index out of range");
    int k = 1;
    int acc = g;
    while (acc != identity_) {
        acc = mul(acc, g);
        ++k;
    }
    return k;
}

bool Subgroup::contains(int g) const {
    return std::binary_search(elements.begin(), elements.end(), g);
}

Subgroup subgroup_generated(const GroupPtr& group, const std::vector<int>& gens) {
    for (int g : gens)
        if (g < 0 || g >= group->order()) throw domain_error("generator index out of range");
    std::set<int> closure{group->identity()};
    std::vector<int> frontier{group->identity()};
    std::vector<int> seeds = gens;
    for (int g : gens) seeds.push_back(group->inv(g));
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier) {
            for (int s : seeds) {
                int y = group->mul(x, s);
                if (closure.insert(y).second) next.push_back(y);
            }
        }
        frontier = std::move(next);
    }
    return Subgroup{group, std::vector<int>(closure.begin(), closure.end())};
}

Subgroup subgroup_from_elements(const GroupPtr& group, std::vector<int> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    Subgroup h{group, std::move(elements)};
    if (!h.contains(group->identity())) throw domain_error("subgroup must contain the identity");
    for (int a : h.elements) {
        if (a < 0 || a >= group->order()) throw domain_error("subgroup element out of range");
        if (!h.contains(group->inv(a))) throw domain_error("subgroup not closed under inverse at " + std::to_string(a));
        for (int b : h.elements)
            if (!h.contains(group->mul(a, b)))
                throw domain_error("subgroup not closed under product at (" + std::to_string(a) + "," +
                                   std::to_string(b) + ")");
    }
    if (group->order() % h.size() != 0)
        throw invariant_error("subgroup size does not divide group order"); // unreachable for a real subgroup
    return h;
}

bool is_normal(const Subgroup& h, int* violating_conjugator) {
    const auto& g = *h.parent;
    for (int a = 0; a < g.order(); ++a) {
        for (int d : h.elements) {
            if (!h.contains(g.mul(g.mul(a, d), g.inv(a)))) {
                if (violating_conjugator) *violating_conjugator = a;
                return false;
            }
        }
    }
    return true;
}

CosetSpace left_cosets(const Subgroup& h) {
    const auto& g = *h.parent;
    const int m = g.order();
    std::vector<int> coset_of(static_cast<std::size_t>(m), -1);
    std::vector<int> transversal;
    for (int a = 0; a < m; ++a) {
        if (coset_of[static_cast<std::size_t>(a)] >= 0) continue;
        // a is minimal in its coset: smaller elements are already assigned.
        int c = static_cast<int>(transversal.size());
        transversal.push_back(a);
        for (int x : h.elements) coset_of[static_cast<std::size_t>(g.mul(a, x))] = c;
    }
    if (static_cast<int>(transversal.size()) * h.size() != m)
        throw invariant_error("cosets do not partition the group");
    return CosetSpace{h, std::move(transversal), std::move(coset_of)};
}

std::pair<GroupPtr, std::vector<int>> quotient(const Subgroup& normal) {
    int bad = -1;
    if (!is_normal(normal, &bad))
        throw domain_error("subgroup is not normal; conjugation by element " + std::to_string(bad) + " escapes it");
    const auto& g = *normal.parent;
    CosetSpace cs = left_cosets(normal);
    const int q = cs.index();
    std::vector<std::vector<int>> table(static_cast<std::size_t>(q), std::vector<int>(static_cast<std::size_t>(q)));
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                cs.coset_of[static_cast<std::size_t>(g.mul(cs.transversal[static_cast<std::size_t>(a)],
                                                           cs.transversal[static_cast<std::size_t>(b)]))];
    std::string qname = g.name().empty() ? "" : g.name() + "/H" + std::to_string(normal.size());
    GroupPtr qg = FiniteGroup::from_mul_table(table, qname);
    return {qg, cs.coset_of};
}

std::vector<Subgroup> small_generated_subgroups(const GroupPtr& group) {
    std::set<std::vector<int>> seen;
    std::vector<Subgroup> out;
    auto add = [&](const std::vector<int>& gens) {
        Subgroup h = subgroup_generated(group, gens);
        if (seen.insert(h.elements).second) out.push_back(std::move(h));
    };
    add({});
    for (int a = 0; a < group->order(); ++a) {
        add({a});
        for (int b = a + 1; b < group->order(); ++b) add({a, b});
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& x, const Subgroup& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x.elements < y.elements;
    });
    return out;
}

} // namespace permstab
