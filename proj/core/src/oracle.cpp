#include "permstab/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "permstab/errors.hpp"

namespace permstab {

namespace {

std::vector<int> greedy_generators(const FiniteGroup& g) {
    GroupPtr ptr = g.shared_from_this();
    std::vector<int> gens;
    Subgroup closure{ptr, {g.identity()}};
    for (int a = 0; a < g.order(); ++a) {
        if (closure.contains(a)) continue;
        gens.push_back(a);
        closure = subgroup_generated(ptr, gens);
        if (closure.size() == g.order()) break;
    }
    return gens;
}

// Every element as a product of generators, by breadth-first search.
std::vector<std::vector<int>> generator_words(const FiniteGroup& g, const std::vector<int>& gens) {
    std::vector<std::vector<int>> word(static_cast<std::size_t>(g.order()));
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    seen[static_cast<std::size_t>(g.identity())] = 1;
    std::vector<int> frontier{g.identity()};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int e : frontier) {
            for (std::size_t i = 0; i < gens.size(); ++i) {
                int to = g.mul(e, gens[i]);
                if (!seen[static_cast<std::size_t>(to)]) {
                    seen[static_cast<std::size_t>(to)] = 1;
                    word[static_cast<std::size_t>(to)] = word[static_cast<std::size_t>(e)];
                    word[static_cast<std::size_t>(to)].push_back(static_cast<int>(i));
                    next.push_back(to);
                }
            }
        }
        frontier = std::move(next);
    }
    return word;
}

std::vector<Perm> all_perms(int degree, long long budget) {
    long long count = 1;
    for (int i = 2; i <= degree; ++i) {
        if (count > budget / i)
            throw budget_error("enumerating Sym(" + std::to_string(degree) + ") exceeds the budget of " +
                               std::to_string(budget));
        count *= i;
    }
    std::vector<int> cur(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) cur[static_cast<std::size_t>(i)] = i;
    std::vector<Perm> out;
    out.reserve(static_cast<std::size_t>(count));
    do {
        out.push_back(Perm(cur));
    } while (std::next_permutation(cur.begin(), cur.end()));
    return out;
}

bool order_divides(const Perm& p, int order) {
    return power(p, order).is_identity();
}

} // namespace

long long enumerate_homomorphisms(const GroupPtr& group, int degree,
                                  const std::function<void(const GroupMap&)>& yield, long long budget) {
    const FiniteGroup& g = *group;
    const int m = g.order();
    const std::vector<int> gens = greedy_generators(g);
    const std::vector<std::vector<int>> words = generator_words(g, gens);

    if (gens.empty()) { // trivial group
        yield(GroupMap::trivial(group, degree));
        return 1;
    }

    const std::vector<Perm> sym = all_perms(degree, budget);
    std::vector<std::vector<int>> candidates(gens.size());
    long long estimate = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const int ord = g.element_order(gens[i]);
        for (std::size_t s = 0; s < sym.size(); ++s)
            if (order_divides(sym[s], ord)) candidates[i].push_back(static_cast<int>(s));
        const auto size = static_cast<long long>(candidates[i].size());
        if (size > 0 && estimate > budget / size)
            throw budget_error("homomorphism search space estimate exceeds the budget of " + std::to_string(budget));
        estimate *= size;
    }

    long long found = 0;
    std::vector<int> choice(gens.size(), 0);
    std::vector<Perm> table(static_cast<std::size_t>(m), Perm::identity(degree));

    // Depth-first over candidate tuples, lexicographic; each complete tuple is
    // extended along generator words and verified against the whole table.
    std::function<void(std::size_t)> dfs = [&](std::size_t level) {
        if (level == gens.size()) {
            for (int e = 0; e < m; ++e) {
                Perm acc = Perm::identity(degree);
                for (int gi : words[static_cast<std::size_t>(e)])
                    acc = compose(acc, sym[static_cast<std::size_t>(candidates[static_cast<std::size_t>(gi)]
                                              [static_cast<std::size_t>(choice[static_cast<std::size_t>(gi)])])]);
                table[static_cast<std::size_t>(e)] = std::move(acc);
            }
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b) {
                    if (!(compose(table[static_cast<std::size_t>(a)], table[static_cast<std::size_t>(b)]) ==
                          table[static_cast<std::size_t>(g.mul(a, b))]))
                        return;
                }
            ++found;
            yield(GroupMap(group, degree, table));
            return;
        }
        for (std::size_t c = 0; c < candidates[level].size(); ++c) {
            choice[level] = static_cast<int>(c);
            dfs(level + 1);
        }
    };
    dfs(0);
    return found;
}

std::vector<GroupMap> all_homomorphisms(const GroupPtr& group, int degree, long long budget) {
    std::vector<GroupMap> out;
    enumerate_homomorphisms(group, degree, [&](const GroupMap& h) { out.push_back(h); }, budget);
    return out;
}

NearestHom nearest_homomorphism(const GroupMap& f, int n_max, long long budget) {
    if (n_max < f.degree()) throw domain_error("n_max below the degree of the map");
    bool have = false;
    GroupMap best = GroupMap::trivial(f.group(), f.degree());
    Rational best_d(2);
    int best_n = -1;
    for (int n = f.degree(); n <= n_max; ++n) {
        enumerate_homomorphisms(f.group(), n, [&](const GroupMap& h) {
            MapDistance d = distance(f, h);
            bool take = false;
            if (!have || d.d_inf < best_d) take = true;
            else if (d.d_inf == best_d && n == best_n) {
                for (int g = 0; g < f.group()->order(); ++g) {
                    if (h.at(g) == best.at(g)) continue;
                    take = h.at(g) < best.at(g);
                    break;
                }
            }
            if (take) {
                have = true;
                best = h;
                best_d = d.d_inf;
                best_n = n;
            }
        }, budget);
    }
    if (!have) throw domain_error("no homomorphism found in range"); // unreachable: trivial hom always exists
    MapDistance d = distance(f, best);
    return NearestHom{std::move(best), best_n, d.d_inf, d.d_mean};
}

std::vector<double> intertwiner_projection(const GroupMap& h, const GroupMap& f, const std::vector<double>& t) {
    const int a = h.degree();
    const int b = f.degree();
    const int m = f.group()->order();
    if (static_cast<int>(t.size()) != a * b) throw domain_error("matrix shape mismatch");
    std::vector<double> out(t.size(), 0.0);
    for (int g = 0; g < m; ++g) {
        const int ginv = f.group()->inv(g);
        const Perm& fi = f.at(ginv);
        const Perm& hi = h.at(ginv);
        for (int y = 0; y < b; ++y)
            for (int x = 0; x < a; ++x)
                out[static_cast<std::size_t>(y) * a + x] += t[static_cast<std::size_t>(fi(y)) * a + hi(x)];
    }
    for (double& v : out) v /= static_cast<double>(m);
    return out;
}

bool is_transitive(const GroupMap& f) {
    std::vector<char> seen(static_cast<std::size_t>(f.degree()), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int g = 0; g < f.group()->order(); ++g) {
            int y = f.apply(g, x);
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                ++count;
                stack.push_back(y);
            }
        }
    }
    return count == f.degree();
}

IntertwinerCheck intertwiner_min_distance(const GroupMap& h, const GroupMap& f) {
    if (h.group().get() != f.group().get() && !h.group()->same_table(*f.group()))
        throw domain_error("maps over different groups");
    if (h.degree() + 1 != f.degree())
        throw domain_error("expected degrees n-1 and n, got " + std::to_string(h.degree()) + " and " +
                           std::to_string(f.degree()));
    if (!is_homomorphism(h) || !is_homomorphism(f)) throw domain_error("both maps must be homomorphisms");
    if (!is_transitive(f)) throw domain_error("the larger action must be transitive");

    const int a = h.degree();
    const int b = f.degree();
    std::vector<double> t0(static_cast<std::size_t>(a) * b, 0.0);
    for (int x = 0; x < a; ++x) t0[static_cast<std::size_t>(x) * a + x] = 1.0;

    std::vector<double> p = intertwiner_projection(h, f, t0);
    double dist2 = 0.0;
    for (std::size_t i = 0; i < t0.size(); ++i) {
        const double d = t0[i] - p[i];
        dist2 += d * d;
    }
    IntertwinerCheck out;
    out.n = b;
    out.distance = std::sqrt(dist2);
    out.bound = std::sqrt(static_cast<double>(b - 1) / 2.0);
    if (out.distance < out.bound - 1e-9)
        throw invariant_error("intertwiner distance fell below sqrt((n-1)/2)");
    return out;
}

bool markov_bound_check(const std::vector<Rational>& values, const Rational& theta) {
    if (!(theta > Rational(0))) throw domain_error("theta must be positive");
    const auto m = static_cast<std::int64_t>(values.size());
    if (m == 0) return true;
    Rational sum(0);
    std::int64_t count = 0;
    for (const Rational& v : values) {
        if (v < Rational(0) || v > Rational(1)) throw domain_error("values must lie in [0,1]");
        sum += v;
        if (v > Rational(1) - theta) ++count;
    }
    const Rational mean = sum / Rational(m);
    const Rational bound = (Rational(1) - (Rational(1) - mean) / theta) * Rational(m);
    return Rational(count) >= bound;
}

} // namespace permstab
