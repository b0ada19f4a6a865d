#include "permstab/testers.hpp"

#include <algorithm>
#include <cmath>

#include "permstab/errors.hpp"

namespace permstab {

FiniteGroupMap::FiniteGroupMap(GroupPtr d, GroupPtr c, std::vector<int> imgs)
    : dom(std::move(d)), cod(std::move(c)), images(std::move(imgs)) {
    if (static_cast<int>(images.size()) != dom->order()) throw domain_error("map must be total on its domain");
    for (int v : images)
        if (v < 0 || v >= cod->order()) throw domain_error("map image out of range");
}

TestOutcome blr_test_once(const FiniteGroupMap& f, Rng& rng) {
    const int m = f.dom->order();
    TestOutcome out;
    out.g1 = rng.below(m);
    out.g2 = rng.below(m);
    int lhs = f.images[static_cast<std::size_t>(f.dom->mul(out.g1, out.g2))];
    int rhs = f.cod->mul(f.images[static_cast<std::size_t>(out.g1)], f.images[static_cast<std::size_t>(out.g2)]);
    out.accept = lhs == rhs;
    return out;
}

TestOutcome blr_test_once(const GroupMap& f, Rng& rng) {
    const int m = f.group()->order();
    TestOutcome out;
    out.g1 = rng.below(m);
    out.g2 = rng.below(m);
    const Perm& lhs = f.at(f.group()->mul(out.g1, out.g2));
    out.accept = lhs == compose(f.at(out.g1), f.at(out.g2));
    return out;
}

TestOutcome sym_test_once(const GroupMap& f, Rng& rng) {
    const int m = f.group()->order();
    TestOutcome out;
    out.g1 = rng.below(m);
    out.g2 = rng.below(m);
    out.x = rng.below(f.degree());
    out.accept = f.apply(f.group()->mul(out.g1, out.g2), out.x) == f.apply(out.g1, f.apply(out.g2, out.x));
    return out;
}

Rational rejection_probability_exact(const GroupMap& f) {
    const auto& g = *f.group();
    const int m = g.order();
    const int n = f.degree();
    long long violating = 0;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            const Perm& lhs = f.at(g.mul(a, b));
            const Perm& fa = f.at(a);
            const Perm& fb = f.at(b);
            for (int x = 0; x < n; ++x)
                if (lhs(x) != fa(fb(x))) ++violating;
        }
    return Rational(violating, static_cast<std::int64_t>(m) * m * n);
}

Rational blr_rejection_probability_exact(const FiniteGroupMap& f) {
    const int m = f.dom->order();
    long long violating = 0;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            int lhs = f.images[static_cast<std::size_t>(f.dom->mul(a, b))];
            int rhs = f.cod->mul(f.images[static_cast<std::size_t>(a)], f.images[static_cast<std::size_t>(b)]);
            if (lhs != rhs) ++violating;
        }
    return Rational(violating, static_cast<std::int64_t>(m) * m);
}

long long amplification_iterations(const Rational& eps, const Rational& alpha, const Rational& rate_denominator) {
    if (!(eps > Rational(0)) || eps > Rational(1)) throw domain_error("eps must be in (0, 1]");
    if (!(alpha > Rational(0)) || !(alpha < Rational(1))) throw domain_error("alpha must be in (0, 1)");
    const double rate = (eps / rate_denominator).to_double();
    const double k = std::log(alpha.to_double()) / std::log1p(-rate);
    return static_cast<long long>(std::ceil(k));
}

AmplifiedOutcome amplified_test(const GroupMap& f, const Rational& eps, const Rational& alpha, Rng& rng,
                                const Rational& rate_denominator) {
    AmplifiedOutcome out;
    out.iterations = amplification_iterations(eps, alpha, rate_denominator);
    for (long long i = 0; i < out.iterations; ++i) {
        TestOutcome t = sym_test_once(f, rng);
        if (!t.accept) {
            out.accept = false;
            out.witness = t;
            return out;
        }
    }
    return out;
}

TestStats monte_carlo(const GroupMap& f, long long samples, Rng& rng) {
    if (samples < 1) throw domain_error("need at least one sample");
    TestStats stats;
    stats.samples = samples;
    stats.batch_size = std::max<long long>(1, std::min<long long>(samples, 10000));
    const long long batches = (samples + stats.batch_size - 1) / stats.batch_size;
    for (long long b = 0; b < batches; ++b) {
        Rng stream = rng.split(static_cast<std::uint64_t>(b));
        const long long lo = b * stats.batch_size;
        const long long hi = std::min(samples, lo + stats.batch_size);
        long long rejected = 0;
        for (long long i = lo; i < hi; ++i)
            if (!sym_test_once(f, stream).accept) ++rejected;
        stats.batch_rejections.push_back(rejected);
        stats.rejections += rejected;
    }
    const double p = static_cast<double>(stats.rejections) / static_cast<double>(samples);
    stats.estimate = p;
    const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
    stats.confidence_radius = std::max(3.0 * sigma, 10.0 / static_cast<double>(samples));
    return stats;
}

} // namespace permstab
