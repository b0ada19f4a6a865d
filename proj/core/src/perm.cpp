#include "permstab/perm.hpp"

#include <algorithm>

#include "permstab/errors.hpp"

namespace permstab {

Perm::Perm(std::vector<int> image) : img_(std::move(image)) {
    const int n = degree();
    if (n == 0) throw domain_error("permutation must have positive degree");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : img_) {
        if (v < 0 || v >= n) throw domain_error("permutation image out of range: " + std::to_string(v));
        if (seen[static_cast<std::size_t>(v)]) throw domain_error("permutation repeats value " + std::to_string(v));
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Perm Perm::identity(int degree) {
    std::vector<int> img(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) img[static_cast<std::size_t>(i)] = i;
    return Perm(std::move(img));
}

Perm Perm::inverse() const {
    std::vector<int> inv(img_.size());
    for (int x = 0; x < degree(); ++x) inv[static_cast<std::size_t>(img_[static_cast<std::size_t>(x)])] = x;
    Perm p;
    p.img_ = std::move(inv);
    return p;
}

bool Perm::is_identity() const {
    for (int x = 0; x < degree(); ++x)
        if (img_[static_cast<std::size_t>(x)] != x) return false;
    return true;
}

std::string Perm::str() const {
    std::string out;
    for (int x = 0; x < degree(); ++x) {
        if (x) out += ',';
        out += std::to_string(img_[static_cast<std::size_t>(x)]);
    }
    return out;
}

Perm Perm::parse(std::string_view text) {
    std::vector<int> img;
    std::size_t i = 0;
    while (i < text.size()) {
        std::size_t j = i;
        int v = 0;
        while (j < text.size() && text[j] >= '0' && text[j] <= '9') {
            v = v * 10 + (text[j] - '0');
            ++j;
        }
        if (j == i) throw parse_error("bad permutation text '" + std::string(text) + "'");
        img.push_back(v);
        i = j;
        if (i < text.size()) {
            if (text[i] != ',') throw parse_error("bad permutation text '" + std::string(text) + "'");
            ++i;
            if (i == text.size()) throw parse_error("trailing comma in permutation text");
        }
    }
    if (img.empty()) throw parse_error("empty permutation text");
    return Perm(std::move(img));
}

Perm compose(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree())
        throw domain_error("degree mismatch: " + std::to_string(a.degree()) + " vs " + std::to_string(b.degree()));
    std::vector<int> img(static_cast<std::size_t>(a.degree()));
    for (int x = 0; x < a.degree(); ++x) img[static_cast<std::size_t>(x)] = a(b(x));
    return Perm(std::move(img));
}

Perm power(const Perm& a, long long e) {
    Perm base = e < 0 ? a.inverse() : a;
    unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    Perm acc = Perm::identity(a.degree());
    while (k) {
        if (k & 1) acc = compose(acc, base);
        base = compose(base, base);
        k >>= 1;
    }
    return acc;
}

Rational hamming(const Perm& a, const Perm& b) {
    const Perm& small = a.degree() <= b.degree() ? a : b;
    const Perm& big = a.degree() <= b.degree() ? b : a;
    const int n = small.degree();
    const int N = big.degree();
    int diff = 0;
    for (int x = 0; x < n; ++x)
        if (small(x) != big(x)) ++diff;
    return Rational(diff + (N - n), N);
}

Rational hamming_to_identity(const Perm& a) {
    int diff = 0;
    for (int x = 0; x < a.degree(); ++x)
        if (a(x) != x) ++diff;
    return Rational(diff, a.degree());
}

Perm nearest_involution(const Perm& s) {
    const int n = s.degree();
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) img[static_cast<std::size_t>(x)] = (s(s(x)) == x) ? s(x) : x;
    return Perm(std::move(img));
}

Perm random_perm(int degree, Rng& rng) {
    std::vector<int> img(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) img[static_cast<std::size_t>(i)] = i;
    for (int i = degree - 1; i > 0; --i)
        std::swap(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(rng.below(i + 1))]);
    return Perm(std::move(img));
}

Perm random_transposition(int degree, Rng& rng) {
    int a = rng.below(degree);
    int b = rng.below(degree - 1);
    if (b >= a) ++b;
    std::vector<int> img(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) img[static_cast<std::size_t>(i)] = i;
    std::swap(img[static_cast<std::size_t>(a)], img[static_cast<std::size_t>(b)]);
    return Perm(std::move(img));
}

} // namespace permstab
