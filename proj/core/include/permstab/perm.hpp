#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "permstab/rational.hpp"
#include "permstab/rng.hpp"

namespace permstab {

// Permutation of {0,...,n-1} in one-line notation: image()[x] is where x goes.
class Perm {
public:
    explicit Perm(std::vector<int> image);
    static Perm identity(int degree);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int x) const { return img_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& image() const { return img_; }

    Perm inverse() const;
    bool is_identity() const;

    friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
    friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; } // lex on images

    // Text form "2,0,1"; emitted and parsed bit-exactly.
    std::string str() const;
    static Perm parse(std::string_view text);

private:
    Perm() = default;
    std::vector<int> img_;
};

// result(x) = a(b(x)); degrees must match.
Perm compose(const Perm& a, const Perm& b);

Perm power(const Perm& a, long long e);

// Cross-size normalized Hamming distance: for deg a = n <= N = deg b,
// (#{x < n : a(x) != b(x)} + (N - n)) / N. Symmetric in its arguments.
Rational hamming(const Perm& a, const Perm& b);

Rational hamming_to_identity(const Perm& a);

// Involution tau with d(s, tau) = d(s^2, id): tau agrees with s on the set
// where s^2 fixes, and fixes everything else.
Perm nearest_involution(const Perm& s);

Perm random_perm(int degree, Rng& rng);
Perm random_transposition(int degree, Rng& rng);

} // namespace permstab
