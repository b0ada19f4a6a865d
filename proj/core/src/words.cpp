#include "permstab/words.hpp"

#include <algorithm>

#include "permstab/errors.hpp"

namespace permstab {

FreeWord FreeWord::from_syllables(const std::vector<Syllable>& raw) {
    FreeWord w;
    for (const Syllable& s : raw) {
        if (s.gen != 1 && s.gen != 2) throw domain_error("free word generator must be 1 or 2");
        if (s.exponent == 0) continue;
        if (!w.syl_.empty() && w.syl_.back().gen == s.gen) {
            w.syl_.back().exponent += s.exponent;
            if (w.syl_.back().exponent == 0) w.syl_.pop_back(); // cancellation cascades
        } else {
            w.syl_.push_back(s);
        }
    }
    return w;
}

FreeWord FreeWord::parse(std::string_view text) {
    std::vector<Syllable> raw;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ' ' || text[i] == '\t') {
            ++i;
            continue;
        }
        const std::size_t token_at = i;
        auto fail = [&](const std::string& why) {
            throw parse_error("word parse error at offset " + std::to_string(token_at) + ": " + why);
        };
        if (text[i] != 'x') fail("expected 'x1' or 'x2'");
        ++i;
        if (i >= text.size() || (text[i] != '1' && text[i] != '2')) fail("expected generator 1 or 2 after 'x'");
        int gen = text[i] - '0';
        ++i;
        long long exponent = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            bool neg = false;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
                neg = text[i] == '-';
                ++i;
            }
            if (i >= text.size() || text[i] < '0' || text[i] > '9') fail("expected digits after '^'");
            long long v = 0;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
                if (v > (INT64_MAX - (text[i] - '0')) / 10) fail("exponent too large");
                v = v * 10 + (text[i] - '0');
                ++i;
            }
            if (v == 0) fail("zero exponent literal");
            exponent = neg ? -v : v;
        }
        if (i < text.size() && text[i] != ' ' && text[i] != '\t') fail("unexpected character in token");
        raw.push_back(Syllable{gen, exponent});
    }
    return from_syllables(raw);
}

int FreeWord::length() const {
    long long len = 0;
    for (const Syllable& s : syl_) len += s.exponent < 0 ? -s.exponent : s.exponent;
    return static_cast<int>(std::min<long long>(len, INT32_MAX));
}

FreeWord FreeWord::concat(const FreeWord& other) const {
    std::vector<Syllable> raw = syl_;
    raw.insert(raw.end(), other.syl_.begin(), other.syl_.end());
    return from_syllables(raw);
}

FreeWord FreeWord::inverse() const {
    std::vector<Syllable> raw;
    raw.reserve(syl_.size());
    for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) raw.push_back(Syllable{it->gen, -it->exponent});
    return from_syllables(raw);
}

std::string FreeWord::str() const {
    if (syl_.empty()) return "";
    std::string out;
    for (const Syllable& s : syl_) {
        if (!out.empty()) out += ' ';
        out += "x" + std::to_string(s.gen);
        if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
    }
    return out;
}

bool operator==(const FreeWord& a, const FreeWord& b) {
    if (a.syl_.size() != b.syl_.size()) return false;
    for (std::size_t i = 0; i < a.syl_.size(); ++i)
        if (a.syl_[i].gen != b.syl_[i].gen || a.syl_[i].exponent != b.syl_[i].exponent) return false;
    return true;
}

long long exponent_reduce(long long t, int k) {
    if (k < 1) throw domain_error("modulus must be >= 1");
    if (t >= 0) return t % k;
    return -((-t) % k);
}

GridMap::GridMap(int k) : k_(k) {
    if (k < 1) throw domain_error("grid needs k >= 1");
    const int n = k * k;
    auto pt = [k](int i, int j) { return i * k + j; };

    std::vector<int> a2(static_cast<std::size_t>(n));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) a2[static_cast<std::size_t>(pt(i, j))] = pt(i, (j + 1) % k);
    Perm alpha2(std::move(a2));

    // alpha1 = (horizontal shift) after swapping (0,0) <-> (0,1)
    std::vector<int> a1(static_cast<std::size_t>(n));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            int ii = i, jj = j;
            if (k >= 2 && i == 0 && j == 0) jj = 1;
            else if (k >= 2 && i == 0 && j == 1) jj = 0;
            a1[static_cast<std::size_t>(pt(i, j))] = pt((ii + 1) % k, jj);
        }
    Perm alpha1(std::move(a1));

    pow1_.reserve(static_cast<std::size_t>(2 * k - 1));
    pow2_.reserve(static_cast<std::size_t>(2 * k - 1));
    for (int t = -(k - 1); t <= k - 1; ++t) {
        pow1_.push_back(power(alpha1, t));
        pow2_.push_back(power(alpha2, t));
    }
}

const Perm& GridMap::power_of(int gen, long long reduced) const {
    if (gen != 1 && gen != 2) throw domain_error("grid generator must be 1 or 2");
    const auto idx = static_cast<std::size_t>(reduced + k_ - 1);
    return gen == 1 ? pow1_[idx] : pow2_[idx];
}

Perm GridMap::eval(const FreeWord& w) const {
    Perm acc = Perm::identity(points());
    for (const FreeWord::Syllable& s : w.syllables())
        acc = compose(acc, power_of(s.gen, exponent_reduce(s.exponent, k_)));
    return acc;
}

GroupMap drop_point(const GroupMap& f) {
    const int n = f.degree();
    if (n < 2) throw domain_error("drop_point needs degree >= 2");
    if (!is_homomorphism(f)) throw domain_error("drop_point needs an exact homomorphism");
    const int dropped = n - 1;
    std::vector<Perm> table;
    table.reserve(static_cast<std::size_t>(f.group()->order()));
    for (int g = 0; g < f.group()->order(); ++g) {
        std::vector<int> img(static_cast<std::size_t>(n - 1));
        for (int x = 0; x < n - 1; ++x) {
            int y = f.apply(g, x);
            img[static_cast<std::size_t>(x)] = (y == dropped) ? f.apply(g, y) : y;
        }
        table.push_back(Perm(std::move(img)));
    }
    GroupMap out(f.group(), n - 1, std::move(table));
    if (defects(out).defect_inf > Rational(2, n - 1))
        throw invariant_error("drop_point defect exceeded 2/(n-1)");
    return out;
}

FreeWord sample_reduced_word(int max_syllables, int k, Rng& rng) {
    if (max_syllables < 1) throw domain_error("need at least one syllable");
    const int count = 1 + rng.below(max_syllables);
    int gen = 1 + rng.below(2);
    std::vector<FreeWord::Syllable> raw;
    raw.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        long long e = 1 + rng.below64(3LL * k); // magnitude in [1, 3k]
        if (rng.coin()) e = -e;
        raw.push_back(FreeWord::Syllable{gen, e});
        gen = 3 - gen;
    }
    return FreeWord::from_syllables(raw);
}

Rational gk_defect_sample(int k, int max_syllables, long long trials, Rng& rng) {
    if (trials < 1) throw domain_error("need at least one trial");
    GridMap grid(k);
    const Rational cap(2, k);
    Rational worst(0);
    for (long long i = 0; i < trials; ++i) {
        FreeWord w1 = sample_reduced_word(max_syllables, k, rng);
        FreeWord w2 = sample_reduced_word(max_syllables, k, rng);
        Rational d = hamming(grid.eval(w1.concat(w2)), compose(grid.eval(w1), grid.eval(w2)));
        if (d > cap) throw invariant_error("grid word-pair defect exceeded 2/k");
        worst = std::max(worst, d);
    }
    return worst;
}

std::pair<Perm, Rational> gamma0_image(int k) {
    GridMap grid(k);
    const Perm a = power(compose(grid.alpha1(), grid.alpha2()), k);
    const Perm b = power(compose(grid.alpha_power(1, -(static_cast<long long>(k) - 1)), grid.alpha2()), k);
    Perm out = compose(a, b.inverse());
    Rational dist = hamming_to_identity(out);
    if (k >= 6 && dist < Rational(k - 5, k))
        throw invariant_error("hard-element distance fell below 1 - 5/k");
    return {std::move(out), dist};
}

} // namespace permstab
