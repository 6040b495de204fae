#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "milnor/perm.hpp"

namespace milnor {

struct NotPure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Element (sigma, d) of the subgroup of S_n x Z with d odd exactly when
/// sigma is odd. S-hat_0 and S-hat_1 are trivial.
struct ShatElement {
    int n = 0;
    Perm perm;
    long long d = 0;

    ShatElement() = default;
    ShatElement(int n_, Perm perm_, long long d_) : n(n_), perm(std::move(perm_)), d(d_) {
        if (perm.size() != n) throw std::invalid_argument("permutation size mismatch");
        if (n <= 1) {
            if (!perm.is_identity() || d != 0)
                throw std::invalid_argument("S-hat_0 and S-hat_1 are trivial");
        } else if (((d % 2 + 2) % 2 == 1) != (perm.sign() == -1)) {
            throw std::invalid_argument("parity invariant violated: d odd iff sigma odd");
        }
    }

    static ShatElement identity(int n) { return ShatElement(n, Perm(n), 0); }

    bool operator==(const ShatElement&) const = default;

    std::string to_string() const {
        std::ostringstream os;
        os << "([";
        for (int i = 0; i < n; ++i) {
            if (i) os << ' ';
            os << perm(i) + 1;
        }
        os << "], " << d << ")";
        return os.str();
    }
};

/// Componentwise product; the left factor's braid comes first.
inline ShatElement shat_mul(const ShatElement& a, const ShatElement& b) {
    if (a.n != b.n) throw std::invalid_argument("shat_mul size mismatch");
    return ShatElement(a.n, compose(a.perm, b.perm), a.d + b.d);
}

inline ShatElement shat_inverse(const ShatElement& a) {
    return ShatElement(a.n, a.perm.inverse(), -a.d);
}

/// Free braid word: letters (generator index, exponent +-1), generators
/// 1-indexed in [1, n-1].
struct BraidWord {
    int n = 0;
    std::vector<std::pair<int, int>> letters;  // (i, +1|-1) meaning sigma_{i,i+1}^{+-1}

    BraidWord() = default;
    explicit BraidWord(int n_) : n(n_) {}

    void append(int gen, int exp) {
        if (gen < 1 || gen > n - 1) throw std::invalid_argument("generator index out of range");
        if (exp != 1 && exp != -1) throw std::invalid_argument("exponent must be +-1");
        letters.push_back({gen, exp});
    }

    BraidWord operator*(const BraidWord& o) const {
        if (n != o.n) throw std::invalid_argument("strand count mismatch");
        BraidWord w = *this;
        w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
        return w;
    }

    BraidWord inverse() const {
        BraidWord w(n);
        for (auto it = letters.rbegin(); it != letters.rend(); ++it)
            w.letters.push_back({it->first, -it->second});
        return w;
    }

    /// Text syntax: `s1 s2^-1 s1`.
    std::string to_string() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < letters.size(); ++i) {
            if (i) os << ' ';
            os << 's' << letters[i].first;
            if (letters[i].second < 0) os << "^-1";
        }
        return os.str();
    }

    static BraidWord parse(int n, const std::string& text) {
        BraidWord w(n);
        std::istringstream is(text);
        std::string tok;
        while (is >> tok) {
            if (tok.size() < 2 || tok[0] != 's') throw std::invalid_argument("bad braid token: " + tok);
            std::size_t caret = tok.find('^');
            int gen = std::stoi(tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
            int exp = 1;
            if (caret != std::string::npos) {
                std::string e = tok.substr(caret + 1);
                if (e == "-1")
                    exp = -1;
                else if (e == "1" || e == "+1")
                    exp = 1;
                else
                    throw std::invalid_argument("bad exponent in braid token: " + tok);
            }
            w.append(gen, exp);
        }
        return w;
    }
};

/// The projection Br_n -> S-hat_n: sigma_{i,i+1} -> ((i,i+1), 1).
/// A homomorphism with respect to concatenation.
inline ShatElement project_pn(const BraidWord& w) {
    Perm p(w.n);
    long long d = 0;
    for (auto& [gen, exp] : w.letters) {
        p = compose(p, Perm::transposition(w.n, gen - 1, gen));
        d += exp;
    }
    return ShatElement(w.n, std::move(p), d);
}

/// Winding number of a pure braid word: the image under pi_1 q_n,
/// normalized so that every a_{i,j} maps to 1.
inline long long winding(const BraidWord& w) {
    ShatElement s = project_pn(w);
    if (!s.perm.is_identity())
        throw NotPure("winding requires a pure braid word");
    // A pure word has even exponent sum.
    if (((s.d % 2) + 2) % 2 != 0) throw std::logic_error("odd exponent sum on a pure word");
    return s.d / 2;
}

/// The pure braid generator a_{i,j} (1 <= i < j <= n), realized as the
/// conjugate (sigma_{j-1} ... sigma_{i+1}) sigma_i^2 (sigma_{j-1} ... sigma_{i+1})^{-1}.
inline BraidWord pure_gen(int i, int j, int n) {
    if (!(1 <= i && i < j && j <= n)) throw std::invalid_argument("pure_gen requires 1 <= i < j <= n");
    BraidWord conj(n);
    for (int t = j - 1; t >= i + 1; --t) conj.append(t, 1);
    BraidWord core(n);
    core.append(i, 1);
    core.append(i, 1);
    return conj * core * conj.inverse();
}

/// u_i on p+1 strands: sigma_{i-1}^{-1} sigma_{i-2}^{-1} ... sigma_1^{-1};
/// braids the i-th strand over all strands to its left. Projection has
/// d = -(i-1).
inline BraidWord u_word(int i, int strands) {
    if (i < 1 || i > strands) throw std::invalid_argument("u_word index out of range");
    BraidWord w(strands);
    for (int t = i - 1; t >= 1; --t) w.append(t, -1);
    return w;
}

/// Braids the first a strands over the last b strands; the projection is
/// the block-swap permutation with d = a*b.
inline BraidWord sigma_block(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("sigma_block requires a, b >= 0");
    BraidWord w(a + b);
    for (int t = a; t >= 1; --t)
        for (int s = t; s <= t + b - 1; ++s) w.append(s, 1);
    return w;
}

} // namespace milnor
