#pragma once

#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "milnor/braid.hpp"
#include "milnor/numeric.hpp"
#include "milnor/perm.hpp"

namespace milnor {

/// Morphism n -> m of the category FI-hat: a normalized representative of
/// a coset in S-hat_m / i_2(S-hat_{m-n}).
///
/// Normal form: when m - n >= 2 the representative extends the underlying
/// injection order-preservingly on the complement with d in {0,1} forced
/// by parity; when m - n <= 1 the subgroup i_2(S-hat_{m-n}) is trivial and
/// the representative is the full group element.
class FIhatMorphism {
public:
    FIhatMorphism(int src, int dst, ShatElement rep) : src_(src), dst_(dst), rep_(std::move(rep)) {
        if (src < 0 || dst < 0 || src > dst) throw std::invalid_argument("bad objects");
        if (rep_.n != dst) throw std::invalid_argument("representative lives in the wrong group");
        normalize();
    }

    static FIhatMorphism identity(int n) { return FIhatMorphism(n, n, ShatElement::identity(n)); }

    /// The canonical morphism [e] : n -> m.
    static FIhatMorphism canonical(int src, int dst) {
        return FIhatMorphism(src, dst, ShatElement::identity(dst));
    }

    /// Morphism with the given injection (0-indexed images of 0..src-1),
    /// complement order-preserving, d normalized.
    static FIhatMorphism from_injection(int src, int dst, const std::vector<int>& images) {
        if (static_cast<int>(images.size()) != src) throw std::invalid_argument("bad image list");
        std::vector<int> perm_img(dst, -1);
        std::vector<bool> used(dst, false);
        for (int x = 0; x < src; ++x) {
            int y = images[x];
            if (y < 0 || y >= dst || used[y]) throw std::invalid_argument("not an injection");
            perm_img[x] = y;
            used[y] = true;
        }
        int next = src;
        for (int y = 0; y < dst; ++y)
            if (!used[y]) perm_img[next++] = y;
        Perm p(std::move(perm_img));
        long long d = p.sign() < 0 ? 1 : 0;
        if (dst <= 1) d = 0;
        return FIhatMorphism(src, dst, ShatElement(dst, std::move(p), d));
    }

    int src() const { return src_; }
    int dst() const { return dst_; }
    const ShatElement& rep() const { return rep_; }

    /// Underlying injection [src] -> [dst] (forgets d).
    std::vector<int> to_fi() const {
        std::vector<int> img(src_);
        for (int x = 0; x < src_; ++x) img[x] = rep_.perm(x);
        return img;
    }

    bool operator==(const FIhatMorphism&) const = default;
    bool operator<(const FIhatMorphism& o) const {
        auto key = [](const FIhatMorphism& f) {
            return std::tuple(f.src_, f.dst_, f.rep_.perm.images(), f.rep_.d);
        };
        return key(*this) < key(o);
    }

    /// Printed as `n->m: [i1 i2 ... ; d]` with 1-indexed images.
    std::string to_string() const {
        std::ostringstream os;
        os << src_ << "->" << dst_ << ": [";
        for (int x = 0; x < src_; ++x) {
            if (x) os << ' ';
            os << rep_.perm(x) + 1;
        }
        os << " ; " << rep_.d << "]";
        return os.str();
    }

    static FIhatMorphism parse(const std::string& text) {
        // n->m: [i1 i2 ... ; d]
        auto arrow = text.find("->");
        auto colon = text.find(':', arrow == std::string::npos ? 0 : arrow);
        auto lb = text.find('[');
        auto semi = text.find(';');
        auto rb = text.find(']');
        if (arrow == std::string::npos || colon == std::string::npos || lb == std::string::npos ||
            semi == std::string::npos || rb == std::string::npos)
            throw std::invalid_argument("bad morphism literal: " + text);
        int src = std::stoi(text.substr(0, arrow));
        int dst = std::stoi(text.substr(arrow + 2, colon - arrow - 2));
        std::istringstream imgs(text.substr(lb + 1, semi - lb - 1));
        std::vector<int> images;
        int v;
        while (imgs >> v) images.push_back(v - 1);
        long long d = std::stoll(text.substr(semi + 1, rb - semi - 1));
        FIhatMorphism f = from_injection(src, dst, images);
        if (dst - src <= 1 && dst >= 2) {
            // Full-element case: d carries information beyond parity.
            std::vector<int> perm_img = f.rep().perm.images();
            return FIhatMorphism(src, dst, ShatElement(dst, Perm(perm_img), d));
        }
        return f;
    }

private:
    void normalize() {
        if (dst_ - src_ >= 2) {
            std::vector<int> img(dst_, -1);
            std::vector<bool> used(dst_, false);
            for (int x = 0; x < src_; ++x) {
                img[x] = rep_.perm(x);
                used[img[x]] = true;
            }
            int next = src_;
            for (int y = 0; y < dst_; ++y)
                if (!used[y]) img[next++] = y;
            Perm p(std::move(img));
            long long d = p.sign() < 0 ? 1 : 0;
            if (dst_ <= 1) d = 0;
            rep_ = ShatElement(dst_, std::move(p), d);
        }
        // dst - src <= 1: i_2(S-hat_{<=1}) is trivial, nothing to reduce.
    }

    int src_, dst_;
    ShatElement rep_;
};

/// i_1 : S-hat_n -> S-hat_m, acting on the first n letters.
inline ShatElement i1_embed(const ShatElement& s, int m) {
    if (m < s.n) throw std::invalid_argument("embedding target too small");
    if (s.n <= 1 && m >= 2) return ShatElement::identity(m);
    std::vector<int> img(m);
    for (int x = 0; x < m; ++x) img[x] = x < s.n ? s.perm(x) : x;
    return ShatElement(m, Perm(std::move(img)), s.d);
}

/// i_2 : S-hat_k -> S-hat_m, acting on the last k letters.
inline ShatElement i2_embed(const ShatElement& s, int m) {
    if (m < s.n) throw std::invalid_argument("embedding target too small");
    if (s.n <= 1 && m >= 2) return ShatElement::identity(m);
    int off = m - s.n;
    std::vector<int> img(m);
    for (int x = 0; x < m; ++x) img[x] = x < off ? x : off + s.perm(x - off);
    return ShatElement(m, Perm(std::move(img)), s.d);
}

/// Composite of f : n -> m and g : m -> l, the coset of g * i_1(f).
inline FIhatMorphism fihat_compose(const FIhatMorphism& f, const FIhatMorphism& g) {
    if (f.dst() != g.src()) throw std::invalid_argument("object mismatch in composition");
    ShatElement composite = shat_mul(g.rep(), i1_embed(f.rep(), g.dst()));
    return FIhatMorphism(f.src(), g.dst(), std::move(composite));
}

/// Block sum S-hat_{m1} x S-hat_{m2} -> S-hat_{m1+m2}.
inline ShatElement shat_block_sum(const ShatElement& a, const ShatElement& b) {
    int m = a.n + b.n;
    std::vector<int> img(m);
    for (int x = 0; x < a.n; ++x) img[x] = a.perm(x);
    for (int x = 0; x < b.n; ++x) img[a.n + x] = a.n + b.perm(x);
    return ShatElement(m, Perm(std::move(img)), a.d + b.d);
}

/// Monoidal product of f1 : n1 -> m1 and f2 : n2 -> m2:
/// [i_1(f1) i_2(f2)] composed with the braiding that moves the source
/// letters of f2 past the complement strands of f1. The braiding is the
/// projection of the block braid sigma_block(m1-n1, n2) embedded at
/// offset n1; the interchange law fixes its sign convention (positive
/// crossings, d = (m1-n1) * n2).
inline FIhatMorphism fihat_monoidal(const FIhatMorphism& f1, const FIhatMorphism& f2) {
    int n1 = f1.src(), m1 = f1.dst(), n2 = f2.src(), m2 = f2.dst();
    int total = m1 + m2;
    ShatElement sum = shat_block_sum(f1.rep(), f2.rep());

    // tau: block transposition of the windows [n1, n1+n2) and
    // [n1+n2, n2+m1), realized by a positive block braid.
    BraidWord window = sigma_block(m1 - n1, n2);
    BraidWord tau(total);
    for (auto& [gen, exp] : window.letters) tau.append(gen + n1, exp);
    ShatElement tau_el = total >= 2 ? project_pn(tau) : ShatElement::identity(total);

    ShatElement composite = shat_mul(sum, tau_el);
    return FIhatMorphism(n1 + n2, total, std::move(composite));
}

/// Hom set FI-hat(n, m): the m!/(m-n)! normalized injections when
/// m - n >= 2 or m <= 1; nullopt (infinite) when m - n <= 1 with m >= 2;
/// empty when n > m.
inline std::optional<std::vector<FIhatMorphism>> hom_set(int n, int m) {
    if (n > m) return std::vector<FIhatMorphism>{};
    if (m - n <= 1 && m >= 2) return std::nullopt;
    std::vector<FIhatMorphism> out;
    std::vector<int> images;
    std::vector<bool> used(m, false);
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(images.size()) == n) {
            out.push_back(FIhatMorphism::from_injection(n, m, images));
            return;
        }
        for (int y = 0; y < m; ++y) {
            if (used[y]) continue;
            used[y] = true;
            images.push_back(y);
            self(self);
            images.pop_back();
            used[y] = false;
        }
    };
    rec(rec);
    return out;
}

/// Size of FI(n, m) = m!/(m-n)!.
inline ZZ fi_hom_count(int n, int m) {
    if (n > m) return 0;
    ZZ c = 1;
    for (int t = m; t > m - n; --t) c *= t;
    return c;
}

/// Normal-form key of the left coset g * i_1(S-hat_k) inside S-hat_n.
/// For k >= 2 the key is the image tuple of the last n-k letters (the
/// complement is rearranged order-preservingly and d reduces into {0,1}
/// by parity). For k <= 1 the subgroup is trivial and only the reduction
/// of d modulo the kernel of FI-pullback coefficients applies, leaving
/// the full permutation.
struct I1CosetKey {
    std::vector<int> tail;
    int dbit = 0;
    auto operator<=>(const I1CosetKey&) const = default;
};

inline I1CosetKey i1_coset_key(const ShatElement& g, int k) {
    if (k < 0 || k > g.n) throw std::invalid_argument("bad subgroup size");
    I1CosetKey key;
    if (k >= 2) {
        for (int x = k; x < g.n; ++x) key.tail.push_back(g.perm(x));
        key.dbit = 0;  // d fully absorbed: i_1(S-hat_k) realizes every even shift
    } else {
        key.tail = g.perm.images();
        key.dbit = static_cast<int>(((g.d % 2) + 2) % 2);
    }
    return key;
}

/// Counts the cosets S-hat_n / i_1(S-hat_{n-(p+1)}) via normal forms and
/// compares with |S_n / S_{n-(p+1)}|; certifies that the FI chain groups
/// compute the FI-hat chain groups in the range p <= n-1.
inline bool fihat_chain_compare(int n, int p) {
    if (p < 0 || p > n - 1) throw std::domain_error("fihat_chain_compare requires 0 <= p <= n-1");
    int k = n - (p + 1);
    std::set<I1CosetKey> keys;
    std::vector<int> base(n);
    for (int i = 0; i < n; ++i) base[i] = i;
    do {
        Perm s{std::vector<int>(base)};
        long long d = s.sign() < 0 ? 1 : 0;
        keys.insert(i1_coset_key(ShatElement(n, s, d), k));
    } while (std::next_permutation(base.begin(), base.end()));
    ZZ expected = fi_hom_count(n - k, n);  // n!/k!
    return ZZ(static_cast<long>(keys.size())) == expected;
}

} // namespace milnor
