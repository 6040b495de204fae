#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "milnor/int_matrix.hpp"
#include "milnor/numeric.hpp"
#include "milnor/perm.hpp"

namespace milnor {

/// Binary bracketing with distinct integer leaf labels.
class Bracket {
public:
    static Bracket leaf(int label) {
        Bracket b;
        b.leaf_ = label;
        return b;
    }

    static Bracket pair(Bracket left, Bracket right) {
        Bracket b;
        b.left_ = std::make_shared<Bracket>(std::move(left));
        b.right_ = std::make_shared<Bracket>(std::move(right));
        return b;
    }

    bool is_leaf() const { return !left_; }
    int leaf_label() const { return leaf_; }
    const Bracket& left() const { return *left_; }
    const Bracket& right() const { return *right_; }

    /// Sorted labels; throws on duplicates.
    std::vector<int> labels() const {
        std::vector<int> out;
        collect(out);
        std::sort(out.begin(), out.end());
        for (std::size_t i = 1; i < out.size(); ++i)
            if (out[i] == out[i - 1])
                throw std::invalid_argument("duplicate label in bracket");
        return out;
    }

    std::string to_string() const {
        if (is_leaf()) return std::to_string(leaf_);
        return "[" + left_->to_string() + "," + right_->to_string() + "]";
    }

    /// Literal syntax: `[[1,2],3]` with integer labels.
    static Bracket parse(const std::string& s) {
        std::size_t pos = 0;
        Bracket b = parse_at(s, pos);
        skip_ws(s, pos);
        if (pos != s.size()) throw std::invalid_argument("trailing input in bracket literal");
        return b;
    }

private:
    static void skip_ws(const std::string& s, std::size_t& pos) {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    static Bracket parse_at(const std::string& s, std::size_t& pos) {
        skip_ws(s, pos);
        if (pos >= s.size()) throw std::invalid_argument("unexpected end of bracket literal");
        if (s[pos] == '[') {
            ++pos;
            Bracket l = parse_at(s, pos);
            skip_ws(s, pos);
            if (pos >= s.size() || s[pos] != ',') throw std::invalid_argument("expected ','");
            ++pos;
            Bracket r = parse_at(s, pos);
            skip_ws(s, pos);
            if (pos >= s.size() || s[pos] != ']') throw std::invalid_argument("expected ']'");
            ++pos;
            return pair(std::move(l), std::move(r));
        }
        std::size_t start = pos;
        if (s[pos] == '-') ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("expected label");
        return leaf(std::stoi(s.substr(start, pos - start)));
    }

    void collect(std::vector<int>& out) const {
        if (is_leaf()) {
            out.push_back(leaf_);
        } else {
            left_->collect(out);
            right_->collect(out);
        }
    }

    int leaf_ = -1;
    std::shared_ptr<Bracket> left_, right_;
};

/// Left-normed basis word: word[0] is the minimal label of its set,
/// (word[1], ...) an arbitrary permutation of the rest; the word (a,b,c)
/// denotes [[a,b],c].
using LieWord = std::vector<int>;

using LieCombo = std::map<LieWord, ZZ>;

namespace detail {

inline void combo_add(LieCombo& acc, const LieWord& w, const ZZ& c) {
    auto it = acc.find(w);
    if (it == acc.end()) {
        if (c != 0) acc.emplace(w, c);
    } else {
        it->second += c;
        if (it->second == 0) acc.erase(it);
    }
}

/// Left-normed form of [B(w), B(z)] when w is anchored at the overall
/// minimal label. Reduces on |z|: for z = z'.c,
///   [X, [Y, c]] = [[X, Y], c] - [[X, c], Y].
inline LieCombo merge_min_anchored(const LieWord& w, const LieWord& z) {
    if (z.size() == 1) {
        LieWord out = w;
        out.push_back(z[0]);
        return {{std::move(out), ZZ(1)}};
    }
    LieWord zp(z.begin(), z.end() - 1);
    int c = z.back();

    LieCombo acc;
    for (auto& [word, coef] : merge_min_anchored(w, zp)) {
        LieWord ext = word;
        ext.push_back(c);
        combo_add(acc, ext, coef);
    }
    LieWord wc = w;
    wc.push_back(c);
    for (auto& [word, coef] : merge_min_anchored(wc, zp)) combo_add(acc, word, -coef);
    return acc;
}

/// [B(x), B(y)] on disjoint label sets, as a basis combination.
/// Antisymmetry is applied exactly once, to move the side holding the
/// minimal label to the left.
inline LieCombo merge_words(const LieWord& x, const LieWord& y) {
    if (x[0] < y[0]) return merge_min_anchored(x, y);
    LieCombo out = merge_min_anchored(y, x);
    for (auto& [w, c] : out) c = -c;
    return out;
}

inline LieCombo straighten_node(const Bracket& b) {
    if (b.is_leaf()) return {{LieWord{b.leaf_label()}, ZZ(1)}};
    LieCombo u = straighten_node(b.left());
    LieCombo v = straighten_node(b.right());
    LieCombo acc;
    for (const auto& [wu, cu] : u)
        for (const auto& [wv, cv] : v)
            for (auto& [w, c] : merge_words(wu, wv)) combo_add(acc, w, cu * cv * c);
    return acc;
}

} // namespace detail

/// Integer combination of left-normed basis brackets of Lie(S).
class LieElement {
public:
    LieElement() = default;
    LieElement(std::vector<int> labels, LieCombo coeffs)
        : labels_(std::move(labels)), coeffs_(std::move(coeffs)) {}

    static LieElement basis(const LieWord& w) {
        std::vector<int> labels = w;
        std::sort(labels.begin(), labels.end());
        if (!labels.empty() && w[0] != labels[0])
            throw std::invalid_argument("word does not start with the minimal label");
        return LieElement(std::move(labels), {{w, ZZ(1)}});
    }

    const std::vector<int>& labels() const { return labels_; }
    const LieCombo& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    ZZ coeff(const LieWord& w) const {
        auto it = coeffs_.find(w);
        return it == coeffs_.end() ? ZZ(0) : it->second;
    }

    LieElement operator-() const {
        LieElement e = *this;
        for (auto& [w, c] : e.coeffs_) c = -c;
        return e;
    }

    LieElement operator+(const LieElement& o) const {
        if (labels_ != o.labels_) throw std::invalid_argument("label set mismatch");
        LieElement e = *this;
        for (const auto& [w, c] : o.coeffs_) detail::combo_add(e.coeffs_, w, c);
        return e;
    }

    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [w, c] : coeffs_) {
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            first = false;
            ZZ a = abs(c);
            if (a != 1) os << a.get_str() << "*";
            os << "[";
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (i) os << ",";
                os << w[i];
            }
            os << "]";
        }
        return os.str();
    }

    bool operator==(const LieElement&) const = default;

private:
    std::vector<int> labels_;
    LieCombo coeffs_;
};

/// Expand a bracketing in the left-normed basis of Lie(S).
inline LieElement straighten(const Bracket& b) {
    std::vector<int> labels = b.labels();  // validates distinctness
    return LieElement(std::move(labels), detail::straighten_node(b));
}

/// [u, v] for u on A, v on B with A, B disjoint; lands in Lie(A u B).
inline LieElement merge_insertion(const LieElement& u, const LieElement& v) {
    std::vector<int> labels;
    std::set<int> seen;
    for (int a : u.labels()) seen.insert(a);
    for (int b : v.labels())
        if (!seen.insert(b).second)
            throw std::invalid_argument("overlapping label sets in merge_insertion");
    labels.assign(seen.begin(), seen.end());

    LieCombo acc;
    for (const auto& [wu, cu] : u.coeffs())
        for (const auto& [wv, cv] : v.coeffs())
            for (auto& [w, c] : detail::merge_words(wu, wv))
                detail::combo_add(acc, w, cu * cv * c);
    return LieElement(std::move(labels), std::move(acc));
}

/// Left-normed basis words of Lie(S) for a sorted label set, in
/// lexicographic order of the permutation part. Dimension (|S|-1)!.
inline std::vector<LieWord> lie_basis_words(const std::vector<int>& labels) {
    if (labels.empty()) return {};
    std::vector<int> rest(labels.begin() + 1, labels.end());
    std::vector<LieWord> words;
    do {
        LieWord w;
        w.reserve(labels.size());
        w.push_back(labels[0]);
        w.insert(w.end(), rest.begin(), rest.end());
        words.push_back(std::move(w));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return words;
}

/// Matrix of the relabeling map Lie(A) -> Lie(B) along a bijection phi
/// (columns indexed by lie_basis_words(A), rows by lie_basis_words(B)).
inline IntMatrix lie_relabel_matrix(const std::vector<int>& from_labels,
                                    const std::map<int, int>& phi) {
    std::vector<int> to_labels;
    to_labels.reserve(from_labels.size());
    for (int a : from_labels) to_labels.push_back(phi.at(a));
    std::sort(to_labels.begin(), to_labels.end());

    std::vector<LieWord> from_words = lie_basis_words(from_labels);
    std::vector<LieWord> to_words = lie_basis_words(to_labels);
    std::map<LieWord, int> to_index;
    for (std::size_t i = 0; i < to_words.size(); ++i) to_index[to_words[i]] = static_cast<int>(i);

    IntMatrix m(static_cast<int>(to_words.size()), static_cast<int>(from_words.size()));
    for (std::size_t j = 0; j < from_words.size(); ++j) {
        // Relabeled word is a left-normed bracket, not necessarily anchored
        // at the minimum; re-straighten.
        const LieWord& w = from_words[j];
        LieCombo img{{LieWord{phi.at(w[0])}, ZZ(1)}};
        for (std::size_t t = 1; t < w.size(); ++t) {
            LieCombo next;
            for (const auto& [word, coef] : img)
                for (auto& [w2, c2] : detail::merge_words(word, LieWord{phi.at(w[t])}))
                    detail::combo_add(next, w2, coef * c2);
            img = std::move(next);
        }
        for (const auto& [word, coef] : img) m.set(to_index.at(word), static_cast<int>(j), coef);
    }
    return m;
}

/// Sign of the permutation sorting (phi(a_1), ..., phi(a_k)) for a_i the
/// sorted labels of A; the orientation twist of a relabeling.
inline int orientation_sign(const std::vector<int>& from_labels, const std::map<int, int>& phi) {
    std::vector<int> img;
    img.reserve(from_labels.size());
    for (int a : from_labels) img.push_back(phi.at(a));
    int sign = 1;
    for (std::size_t i = 0; i < img.size(); ++i)
        for (std::size_t j = i + 1; j < img.size(); ++j)
            if (img[i] > img[j]) sign = -sign;
    return sign;
}

/// Matrix of sigma acting on the left-normed basis of Lie([n]) by leaf
/// relabeling (labels 0..n-1).
inline IntMatrix sn_action(int n, const Perm& sigma) {
    if (sigma.size() != n) throw std::invalid_argument("permutation size mismatch");
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = i;
    std::map<int, int> phi;
    for (int i = 0; i < n; ++i) phi[i] = sigma(i);
    return lie_relabel_matrix(labels, phi);
}

/// sgn(sigma) * transpose(inverse(sn_action(sigma))): the action on the
/// sign-twisted dual Lie^v(n).
inline IntMatrix lie_dual_action(int n, const Perm& sigma) {
    IntMatrix m = sn_action(n, sigma.inverse()).transpose();
    if (sigma.sign() < 0) m = -m;
    return m;
}

} // namespace milnor
