#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace milnor {

/// Permutation of {0, ..., n-1}, stored as the image vector.
/// compose(a, b) applies b first, then a, matching ordinary function
/// composition (a*b)(x) = a(b(x)).
class Perm {
public:
    Perm() = default;
    explicit Perm(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 0); }
    explicit Perm(std::vector<int> img) : img_(std::move(img)) {
        std::vector<bool> seen(img_.size(), false);
        for (int v : img_) {
            if (v < 0 || v >= size() || seen[v])
                throw std::invalid_argument("not a permutation");
            seen[v] = true;
        }
    }

    static Perm identity(int n) { return Perm(n); }

    static Perm transposition(int n, int a, int b) {
        Perm p(n);
        std::swap(p.img_[a], p.img_[b]);
        return p;
    }

    /// Adjacent transposition s_i = (i, i+1), 0-indexed: i in [0, n-2].
    static Perm coxeter(int n, int i) { return transposition(n, i, i + 1); }

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int x) const { return img_[x]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const {
        for (int i = 0; i < size(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    friend Perm compose(const Perm& a, const Perm& b) {
        if (a.size() != b.size()) throw std::invalid_argument("size mismatch");
        std::vector<int> img(a.size());
        for (int x = 0; x < a.size(); ++x) img[x] = a.img_[b.img_[x]];
        return Perm(std::move(img));
    }

    Perm inverse() const {
        std::vector<int> img(size());
        for (int x = 0; x < size(); ++x) img[img_[x]] = x;
        return Perm(std::move(img));
    }

    int sign() const {
        std::vector<bool> seen(size(), false);
        int s = 1;
        for (int i = 0; i < size(); ++i) {
            if (seen[i]) continue;
            int len = 0;
            for (int j = i; !seen[j]; j = img_[j]) {
                seen[j] = true;
                ++len;
            }
            if (len % 2 == 0) s = -s;
        }
        return s;
    }

    /// Cycle type as a descending list of cycle lengths.
    std::vector<int> cycle_type() const {
        std::vector<bool> seen(size(), false);
        std::vector<int> type;
        for (int i = 0; i < size(); ++i) {
            if (seen[i]) continue;
            int len = 0;
            for (int j = i; !seen[j]; j = img_[j]) {
                seen[j] = true;
                ++len;
            }
            type.push_back(len);
        }
        std::sort(type.rbegin(), type.rend());
        return type;
    }

    /// Decomposition into adjacent transpositions: p = s_{w[0]} * s_{w[1]} * ...
    /// with the composition convention above (rightmost factor applied first).
    std::vector<int> coxeter_word() const {
        std::vector<int> img = img_;
        std::vector<int> word;
        // Bubble sort img to identity; each swap records a generator.
        // If t_k ... t_1 * p = e then p = t_1 ... t_k (t self-inverse).
        bool moved = true;
        while (moved) {
            moved = false;
            for (int i = 0; i + 1 < size(); ++i) {
                if (img[i] > img[i + 1]) {
                    std::swap(img[i], img[i + 1]);
                    word.push_back(i);
                    moved = true;
                }
            }
        }
        std::reverse(word.begin(), word.end());
        return word;
    }

    bool operator==(const Perm& o) const = default;
    auto operator<=>(const Perm& o) const = default;

private:
    std::vector<int> img_;
};

/// Canonical representative of the conjugacy class with the given cycle
/// type: consecutive cycles (0 1 .. l1-1)(l1 ..) ...
inline Perm class_representative(int n, const std::vector<int>& cycle_lengths) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    int start = 0;
    for (int len : cycle_lengths) {
        for (int t = 0; t < len; ++t) img[start + t] = start + (t + 1) % len;
        start += len;
    }
    if (start != n) throw std::invalid_argument("cycle lengths do not sum to n");
    return Perm(std::move(img));
}

} // namespace milnor
