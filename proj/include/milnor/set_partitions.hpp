#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace milnor {

/// Partition of {0, ..., n-1} into disjoint nonempty blocks. Blocks are
/// sorted ascending internally and listed by minimal element.
struct SetPartition {
    int n = 0;
    std::vector<std::vector<int>> blocks;

    SetPartition() = default;
    SetPartition(int n_, std::vector<std::vector<int>> blocks_) : n(n_), blocks(std::move(blocks_)) {
        normalize();
        std::vector<bool> seen(n, false);
        int count = 0;
        for (const auto& b : blocks) {
            if (b.empty()) throw std::invalid_argument("empty block");
            for (int x : b) {
                if (x < 0 || x >= n || seen[x]) throw std::invalid_argument("bad block element");
                seen[x] = true;
                ++count;
            }
        }
        if (count != n) throw std::invalid_argument("blocks do not cover [n]");
    }

    int codim() const { return n - static_cast<int>(blocks.size()); }

    /// Canonical order: lexicographic on the block-min sequence, then on
    /// block contents.
    std::pair<std::vector<int>, std::vector<std::vector<int>>> sort_key() const {
        std::vector<int> mins;
        mins.reserve(blocks.size());
        for (const auto& b : blocks) mins.push_back(b.front());
        return {std::move(mins), blocks};
    }

    bool operator==(const SetPartition& o) const { return n == o.n && blocks == o.blocks; }
    bool operator<(const SetPartition& o) const { return sort_key() < o.sort_key(); }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (i) s += '|';
            for (std::size_t j = 0; j < blocks[i].size(); ++j) {
                if (j) s += ',';
                s += std::to_string(blocks[i][j]);
            }
        }
        return s;
    }

    /// Descending block sizes.
    std::vector<int> type() const {
        std::vector<int> t;
        t.reserve(blocks.size());
        for (const auto& b : blocks) t.push_back(static_cast<int>(b.size()));
        std::sort(t.rbegin(), t.rend());
        return t;
    }

private:
    void normalize() {
        for (auto& b : blocks) std::sort(b.begin(), b.end());
        std::sort(blocks.begin(), blocks.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
    }
};

/// All set partitions of [n] with n-k blocks, canonically ordered.
inline std::vector<SetPartition> partitions_of_codim(int n, int k) {
    if (k < 0 || k > n - 1) throw std::domain_error("codim out of range");
    // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
    std::vector<SetPartition> out;
    std::vector<int> a(n, 0);
    auto rec = [&](auto&& self, int i, int maxv) -> void {
        if (i == n) {
            int nblocks = maxv + 1;
            if (nblocks != n - k) return;
            std::vector<std::vector<int>> blocks(nblocks);
            for (int x = 0; x < n; ++x) blocks[a[x]].push_back(x);
            out.emplace_back(n, std::move(blocks));
            return;
        }
        for (int v = 0; v <= maxv + 1; ++v) {
            a[i] = v;
            self(self, i + 1, std::max(maxv, v));
        }
    };
    if (n > 0)
        rec(rec, 1, 0);
    else if (k == 0)
        out.emplace_back(0, std::vector<std::vector<int>>{});
    std::sort(out.begin(), out.end());
    return out;
}

/// If q is obtained from p by merging exactly two blocks, the (i, j)
/// block positions of p that merge; nullopt when incomparable.
/// Requires codim(q) = codim(p) + 1.
inline std::optional<std::pair<int, int>> covering_merge(const SetPartition& q,
                                                         const SetPartition& p) {
    if (q.n != p.n || q.codim() != p.codim() + 1)
        throw std::domain_error("covering_merge codimension mismatch");
    // Locate, for each element, its q-block.
    std::vector<int> qblock(q.n, -1);
    for (std::size_t b = 0; b < q.blocks.size(); ++b)
        for (int x : q.blocks[b]) qblock[x] = static_cast<int>(b);

    std::vector<int> merged;  // p-block positions landing in a shared q-block
    std::vector<std::vector<int>> hits(q.blocks.size());
    for (std::size_t pb = 0; pb < p.blocks.size(); ++pb) {
        int target = qblock[p.blocks[pb].front()];
        for (int x : p.blocks[pb])
            if (qblock[x] != target) return std::nullopt;  // p-block split across q
        hits[target].push_back(static_cast<int>(pb));
    }
    std::optional<std::pair<int, int>> pair;
    for (const auto& h : hits) {
        if (h.size() == 1) continue;
        if (h.size() != 2 || pair) return std::nullopt;
        pair = {h[0], h[1]};
    }
    return pair;
}

/// The partition obtained from p by merging block positions i < j.
inline SetPartition merge_blocks(const SetPartition& p, int i, int j) {
    if (i >= j || j >= static_cast<int>(p.blocks.size()))
        throw std::invalid_argument("bad block positions");
    std::vector<std::vector<int>> blocks;
    blocks.reserve(p.blocks.size() - 1);
    for (int r = 0; r < static_cast<int>(p.blocks.size()); ++r) {
        if (r == j) continue;
        if (r == i) {
            std::vector<int> merged = p.blocks[i];
            merged.insert(merged.end(), p.blocks[j].begin(), p.blocks[j].end());
            std::sort(merged.begin(), merged.end());
            blocks.push_back(std::move(merged));
        } else {
            blocks.push_back(p.blocks[r]);
        }
    }
    return SetPartition(p.n, std::move(blocks));
}

} // namespace milnor
