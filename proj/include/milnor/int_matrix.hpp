#pragma once

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "milnor/numeric.hpp"

namespace milnor {

/// Sparse integer matrix with arbitrary-precision entries.
/// Invariant: no stored zeros, indices in range.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative dimension");
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t nnz() const { return entries_.size(); }
    bool is_zero() const { return entries_.empty(); }

    void set(int r, int c, ZZ v) {
        check(r, c);
        if (v == 0)
            entries_.erase({r, c});
        else
            entries_[{r, c}] = std::move(v);
    }

    void add(int r, int c, const ZZ& v) {
        check(r, c);
        auto it = entries_.find({r, c});
        if (it == entries_.end()) {
            if (v != 0) entries_.emplace(std::make_pair(r, c), v);
        } else {
            it->second += v;
            if (it->second == 0) entries_.erase(it);
        }
    }

    ZZ at(int r, int c) const {
        check(r, c);
        auto it = entries_.find({r, c});
        return it == entries_.end() ? ZZ(0) : it->second;
    }

    const std::map<std::pair<int, int>, ZZ>& entries() const { return entries_; }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (const auto& [rc, v] : entries_) t.entries_[{rc.second, rc.first}] = v;
        return t;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in product");
        std::vector<std::vector<std::pair<int, const ZZ*>>> orows(o.rows_);
        for (const auto& [rc, v] : o.entries_) orows[rc.first].push_back({rc.second, &v});
        IntMatrix p(rows_, o.cols_);
        std::map<int, ZZ> acc;
        int cur = -1;
        auto flush = [&]() {
            for (auto& [c, v] : acc)
                if (v != 0) p.entries_[{cur, c}] = std::move(v);
            acc.clear();
        };
        for (const auto& [rc, v] : entries_) {
            if (rc.first != cur) {
                if (cur >= 0) flush();
                cur = rc.first;
            }
            for (auto& [c2, w] : orows[rc.second]) acc[c2] += v * (*w);
        }
        if (cur >= 0) flush();
        return p;
    }

    IntMatrix operator+(const IntMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
        IntMatrix s = *this;
        for (const auto& [rc, v] : o.entries_) s.add(rc.first, rc.second, v);
        return s;
    }

    IntMatrix operator-() const {
        IntMatrix n = *this;
        for (auto& [rc, v] : n.entries_) v = -v;
        return n;
    }

    IntMatrix operator-(const IntMatrix& o) const { return *this + (-o); }

    bool operator==(const IntMatrix& o) const = default;

    /// Dump format: header `rows cols nnz`, then one `row col value` per
    /// line, 0-indexed, sorted by (row, col).
    void dump(std::ostream& os) const {
        os << rows_ << ' ' << cols_ << ' ' << entries_.size() << '\n';
        for (const auto& [rc, v] : entries_)
            os << rc.first << ' ' << rc.second << ' ' << v.get_str() << '\n';
    }

    std::string dump_string() const {
        std::ostringstream os;
        dump(os);
        return os.str();
    }

    static IntMatrix parse(std::istream& is) {
        int r, c;
        std::size_t nnz;
        if (!(is >> r >> c >> nnz)) throw std::runtime_error("bad matrix header");
        IntMatrix m(r, c);
        for (std::size_t i = 0; i < nnz; ++i) {
            int a, b;
            std::string v;
            if (!(is >> a >> b >> v)) throw std::runtime_error("bad matrix entry");
            m.set(a, b, ZZ(v));
        }
        return m;
    }

private:
    void check(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw std::out_of_range("matrix index out of range");
    }

    int rows_, cols_;
    std::map<std::pair<int, int>, ZZ> entries_;
};

/// rank and elementary divisors d_1 | d_2 | ... | d_rank.
struct SNFResult {
    int rank = 0;
    std::vector<ZZ> divisors;
};

namespace detail {

/// State for the Smith reduction: row-major maps plus a column occupancy
/// index so pivot search and column operations stay sparse.
class SmithWorkspace {
public:
    explicit SmithWorkspace(const IntMatrix& m)
        : row_(m.rows()), col_occ_(m.cols()) {
        for (const auto& [rc, v] : m.entries()) {
            row_[rc.first][rc.second] = v;
            col_occ_[rc.second].insert(rc.first);
        }
        for (int r = 0; r < m.rows(); ++r)
            if (!row_[r].empty()) live_rows_.insert(r);
    }

    SNFResult run() {
        SNFResult res;
        while (true) {
            auto piv = find_pivot();
            if (!piv) break;
            auto [pr, pc] = reduce_at(*piv);
            res.divisors.push_back(abs(row_[pr][pc]));
            ++res.rank;
            drop_row(pr);
        }
        return res;
    }

private:
    // Scans in (row, col) order, so the first unit found is also the
    // tie-break winner among minimal entries.
    std::optional<std::pair<int, int>> find_pivot() const {
        std::optional<std::pair<int, int>> best;
        ZZ best_abs;
        for (int r : live_rows_) {
            for (const auto& [c, v] : row_[r]) {
                ZZ a = abs(v);
                if (a == 1) return std::make_pair(r, c);
                if (!best || a < best_abs) {
                    best = {r, c};
                    best_abs = a;
                }
            }
        }
        return best;
    }

    /// Clear the pivot row and column; the pivot may migrate whenever a
    /// smaller remainder appears (strictly decreasing |pivot| ensures
    /// termination). Returns the final pivot position.
    std::pair<int, int> reduce_at(std::pair<int, int> p) {
        auto [pr, pc] = p;
        for (;;) {
            const ZZ piv = row_[pr][pc];
            bool moved = false;

            while (col_occ_[pc].size() > 1) {
                int r = *col_occ_[pc].begin();
                if (r == pr) r = *std::next(col_occ_[pc].begin());
                ZZ q = rounded_div(row_[r][pc], piv);
                add_row(pr, r, -q);
                auto it = row_[r].find(pc);
                if (it != row_[r].end()) {  // remainder, strictly smaller
                    pr = r;
                    moved = true;
                    break;
                }
            }
            if (moved) continue;

            while (row_[pr].size() > 1) {
                auto it = row_[pr].begin();
                if (it->first == pc) ++it;
                int c = it->first;
                ZZ q = rounded_div(it->second, piv);
                add_col(pc, c, -q);
                auto jt = row_[pr].find(c);
                if (jt != row_[pr].end()) {
                    pc = c;
                    moved = true;
                    break;
                }
            }
            if (moved) continue;

            // Pivot isolated; enforce that it divides the remaining block.
            int bad = find_nondivisible(pr, piv);
            if (bad < 0) return {pr, pc};
            add_row(bad, pr, 1);
        }
    }

    /// row[dst] += q * row[src]
    void add_row(int src, int dst, const ZZ& q) {
        if (q == 0) return;
        for (const auto& [c, v] : row_[src]) {
            auto it = row_[dst].find(c);
            if (it == row_[dst].end()) {
                row_[dst][c] = q * v;
                col_occ_[c].insert(dst);
            } else {
                it->second += q * v;
                if (it->second == 0) {
                    row_[dst].erase(it);
                    col_occ_[c].erase(dst);
                }
            }
        }
    }

    /// col[dst] += q * col[src]
    void add_col(int src, int dst, const ZZ& q) {
        if (q == 0) return;
        std::vector<std::pair<int, ZZ>> src_col;
        src_col.reserve(col_occ_[src].size());
        for (int r : col_occ_[src]) src_col.push_back({r, row_[r][src]});
        for (auto& [r, v] : src_col) {
            auto it = row_[r].find(dst);
            if (it == row_[r].end()) {
                row_[r][dst] = q * v;
                col_occ_[dst].insert(r);
            } else {
                it->second += q * v;
                if (it->second == 0) {
                    row_[r].erase(it);
                    col_occ_[dst].erase(r);
                }
            }
        }
    }

    int find_nondivisible(int pr, const ZZ& piv) const {
        if (abs(piv) == 1) return -1;
        for (int r : live_rows_) {
            if (r == pr) continue;
            for (const auto& [c, v] : row_[r])
                if (!mpz_divisible_p(v.get_mpz_t(), piv.get_mpz_t())) return r;
        }
        return -1;
    }

    void drop_row(int r) {
        for (const auto& [c, v] : row_[r]) col_occ_[c].erase(r);
        row_[r].clear();
        live_rows_.erase(r);
    }

    std::vector<std::map<int, ZZ>> row_;
    std::vector<std::set<int>> col_occ_;
    std::set<int> live_rows_;
};

} // namespace detail

/// Elementary divisors of M by unimodular row/column reduction.
/// Pivots are chosen with minimal absolute value, ties broken by lowest
/// (row, col); the divisibility chain d_i | d_{i+1} is enforced directly.
inline SNFResult smith_normal_form(const IntMatrix& m) {
    detail::SmithWorkspace ws(m);
    return ws.run();
}

inline int rank(const IntMatrix& m) { return smith_normal_form(m).rank; }

/// For M : A -> B (rows index B), the cokernel B / im(M):
/// free rank = rank(B) - rank(M), torsion = divisors of M greater than 1.
inline std::pair<int, std::vector<ZZ>> cokernel_invariants(const IntMatrix& m) {
    SNFResult snf = smith_normal_form(m);
    std::vector<ZZ> torsion;
    for (const ZZ& d : snf.divisors)
        if (d > 1) torsion.push_back(d);
    return {m.rows() - snf.rank, torsion};
}

} // namespace milnor
