#pragma once

#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "milnor/int_matrix.hpp"
#include "milnor/numeric.hpp"
#include "milnor/perm.hpp"

namespace milnor {

/// An S_k-representation over Z presented by its Coxeter generator
/// matrices.
struct SnRep {
    int degree = 0;
    int rank = 0;
    std::vector<IntMatrix> coxeter;  // degree-1 matrices, rank x rank

    IntMatrix rho(const Perm& sigma) const {
        IntMatrix m = IntMatrix::identity(rank);
        for (int i : sigma.coxeter_word()) m = m * coxeter.at(i);
        return m;
    }
};

inline SnRep trivial_rep(int k) {
    SnRep r;
    r.degree = k;
    r.rank = 1;
    r.coxeter.assign(std::max(0, k - 1), IntMatrix::identity(1));
    return r;
}

inline SnRep sign_rep(int k) {
    SnRep r;
    r.degree = k;
    r.rank = 1;
    IntMatrix neg(1, 1);
    neg.set(0, 0, -1);
    r.coxeter.assign(std::max(0, k - 1), neg);
    return r;
}

/// A finitely supported FI-module: per-degree ranks, Coxeter action
/// matrices and stabilization maps M_n -> M_{n+1}.
struct FIModuleData {
    int support = -1;                             // largest degree N
    std::vector<int> ranks;                       // size N+1
    std::vector<std::vector<IntMatrix>> coxeter;  // [n][i], i < n-1
    std::vector<IntMatrix> stab;                  // [n] : M_n -> M_{n+1}, n < N

    static FIModuleData zero(int N) {
        FIModuleData m;
        m.support = N;
        m.ranks.assign(N + 1, 0);
        m.coxeter.resize(N + 1);
        for (int n = 0; n <= N; ++n) m.coxeter[n].assign(std::max(0, n - 1), IntMatrix(0, 0));
        m.stab.assign(N, IntMatrix(0, 0));
        return m;
    }

    IntMatrix rho(int n, const Perm& sigma) const {
        if (sigma.size() != n) throw std::invalid_argument("permutation size mismatch");
        IntMatrix m = IntMatrix::identity(ranks.at(n));
        for (int i : sigma.coxeter_word()) m = m * coxeter.at(n).at(i);
        return m;
    }

    bool check_coxeter_relations() const {
        for (int n = 0; n <= support; ++n) {
            const auto& gen = coxeter[n];
            IntMatrix id = IntMatrix::identity(ranks[n]);
            for (std::size_t i = 0; i < gen.size(); ++i) {
                if (!(gen[i] * gen[i] == id)) return false;
                if (i + 1 < gen.size()) {
                    IntMatrix ab = gen[i] * gen[i + 1];
                    if (!(ab * ab * ab == id)) return false;
                }
                for (std::size_t j = i + 2; j < gen.size(); ++j)
                    if (!(gen[i] * gen[j] == gen[j] * gen[i])) return false;
            }
        }
        return true;
    }

    /// stab_n intertwines the S_n x S_{n+1} actions along S_n c S_{n+1}.
    bool check_stabilization_equivariance() const {
        for (int n = 0; n < support; ++n)
            for (int i = 0; i + 1 < n; ++i)
                if (!(stab[n] * coxeter[n][i] == coxeter[n + 1][i] * stab[n])) return false;
        return true;
    }
};

/// The induced FI-module I(V)_n = sum_k Z FI(k,n) tensor_{S_k} V_k, with
/// basis (k, k-subset of [n], basis vector of V_k); subsets carry their
/// order-preserving labeling.
class InducedModule {
public:
    InducedModule(std::map<int, SnRep> generators, int N) : gen_(std::move(generators)), N_(N) {
        for (auto& [k, rep] : gen_) {
            if (rep.degree != k) throw std::invalid_argument("generator degree mismatch");
            if (k > N) throw std::invalid_argument("generator above support bound");
        }
        build();
    }

    const FIModuleData& data() const { return data_; }

    /// Basis bookkeeping: (k, subset) pairs in order, each of width rank(V_k).
    struct Slot {
        int k;
        std::vector<int> subset;
        int offset;
        int width;
    };
    const std::vector<Slot>& slots(int n) const { return slots_.at(n); }

private:
    void build() {
        data_.support = N_;
        data_.ranks.assign(N_ + 1, 0);
        data_.coxeter.resize(N_ + 1);
        slots_.resize(N_ + 1);

        for (int n = 0; n <= N_; ++n) {
            for (auto& [k, rep] : gen_) {
                if (k > n) continue;
                std::vector<int> subset;
                enumerate_subsets(n, k, subset, [&](const std::vector<int>& s) {
                    slots_[n].push_back({k, s, data_.ranks[n], rep.rank});
                    data_.ranks[n] += rep.rank;
                });
            }
            data_.coxeter[n].reserve(std::max(0, n - 1));
            for (int i = 0; i + 1 < n; ++i) data_.coxeter[n].push_back(coxeter_matrix(n, i));
        }
        data_.stab.clear();
        for (int n = 0; n < N_; ++n) data_.stab.push_back(stab_matrix(n));
    }

    template <typename F>
    static void enumerate_subsets(int n, int k, std::vector<int>& cur, F&& emit) {
        if (static_cast<int>(cur.size()) == k) {
            emit(cur);
            return;
        }
        int lo = cur.empty() ? 0 : cur.back() + 1;
        for (int x = lo; x <= n - (k - static_cast<int>(cur.size())); ++x) {
            cur.push_back(x);
            enumerate_subsets(n, k, cur, emit);
            cur.pop_back();
        }
    }

    int slot_index(int n, int k, const std::vector<int>& subset) const {
        for (std::size_t t = 0; t < slots_[n].size(); ++t)
            if (slots_[n][t].k == k && slots_[n][t].subset == subset) return static_cast<int>(t);
        throw std::logic_error("slot not found");
    }

    IntMatrix coxeter_matrix(int n, int i) const {
        IntMatrix m(data_.ranks[n], data_.ranks[n]);
        for (const Slot& s : slots_[n]) {
            bool has_i = std::binary_search(s.subset.begin(), s.subset.end(), i);
            bool has_i1 = std::binary_search(s.subset.begin(), s.subset.end(), i + 1);
            if (has_i && has_i1) {
                // Both swapped inside the subset: the relabeling is the
                // adjacent transposition at the rank of i.
                int r = static_cast<int>(std::lower_bound(s.subset.begin(), s.subset.end(), i) -
                                         s.subset.begin());
                const IntMatrix& c = gen_.at(s.k).coxeter.at(r);
                for (const auto& [rc, v] : c.entries())
                    m.add(s.offset + rc.first, s.offset + rc.second, v);
            } else if (has_i || has_i1) {
                std::vector<int> image = s.subset;
                for (int& x : image) x = (x == i) ? i + 1 : (x == i + 1 ? i : x);
                std::sort(image.begin(), image.end());
                const Slot& t = slots_[n][slot_index(n, s.k, image)];
                for (int v = 0; v < s.width; ++v) m.add(t.offset + v, s.offset + v, 1);
            } else {
                for (int v = 0; v < s.width; ++v) m.add(s.offset + v, s.offset + v, 1);
            }
        }
        return m;
    }

    IntMatrix stab_matrix(int n) const {
        IntMatrix m(data_.ranks[n + 1], data_.ranks[n]);
        for (const Slot& s : slots_[n]) {
            const Slot& t = slots_[n + 1][slot_index(n + 1, s.k, s.subset)];
            for (int v = 0; v < s.width; ++v) m.add(t.offset + v, s.offset + v, 1);
        }
        return m;
    }

    std::map<int, SnRep> gen_;
    int N_;
    FIModuleData data_;
    std::vector<std::vector<Slot>> slots_;
};

inline FIModuleData induced_module(const std::map<int, SnRep>& generators, int N) {
    return InducedModule(generators, N).data();
}

/// Suspension: (Sigma M)_n = M_{n+1}, S_n acting through the
/// first-coordinates embedding; the stabilization appends the new point
/// and moves it past the suspended coordinate.
inline FIModuleData shift(const FIModuleData& m) {
    if (m.support < 1) throw std::domain_error("shift requires support bound >= 1");
    FIModuleData s;
    s.support = m.support - 1;
    s.ranks.assign(m.ranks.begin() + 1, m.ranks.end());
    s.coxeter.resize(s.support + 1);
    for (int n = 0; n <= s.support; ++n)
        s.coxeter[n].assign(m.coxeter[n + 1].begin(),
                            m.coxeter[n + 1].begin() + std::max(0, n - 1));
    for (int n = 0; n < s.support; ++n) {
        // (iota_n + id_1) = s_{n+1} o iota_{n+1} inside FI(n+1, n+2).
        IntMatrix t = m.coxeter[n + 2].at(n) * m.stab[n + 1];
        s.stab.push_back(std::move(t));
    }
    return s;
}

namespace detail {

/// Dense Smith reduction tracking the row transform: U * T * V = D with
/// U invertible over Z; Uinv is maintained alongside.
struct TransformSNF {
    int rank = 0;
    std::vector<ZZ> divisors;      // all diagonal entries, chain order
    std::vector<std::vector<ZZ>> U, Uinv;
};

inline TransformSNF snf_with_row_transform(const IntMatrix& t) {
    int b = t.rows(), a = t.cols();
    std::vector<std::vector<ZZ>> m(b, std::vector<ZZ>(a, ZZ(0)));
    for (const auto& [rc, v] : t.entries()) m[rc.first][rc.second] = v;

    TransformSNF out;
    out.U.assign(b, std::vector<ZZ>(b, ZZ(0)));
    out.Uinv.assign(b, std::vector<ZZ>(b, ZZ(0)));
    for (int i = 0; i < b; ++i) out.U[i][i] = out.Uinv[i][i] = 1;

    auto row_op = [&](int dst, int src, const ZZ& q) {  // row dst += q * row src
        for (int c = 0; c < a; ++c) m[dst][c] += q * m[src][c];
        for (int c = 0; c < b; ++c) out.U[dst][c] += q * out.U[src][c];
        for (int r = 0; r < b; ++r) out.Uinv[r][src] -= q * out.Uinv[r][dst];
    };
    auto row_swap = [&](int x, int y) {
        if (x == y) return;
        std::swap(m[x], m[y]);
        std::swap(out.U[x], out.U[y]);
        for (int r = 0; r < b; ++r) std::swap(out.Uinv[r][x], out.Uinv[r][y]);
    };
    auto row_negate = [&](int x) {
        for (int c = 0; c < a; ++c) m[x][c] = -m[x][c];
        for (int c = 0; c < b; ++c) out.U[x][c] = -out.U[x][c];
        for (int r = 0; r < b; ++r) out.Uinv[r][x] = -out.Uinv[r][x];
    };
    auto col_swap = [&](int x, int y) {
        if (x == y) return;
        for (int r = 0; r < b; ++r) std::swap(m[r][x], m[r][y]);
    };
    auto col_op = [&](int dst, int src, const ZZ& q) {
        for (int r = 0; r < b; ++r) m[r][dst] += q * m[r][src];
    };

    int t0 = 0;
    while (t0 < b && t0 < a) {
        // minimal absolute nonzero in the remaining block
        int pr = -1, pc = -1;
        for (int r = t0; r < b; ++r)
            for (int c = t0; c < a; ++c)
                if (m[r][c] != 0 &&
                    (pr < 0 || mpz_cmpabs(m[r][c].get_mpz_t(), m[pr][pc].get_mpz_t()) < 0)) {
                    pr = r;
                    pc = c;
                }
        if (pr < 0) break;
        row_swap(t0, pr);
        col_swap(t0, pc);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int r = t0 + 1; r < b; ++r) {
                if (m[r][t0] == 0) continue;
                ZZ q = rounded_div(m[r][t0], m[t0][t0]);
                row_op(r, t0, -q);
                if (m[r][t0] != 0) {
                    row_swap(t0, r);  // strictly smaller pivot
                    clean = false;
                }
            }
            for (int c = t0 + 1; c < a; ++c) {
                if (m[t0][c] == 0) continue;
                ZZ q = rounded_div(m[t0][c], m[t0][t0]);
                col_op(c, t0, -q);
                if (m[t0][c] != 0) {
                    col_swap(t0, c);
                    clean = false;
                }
            }
            if (clean && abs(m[t0][t0]) != 1) {
                // divisibility chain
                for (int r = t0 + 1; r < b && clean; ++r)
                    for (int c = t0 + 1; c < a && clean; ++c)
                        if (!mpz_divisible_p(m[r][c].get_mpz_t(), m[t0][t0].get_mpz_t())) {
                            row_op(t0, r, 1);
                            clean = false;
                        }
            }
        }
        if (m[t0][t0] < 0) row_negate(t0);
        out.divisors.push_back(m[t0][t0]);
        ++out.rank;
        ++t0;
    }
    return out;
}

} // namespace detail

/// Cokernel presentation of one degree of Delta M.
struct QuotientPresentation {
    int free_rank = 0;
    std::vector<ZZ> torsion;
    IntMatrix projection;  // M_{n+1} -> free part
    IntMatrix section;     // free part -> M_{n+1}
};

inline QuotientPresentation cokernel_presentation(const IntMatrix& t) {
    detail::TransformSNF snf = detail::snf_with_row_transform(t);
    QuotientPresentation q;
    int b = t.rows();
    q.free_rank = b - snf.rank;
    for (const ZZ& d : snf.divisors)
        if (d > 1) q.torsion.push_back(d);
    q.projection = IntMatrix(q.free_rank, b);
    q.section = IntMatrix(b, q.free_rank);
    for (int i = 0; i < q.free_rank; ++i) {
        for (int c = 0; c < b; ++c) q.projection.set(i, c, snf.U[snf.rank + i][c]);
        for (int r = 0; r < b; ++r) q.section.set(r, i, snf.Uinv[r][snf.rank + i]);
    }
    return q;
}

/// Delta M: the per-degree cokernel of the natural map M_n -> (Sigma M)_n
/// (the stabilization), with induced actions on the free part; torsion is
/// recorded per degree.
struct DifferenceModule {
    FIModuleData data;
    std::vector<std::vector<ZZ>> torsion;  // per degree
};

inline DifferenceModule difference(const FIModuleData& m) {
    if (m.support < 1) throw std::domain_error("difference requires support bound >= 1");
    FIModuleData sig = shift(m);
    int N = m.support - 1;

    std::vector<QuotientPresentation> pres;
    pres.reserve(N + 1);
    for (int n = 0; n <= N; ++n) pres.push_back(cokernel_presentation(m.stab[n]));

    DifferenceModule out;
    out.data.support = N;
    out.data.ranks.resize(N + 1);
    out.data.coxeter.resize(N + 1);
    out.torsion.resize(N + 1);
    for (int n = 0; n <= N; ++n) {
        out.data.ranks[n] = pres[n].free_rank;
        out.torsion[n] = pres[n].torsion;
        for (int i = 0; i + 1 < n; ++i)
            out.data.coxeter[n].push_back(pres[n].projection * sig.coxeter[n][i] *
                                          pres[n].section);
    }
    for (int n = 0; n < N; ++n)
        out.data.stab.push_back(pres[n + 1].projection * sig.stab[n] * pres[n].section);
    return out;
}

} // namespace milnor
