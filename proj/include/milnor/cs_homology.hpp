#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "milnor/fi_module.hpp"
#include "milnor/int_matrix.hpp"
#include "milnor/perm.hpp"

namespace milnor {

/// Central stability chain complex of an FI-module M at degree n:
/// C_p = Ind_{S_{n-p-1}}^{S_n} M_{n-p-1} for p = -1..n-1, with coset
/// basis the ordered (p+1)-tuples of distinct elements of [n]; face maps
/// delete a tuple entry and stabilize it into the module part.
///
/// The winding-enhanced chain groups are not built over the infinite
/// groups directly: in degrees p <= n-1 they agree with these FI chain
/// groups (the coset counts are certified by fihat_chain_compare), and
/// coefficients in scope factor through the forgetful quotient. The one
/// degenerate evaluation outside that range (n = 2, where the enhanced
/// group ring is Z[Z], Laurent polynomials) reduces to the exactness of
/// Z[t,t^-1] --(t-1)--> Z[t,t^-1] --> Z, which needs no machinery.
class CSComplex {
public:
    CSComplex(const FIModuleData& m, int n) : n_(n) {
        if (n > m.support) throw std::domain_error("n above module support");
        if (n < 0) throw std::domain_error("negative n");

        tuples_.resize(n + 1);  // tuples_[p+1]: (p+1)-tuples
        tuples_[0].push_back({});
        for (int len = 1; len <= n; ++len) {
            std::vector<int> cur;
            std::vector<bool> used(n, false);
            auto rec = [&](auto&& self) -> void {
                if (static_cast<int>(cur.size()) == len) {
                    tuples_[len].push_back(cur);
                    return;
                }
                for (int x = 0; x < n; ++x) {
                    if (used[x]) continue;
                    used[x] = true;
                    cur.push_back(x);
                    self(self);
                    cur.pop_back();
                    used[x] = false;
                }
            };
            rec(rec);
        }
        for (int len = 0; len <= n; ++len)
            for (std::size_t t = 0; t < tuples_[len].size(); ++t)
                tuple_index_[tuples_[len][t]] = static_cast<int>(t);

        dims_.resize(n + 1);
        for (int p = -1; p <= n - 1; ++p)
            dims_[p + 1] = static_cast<int>(tuples_[p + 1].size()) * m.ranks[n - p - 1];

        // boundary_[p] : C_p -> C_{p-1}, p = 0..n-1
        for (int p = 0; p <= n - 1; ++p) boundary_.push_back(build_boundary(m, p));
    }

    int n() const { return n_; }

    /// dim C_p, p in [-1, n-1].
    int dim(int p) const { return dims_.at(p + 1); }
    std::vector<int> dims() const { return dims_; }

    /// The boundary C_p -> C_{p-1}.
    const IntMatrix& boundary(int p) const { return boundary_.at(p); }

    bool verify_d_squared() const {
        for (std::size_t p = 1; p < boundary_.size(); ++p)
            if (!(boundary_[p - 1] * boundary_[p]).is_zero()) return false;
        return true;
    }

    /// Per-degree (free rank, torsion divisors), p = -1..n-1.
    std::vector<std::pair<int, std::vector<ZZ>>> homology() const {
        std::vector<SNFResult> snf;
        snf.reserve(boundary_.size());
        for (const auto& b : boundary_) snf.push_back(smith_normal_form(b));
        auto rank_of = [&](int p) { return (p >= 0 && p < static_cast<int>(snf.size())) ? snf[p].rank : 0; };
        std::vector<std::pair<int, std::vector<ZZ>>> out;
        for (int p = -1; p <= n_ - 1; ++p) {
            int free = dim(p) - rank_of(p) - rank_of(p + 1);
            std::vector<ZZ> torsion;
            if (p + 1 <= n_ - 1)
                for (const ZZ& d : snf[p + 1].divisors)
                    if (d > 1) torsion.push_back(d);
            out.push_back({free, std::move(torsion)});
        }
        return out;
    }

private:
    /// Face map f_i deletes tuple entry i (1-indexed) and stabilizes its
    /// value into the module part; the boundary is sum (-1)^i f_i.
    IntMatrix build_boundary(const FIModuleData& m, int p) const {
        int src_rank = m.ranks[n_ - p - 1];
        int dst_rank = m.ranks[n_ - p];
        const auto& src_tuples = tuples_[p + 1];
        const auto& dst_tuples = tuples_[p];
        IntMatrix b(static_cast<int>(dst_tuples.size()) * dst_rank,
                    static_cast<int>(src_tuples.size()) * src_rank);
        if (src_rank == 0 || (dst_rank == 0 && p >= 0)) return b;

        int mm = n_ - p - 1;  // module degree of the source
        for (std::size_t tindex = 0; tindex < src_tuples.size(); ++tindex) {
            const std::vector<int>& tuple = src_tuples[tindex];
            for (int i = 1; i <= p + 1; ++i) {
                int removed = tuple[i - 1];
                std::vector<int> rest = tuple;
                rest.erase(rest.begin() + (i - 1));
                int dst_t = tuple_index_.at(rest);

                // Complement bookkeeping: the removed letter joins the
                // module letters at the rank it holds among them.
                std::vector<bool> in_tuple(n_, false);
                for (int x : tuple) in_tuple[x] = true;
                int pos = 0;
                for (int x = 0; x < removed; ++x)
                    if (!in_tuple[x]) ++pos;

                IntMatrix f = m.stab[mm];  // appends the new letter last
                for (int t = mm - 1; t >= pos; --t) f = m.coxeter[mm + 1][t] * f;

                int sign = (i % 2 == 0) ? 1 : -1;  // (-1)^i
                for (const auto& [rc, v] : f.entries())
                    b.add(dst_t * dst_rank + rc.first,
                          static_cast<int>(tindex) * src_rank + rc.second,
                          sign > 0 ? v : -v);
            }
        }
        return b;
    }

    int n_;
    std::vector<std::vector<std::vector<int>>> tuples_;
    std::map<std::vector<int>, int> tuple_index_;
    std::vector<int> dims_;
    std::vector<IntMatrix> boundary_;
};

inline CSComplex cs_chains(const FIModuleData& m, int n) { return CSComplex(m, n); }

inline std::vector<std::pair<int, std::vector<ZZ>>> cs_homology(const FIModuleData& m, int n) {
    return CSComplex(m, n).homology();
}

/// H_i = 0 for all i <= n - 2 - d, for M induced with generation degree
/// <= d.
inline bool check_vanishing(const FIModuleData& m, int gen_degree, int n) {
    auto h = cs_homology(m, n);
    for (int p = -1; p <= n - 2 - gen_degree && p <= n - 1; ++p) {
        const auto& [free, torsion] = h[p + 1];
        if (free != 0 || !torsion.empty()) return false;
    }
    return true;
}

} // namespace milnor
