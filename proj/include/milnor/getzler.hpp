#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "milnor/int_matrix.hpp"
#include "milnor/lie.hpp"
#include "milnor/partitions.hpp"
#include "milnor/perm.hpp"
#include "milnor/set_partitions.hpp"
#include "milnor/symfunc.hpp"

namespace milnor {

namespace detail {

/// Basis of the summand attached to one set partition: per block, the
/// left-normed words of Lie(block), combined in mixed-radix order
/// (lexicographic product order, last block fastest).
struct PartitionBasis {
    SetPartition part;
    std::vector<std::vector<LieWord>> block_words;
    std::vector<int> strides;
    int offset = 0;
    int size = 1;

    explicit PartitionBasis(SetPartition p) : part(std::move(p)) {
        block_words.reserve(part.blocks.size());
        for (const auto& b : part.blocks) block_words.push_back(lie_basis_words(b));
        strides.assign(part.blocks.size(), 1);
        for (int r = static_cast<int>(part.blocks.size()) - 1; r >= 0; --r) {
            strides[r] = size;
            size *= static_cast<int>(block_words[r].size());
        }
    }

    int index_of(const std::vector<int>& word_idx) const {
        int idx = 0;
        for (std::size_t r = 0; r < strides.size(); ++r) idx += word_idx[r] * strides[r];
        return idx;
    }

    std::vector<int> word_indices(int local) const {
        std::vector<int> idx(strides.size());
        for (std::size_t r = 0; r < strides.size(); ++r) {
            idx[r] = local / strides[r];
            local %= strides[r];
        }
        return idx;
    }
};

struct Level {
    std::vector<PartitionBasis> parts;
    std::map<std::vector<std::vector<int>>, int> part_index;  // blocks -> position
    int dim = 0;

    void build(int n, int k) {
        for (SetPartition& p : partitions_of_codim(n, k)) {
            PartitionBasis pb(std::move(p));
            pb.offset = dim;
            dim += pb.size;
            part_index[pb.part.blocks] = static_cast<int>(parts.size());
            parts.push_back(std::move(pb));
        }
    }
};

inline std::map<int, int> restrict_map(const Perm& sigma, const std::vector<int>& block) {
    std::map<int, int> phi;
    for (int x : block) phi[x] = sigma(x);
    return phi;
}

} // namespace detail

/// Result of an exactness check; `exact` summarizes, defects locate the
/// failing degree.
struct ExactnessReport {
    bool exact = true;
    std::vector<int> dims;
    std::vector<int> boundary_ranks;   // rank of d_k, k = 0..n-2
    std::vector<std::string> defects;  // per-failure description

    std::string to_string() const {
        std::ostringstream os;
        os << (exact ? "exact" : "NOT exact");
        os << "; dims =";
        for (int d : dims) os << ' ' << d;
        os << "; ranks =";
        for (int r : boundary_ranks) os << ' ' << r;
        for (const auto& d : defects) os << "; " << d;
        return os.str();
    }
};

/// The chain complex C_* over codimension-graded set partitions, with
/// C_k a sum of Lie^v tensor factors and d_k : C_{k+1} -> C_k dual to
/// block insertion. Built once, queried for boundaries, homology, group
/// actions and characters.
class GetzlerComplex {
public:
    explicit GetzlerComplex(int n) : n_(n) {
        if (n < 1) throw std::domain_error("GetzlerComplex requires n >= 1");
        levels_.resize(n);
        for (int k = 0; k < n; ++k) levels_[k].build(n, k);
        delta_.reserve(n - 1);
        for (int k = 0; k + 1 < n; ++k) delta_.push_back(build_delta(k));
    }

    int n() const { return n_; }

    int dim(int k) const { return levels_.at(k).dim; }

    std::vector<int> dims() const {
        std::vector<int> d;
        d.reserve(n_);
        for (int k = 0; k < n_; ++k) d.push_back(levels_[k].dim);
        return d;
    }

    /// d_k : C_{k+1} -> C_k (rows index C_k).
    IntMatrix boundary(int k) const { return delta_.at(k).transpose(); }

    /// The dualized boundary entering cohomological degree d, whose
    /// cokernel is H_d(Conf_n(C)/C^*): d^v_{d-1} : C^v_{d-1} -> C^v_d,
    /// with d_{-1} = 0.
    IntMatrix dual_boundary_into(int d) const {
        if (d == 0) return IntMatrix(levels_[0].dim, 0);
        return delta_.at(d - 1);
    }

    /// (free rank, torsion divisors) of H_d(Conf_n(C)/C^*, Z).
    std::pair<int, std::vector<ZZ>> homology(int d) const {
        if (d < 0 || d > n_ - 2) throw std::domain_error("homology degree out of range");
        return cokernel_invariants(dual_boundary_into(d));
    }

    /// Chain-level action of sigma on C_k: the sign-twisted contragredient
    /// of the orientation-signed permutation action on the Lie side (the
    /// global sign assembles the per-block sgn twists of Lie^v). Commutes
    /// with the boundary maps.
    IntMatrix action_matrix(int k, const Perm& sigma) const {
        IntMatrix m = lie_side_action(k, sigma.inverse()).transpose();
        if (sigma.sign() < 0) m = -m;
        return m;
    }

    /// Trace of the block-permutation representation on C_k (per-block
    /// sign-twisted dual relabelings, no cross-block signs). These traces
    /// realize the summand description of C_k as a sum of induced
    /// representations; they differ from traces of action_matrix by
    /// orientation signs on classes with even-sized cycles.
    ZZ representation_trace(int k, const Perm& sigma) const {
        const detail::Level& lv = levels_.at(k);
        ZZ trace = 0;
        for (const auto& pb : lv.parts) {
            // sigma must fix the partition for a diagonal contribution.
            SetPartition image = apply_to_partition(sigma, pb.part);
            if (!(image == pb.part)) continue;

            // Map block r to its position under sigma.
            int m = static_cast<int>(pb.part.blocks.size());
            std::vector<int> dest(m);
            std::vector<IntMatrix> dual_maps(m);
            for (int r = 0; r < m; ++r) {
                std::vector<int> img;
                for (int x : pb.part.blocks[r]) img.push_back(sigma(x));
                std::sort(img.begin(), img.end());
                dest[r] = position_of_block(pb.part, img);
                dual_maps[r] = block_dual_map(pb.part.blocks[r], sigma);
            }
            // Trace of (tensor of maps) composed with the slot permutation:
            // product over cycles of the slot permutation of
            // trace(M_{r_t} ... M_{r_1}) along each cycle.
            std::vector<bool> seen(m, false);
            ZZ contribution = 1;
            for (int r = 0; r < m && contribution != 0; ++r) {
                if (seen[r]) continue;
                IntMatrix cycle_map = dual_maps[r];
                seen[r] = true;
                for (int s = dest[r]; s != r; s = dest[s]) {
                    cycle_map = dual_maps[s] * cycle_map;
                    seen[s] = true;
                }
                ZZ tr = 0;
                for (int i = 0; i < cycle_map.rows(); ++i) tr += cycle_map.at(i, i);
                contribution *= tr;
            }
            trace += contribution;
        }
        return trace;
    }

    /// Trace of sigma on C_k, one value per cycle type of S_n.
    std::map<IntPartition, ZZ> character_brute(int k) const {
        std::map<IntPartition, ZZ> chi;
        for (const IntPartition& mu : partitions_of(n_)) {
            Perm rep = class_representative(n_, mu.parts);
            chi[mu] = representation_trace(k, rep);
        }
        return chi;
    }

    /// Verifies d_{k-1} d_k = 0 for all k.
    bool verify_d_squared() const {
        for (std::size_t k = 1; k < delta_.size(); ++k) {
            // delta_{k} o delta_{k-1} = 0 on the Lie side.
            if (!(delta_[k] * delta_[k - 1]).is_zero()) return false;
        }
        return true;
    }

    /// Verifies action_matrix(sigma) commutes with every boundary map for
    /// the Coxeter generators.
    bool verify_equivariance() const {
        for (int i = 0; i + 1 < n_; ++i) {
            Perm s = Perm::coxeter(n_, i);
            for (std::size_t k = 0; k < delta_.size(); ++k) {
                IntMatrix lhs = lie_side_action(static_cast<int>(k) + 1, s) * delta_[k];
                IntMatrix rhs = delta_[k] * lie_side_action(static_cast<int>(k), s);
                if (!(lhs == rhs)) return false;
            }
        }
        return true;
    }

    /// Homology of (C_*, d_*) vanishes in every degree, including
    /// surjectivity of d_0 and injectivity of d_{n-2}.
    ExactnessReport verify_exactness() const {
        ExactnessReport rep;
        rep.dims = dims();
        if (n_ < 2) {
            rep.exact = false;
            rep.defects.push_back("exactness requires n >= 2");
            return rep;
        }
        std::vector<SNFResult> snf;
        snf.reserve(delta_.size());
        for (const auto& dl : delta_) snf.push_back(smith_normal_form(dl));
        for (std::size_t k = 0; k < snf.size(); ++k) {
            rep.boundary_ranks.push_back(snf[k].rank);
            for (const ZZ& d : snf[k].divisors) {
                if (d != 1) {
                    rep.exact = false;
                    rep.defects.push_back("d_" + std::to_string(k) + " has divisor " + d.get_str());
                }
            }
        }
        auto expect = [&](int degree, int got, int want) {
            if (got != want) {
                rep.exact = false;
                rep.defects.push_back("degree " + std::to_string(degree) + ": rank defect " +
                                      std::to_string(want - got));
            }
        };
        expect(0, snf[0].rank, levels_[0].dim);
        for (int k = 1; k <= n_ - 2; ++k)
            expect(k, snf[k - 1].rank + snf[k].rank, levels_[k].dim);
        expect(n_ - 1, snf[n_ - 2].rank, levels_[n_ - 1].dim);
        return rep;
    }

    const SetPartition& partition_at(int k, int idx) const { return levels_.at(k).parts.at(idx).part; }
    int partition_count(int k) const { return static_cast<int>(levels_.at(k).parts.size()); }

private:
    detail::PartitionBasis const& basis_at(int k, int idx) const { return levels_[k].parts[idx]; }

    SetPartition apply_to_partition(const Perm& sigma, const SetPartition& p) const {
        std::vector<std::vector<int>> blocks;
        blocks.reserve(p.blocks.size());
        for (const auto& b : p.blocks) {
            std::vector<int> img;
            img.reserve(b.size());
            for (int x : b) img.push_back(sigma(x));
            std::sort(img.begin(), img.end());
            blocks.push_back(std::move(img));
        }
        return SetPartition(p.n, std::move(blocks));
    }

    int position_of_block(const SetPartition& p, const std::vector<int>& block) const {
        for (std::size_t r = 0; r < p.blocks.size(); ++r)
            if (p.blocks[r] == block) return static_cast<int>(r);
        throw std::logic_error("block not found");
    }

    /// Sign-twisted dual relabel map Lie^v(b) -> Lie^v(sigma(b)).
    IntMatrix block_dual_map(const std::vector<int>& block, const Perm& sigma) const {
        std::map<int, int> phi = detail::restrict_map(sigma, block);
        std::vector<int> image;
        image.reserve(block.size());
        for (int x : block) image.push_back(sigma(x));
        std::sort(image.begin(), image.end());
        std::map<int, int> phi_inv;
        for (auto& [a, b] : phi) phi_inv[b] = a;
        IntMatrix m = lie_relabel_matrix(image, phi_inv).transpose();
        if (orientation_sign(block, phi) < 0) m = -m;
        return m;
    }

    /// delta_k : D_k -> D_{k+1} on the Lie side; merging block positions
    /// i < j carries the orientation sign (-1)^{j+1} for 0-indexed j.
    IntMatrix build_delta(int k) const {
        const detail::Level& src = levels_[k];
        const detail::Level& dst = levels_[k + 1];
        IntMatrix delta(dst.dim, src.dim);
        for (const auto& pb : src.parts) {
            int m = static_cast<int>(pb.part.blocks.size());
            for (int i = 0; i < m; ++i) {
                for (int j = i + 1; j < m; ++j) {
                    SetPartition q = merge_blocks(pb.part, i, j);
                    const detail::PartitionBasis& qb = dst.parts[dst.part_index.at(q.blocks)];
                    int sign = (j % 2 == 1) ? 1 : -1;  // (-1)^{j+1}, 0-indexed j

                    // Merge coefficients per (word of b_i, word of b_j).
                    const auto& wi = pb.block_words[i];
                    const auto& wj = pb.block_words[j];
                    // target words live on block i of q (same minimum).
                    const auto& wq = qb.block_words[i];
                    std::map<LieWord, int> q_word_index;
                    for (std::size_t t = 0; t < wq.size(); ++t)
                        q_word_index[wq[t]] = static_cast<int>(t);

                    for (int local = 0; local < pb.size; ++local) {
                        std::vector<int> widx = pb.word_indices(local);
                        LieCombo merged = detail::merge_words(wi[widx[i]], wj[widx[j]]);
                        // q word indices: blocks of q = blocks of p with j
                        // dropped and i replaced by the merge target.
                        std::vector<int> qidx;
                        qidx.reserve(m - 1);
                        for (int r = 0; r < m; ++r) {
                            if (r == j) continue;
                            qidx.push_back(widx[r]);
                        }
                        int qi = i;  // position of the merged block in q
                        for (const auto& [word, coef] : merged) {
                            qidx[qi] = q_word_index.at(word);
                            delta.add(qb.offset + qb.index_of(qidx), pb.offset + local,
                                      sign * coef);
                        }
                    }
                }
            }
        }
        return delta;
    }

    /// Orientation-signed permutation action on the Lie side of level k.
    IntMatrix lie_side_action(int k, const Perm& sigma) const {
        const detail::Level& lv = levels_[k];
        IntMatrix act(lv.dim, lv.dim);
        for (const auto& pb : lv.parts) {
            SetPartition image = apply_to_partition(sigma, pb.part);
            const detail::PartitionBasis& qb = lv.parts[lv.part_index.at(image.blocks)];
            int m = static_cast<int>(pb.part.blocks.size());

            // Where each source block lands, and the orientation sign of
            // that slot permutation.
            std::vector<int> dest(m);
            for (int r = 0; r < m; ++r) {
                std::vector<int> img;
                for (int x : pb.part.blocks[r]) img.push_back(sigma(x));
                std::sort(img.begin(), img.end());
                dest[r] = position_of_block(image, img);
            }
            int block_sign = 1;
            for (int a = 0; a < m; ++a)
                for (int b = a + 1; b < m; ++b)
                    if (dest[a] > dest[b]) block_sign = -block_sign;

            std::vector<IntMatrix> relabel(m);
            for (int r = 0; r < m; ++r)
                relabel[r] = lie_relabel_matrix(pb.part.blocks[r],
                                                detail::restrict_map(sigma, pb.part.blocks[r]));

            for (int local = 0; local < pb.size; ++local) {
                std::vector<int> widx = pb.word_indices(local);
                // Expand the tensor product of relabel images.
                std::vector<std::pair<std::vector<int>, ZZ>> partial{{std::vector<int>(m, 0), ZZ(block_sign)}};
                for (int r = 0; r < m; ++r) {
                    std::vector<std::pair<std::vector<int>, ZZ>> next;
                    for (auto& [qidx, coef] : partial) {
                        for (int t = 0; t < relabel[r].rows(); ++t) {
                            ZZ v = relabel[r].at(t, widx[r]);
                            if (v == 0) continue;
                            auto q2 = qidx;
                            q2[dest[r]] = t;
                            next.push_back({std::move(q2), coef * v});
                        }
                    }
                    partial = std::move(next);
                }
                for (auto& [qidx, coef] : partial)
                    act.add(qb.offset + qb.index_of(qidx), pb.offset + local, coef);
            }
        }
        return act;
    }

    int n_;
    std::vector<detail::Level> levels_;
    std::vector<IntMatrix> delta_;  // delta_k : D_k -> D_{k+1}
};

inline GetzlerComplex build_complex(int n) { return GetzlerComplex(n); }

/// Independent oracle: the Arnold monomial complex on generators w_{ij}
/// (i < j, strictly increasing upper indices), with the degree -1
/// derivation sending every generator to 1. H_d(Conf_n(C)/C^*) is the
/// cokernel of the dualized boundary entering degree d.
class OrlikSolomonOracle {
public:
    explicit OrlikSolomonOracle(int n) : n_(n) {
        if (n < 1) throw std::domain_error("oracle requires n >= 1");
        basis_.resize(n);
        basis_[0].push_back({});
        // monomials with strictly increasing upper index j; i < j free.
        std::vector<std::pair<int, int>> cur;
        auto rec = [&](auto&& self, int next_j) -> void {
            if (!cur.empty()) basis_[cur.size()].push_back(cur);
            if (static_cast<int>(cur.size()) >= n - 1) return;
            for (int j = next_j; j < n_; ++j) {
                for (int i = 0; i < j; ++i) {
                    cur.push_back({i, j});
                    self(self, j + 1);
                    cur.pop_back();
                }
            }
        };
        rec(rec, 1);
        for (int d = 0; d < n; ++d) {
            std::sort(basis_[d].begin(), basis_[d].end());
            for (std::size_t t = 0; t < basis_[d].size(); ++t) index_[basis_[d][t]] = static_cast<int>(t);
        }
        for (int d = 1; d < n; ++d) {
            IntMatrix m(static_cast<int>(basis_[d - 1].size()), static_cast<int>(basis_[d].size()));
            for (std::size_t c = 0; c < basis_[d].size(); ++c) {
                const auto& mono = basis_[d][c];
                for (std::size_t t = 0; t < mono.size(); ++t) {
                    auto sub = mono;
                    sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(t));
                    m.add(index_.at(sub), static_cast<int>(c), (t % 2 == 0) ? 1 : -1);
                }
            }
            iota_.push_back(std::move(m));
        }
    }

    std::vector<int> dims() const {
        std::vector<int> d;
        for (const auto& b : basis_) d.push_back(static_cast<int>(b.size()));
        return d;
    }

    bool verify_exact() const {
        // The contraction complex is exact for n >= 2.
        std::vector<int> ranks;
        for (const auto& m : iota_) {
            SNFResult s = smith_normal_form(m);
            for (const ZZ& d : s.divisors)
                if (d != 1) return false;
            ranks.push_back(s.rank);
        }
        for (int d = 0; d < n_; ++d) {
            int incoming = (d + 1 <= n_ - 1) ? ranks[d] : 0;        // rank iota_{d+1}
            int outgoing = (d >= 1) ? ranks[d - 1] : 0;             // rank iota_d
            if (incoming + outgoing != static_cast<int>(basis_[d].size())) return false;
        }
        return true;
    }

    /// Per-degree (free rank, torsion divisors) of H_d(Conf_n(C)/C^*, Z),
    /// degrees 0..n-2.
    std::vector<std::pair<int, std::vector<ZZ>>> homology() const {
        std::vector<std::pair<int, std::vector<ZZ>>> out;
        for (int d = 0; d <= n_ - 2; ++d) {
            if (d == 0) {
                out.push_back({static_cast<int>(basis_[0].size()), {}});
            } else {
                out.push_back(cokernel_invariants(iota_[d - 1].transpose()));
            }
        }
        return out;
    }

private:
    int n_;
    std::vector<std::vector<std::vector<std::pair<int, int>>>> basis_;  // per degree
    std::map<std::vector<std::pair<int, int>>, int> index_;
    std::vector<IntMatrix> iota_;  // iota_d : A^d -> A^{d-1}, stored at d-1
};

/// Per-degree (free rank, torsion) of H_*(Conf_n(C)/C^*) from the Arnold
/// presentation.
inline std::vector<std::pair<int, std::vector<ZZ>>> os_oracle(int n) {
    return OrlikSolomonOracle(n).homology();
}

} // namespace milnor
