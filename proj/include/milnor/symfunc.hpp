#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "milnor/numeric.hpp"
#include "milnor/partitions.hpp"

namespace milnor {

struct NonIntegralCharacter : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Homogeneous symmetric function of fixed degree on the power-sum basis,
/// with exact rational coefficients. The power-sum basis is the single
/// internal basis; h and e are converted on construction.
class SymFunc {
public:
    SymFunc() : degree_(0) {}
    explicit SymFunc(int degree) : degree_(degree) {
        if (degree < 0) throw std::invalid_argument("negative degree");
    }

    static SymFunc p(const IntPartition& lambda) {
        SymFunc f(lambda.weight());
        f.coeffs_[lambda] = 1;
        return f;
    }

    static SymFunc zero(int degree) { return SymFunc(degree); }

    static SymFunc one() {  // p of the empty partition
        SymFunc f(0);
        f.coeffs_[IntPartition{}] = 1;
        return f;
    }

    int degree() const { return degree_; }
    const std::map<IntPartition, QQ>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    QQ coeff(const IntPartition& lambda) const {
        auto it = coeffs_.find(lambda);
        return it == coeffs_.end() ? QQ(0) : it->second;
    }

    void add_term(const IntPartition& lambda, const QQ& c) {
        if (lambda.weight() != degree_)
            throw std::invalid_argument("partition weight != degree");
        auto it = coeffs_.find(lambda);
        if (it == coeffs_.end()) {
            if (c != 0) {
                QQ cc(c);
                cc.canonicalize();
                coeffs_.emplace(lambda, std::move(cc));
            }
        } else {
            it->second += c;
            it->second.canonicalize();
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    SymFunc& operator+=(const SymFunc& o) {
        if (degree_ != o.degree_) throw std::invalid_argument("degree mismatch");
        for (const auto& [l, c] : o.coeffs_) add_term(l, c);
        return *this;
    }

    SymFunc operator+(const SymFunc& o) const {
        SymFunc s = *this;
        s += o;
        return s;
    }

    SymFunc operator-() const {
        SymFunc n = *this;
        for (auto& [l, c] : n.coeffs_) c = -c;
        return n;
    }

    SymFunc operator-(const SymFunc& o) const { return *this + (-o); }

    SymFunc operator*(const QQ& s) const {
        SymFunc f(degree_);
        if (s == 0) return f;
        f.coeffs_ = coeffs_;
        for (auto& [l, c] : f.coeffs_) {
            c *= s;
            c.canonicalize();
        }
        return f;
    }

    /// Graded product: p_lambda * p_mu = p_{lambda union mu}.
    SymFunc operator*(const SymFunc& o) const {
        SymFunc f(degree_ + o.degree_);
        for (const auto& [l, cl] : coeffs_) {
            for (const auto& [m, cm] : o.coeffs_) {
                std::vector<int> parts = l.parts;
                parts.insert(parts.end(), m.parts.begin(), m.parts.end());
                std::sort(parts.rbegin(), parts.rend());
                f.add_term(IntPartition(std::move(parts)), cl * cm);
            }
        }
        return f;
    }

    bool operator==(const SymFunc&) const = default;

    /// `{"degree": n, "p_coeffs": {"2+1+1": "1/2", ...}}` with partitions
    /// rendered as `+`-joined descending parts and rationals as `num/den`.
    std::string to_json() const {
        std::ostringstream os;
        os << "{\"degree\": " << degree_ << ", \"p_coeffs\": {";
        bool first = true;
        for (const auto& [l, c] : coeffs_) {
            if (!first) os << ", ";
            first = false;
            os << '"' << l.to_string() << "\": \"" << to_fraction_string(c) << '"';
        }
        os << "}}";
        return os.str();
    }

private:
    int degree_;
    std::map<IntPartition, QQ> coeffs_;
};

inline SymFunc operator*(const QQ& s, const SymFunc& f) { return f * s; }

/// h_m = sum over lambda |- m of p_lambda / z_lambda.
inline SymFunc h_in_p(int m) {
    if (m < 0) throw std::domain_error("h_in_p requires m >= 0");
    SymFunc h(m);
    for (const IntPartition& l : partitions_of(m)) h.add_term(l, QQ(1) / QQ(z_lambda(l)));
    return h;
}

/// e_m = sum over lambda |- m of (-1)^{m - length} p_lambda / z_lambda.
inline SymFunc e_in_p(int m) {
    if (m < 0) throw std::domain_error("e_in_p requires m >= 0");
    SymFunc e(m);
    for (const IntPartition& l : partitions_of(m)) {
        QQ c = QQ(1) / QQ(z_lambda(l));
        if ((m - l.length()) % 2 != 0) c = -c;
        e.add_term(l, c);
    }
    return e;
}

/// Plethysm f[g]: p_d[g] replaces every p_k of g by p_{dk}; extended as an
/// algebra morphism in f. Result degree = deg(f) * deg(g).
inline SymFunc plethysm(const SymFunc& f, const SymFunc& g) {
    // p_d[g] for all part sizes d appearing in f.
    std::map<int, SymFunc> pd_of_g;
    auto pd = [&](int d) -> const SymFunc& {
        auto it = pd_of_g.find(d);
        if (it == pd_of_g.end()) {
            SymFunc s(d * g.degree());
            for (const auto& [l, c] : g.coeffs()) {
                std::vector<int> parts;
                parts.reserve(l.parts.size());
                for (int p : l.parts) parts.push_back(p * d);
                s.add_term(IntPartition(std::move(parts)), c);
            }
            it = pd_of_g.emplace(d, std::move(s)).first;
        }
        return it->second;
    };

    SymFunc out(f.degree() * g.degree());
    for (const auto& [l, c] : f.coeffs()) {
        SymFunc term = SymFunc::one();
        for (int part : l.parts) term = term * pd(part);
        out += term * c;
    }
    return out;
}

/// Stanley's formula: lie^v_n = ((-1)^n / n) sum_{d|n} mu(d) (-1)^{n/d} p_d^{n/d}.
inline SymFunc lie_dual_char(int n) {
    if (n < 1) throw std::domain_error("lie_dual_char requires n >= 1");
    SymFunc f(n);
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        int mu = moebius(d);
        if (mu == 0) continue;
        int q = n / d;
        QQ c(mu, n);
        if (n % 2 != 0) c = -c;        // (-1)^n
        if (q % 2 != 0) c = -c;        // (-1)^{n/d}
        f.add_term(IntPartition(std::vector<int>(q, d)), c);
    }
    return f;
}

/// Inverse Frobenius characteristic: chi(mu) = z_mu * [p_mu] f.
/// Throws NonIntegralCharacter if any value is not an integer.
inline std::map<IntPartition, ZZ> char_values(const SymFunc& f) {
    std::map<IntPartition, ZZ> chi;
    for (const IntPartition& mu : partitions_of(f.degree())) {
        QQ v = f.coeff(mu) * QQ(z_lambda(mu));
        v.canonicalize();
        if (v.get_den() != 1)
            throw NonIntegralCharacter("character value at " + mu.to_string() +
                                       " is " + to_fraction_string(v));
        chi[mu] = v.get_num();
    }
    return chi;
}

inline ZZ dimension_of(const SymFunc& f) {
    IntPartition ones(std::vector<int>(f.degree(), 1));
    QQ v = f.coeff(ones) * QQ(z_lambda(ones));
    v.canonicalize();
    if (v.get_den() != 1) throw NonIntegralCharacter("non-integral dimension");
    return v.get_num();
}

/// Frobenius character of the degree-k chain group of the set-partition
/// complex viewed as a plain sum of induced representations: sum over
/// partition types 1^{m_1} 2^{m_2} ... of n with sum (i-1) m_i = k of
/// prod_i h_{m_i}[lie^v_i].
inline SymFunc ch_Ck(int n, int k) {
    if (k < 0 || k > n - 1) throw std::domain_error("ch_Ck requires 0 <= k <= n-1");
    SymFunc out(n);
    for (const IntPartition& type : partitions_of(n)) {
        if (type.length() != n - k) continue;  // sum (i-1) m_i = n - length
        SymFunc term = SymFunc::one();
        int i = 0;
        while (i < type.length()) {
            int part = type.parts[i];
            int m = 0;
            while (i < type.length() && type.parts[i] == part) {
                ++m;
                ++i;
            }
            term = term * plethysm(h_in_p(m), lie_dual_char(part));
        }
        out += term;
    }
    return out;
}

/// Variant of ch_Ck matching the chain-level orientation: block factors of
/// even size contribute exterior rather than symmetric plethysms. The
/// traces of the differential-compatible action on C_k equal these values;
/// see getzler.hpp.
inline SymFunc ch_Ck_signed(int n, int k) {
    if (k < 0 || k > n - 1) throw std::domain_error("ch_Ck_signed requires 0 <= k <= n-1");
    SymFunc out(n);
    for (const IntPartition& type : partitions_of(n)) {
        if (type.length() != n - k) continue;
        SymFunc term = SymFunc::one();
        int i = 0;
        while (i < type.length()) {
            int part = type.parts[i];
            int m = 0;
            while (i < type.length() && type.parts[i] == part) {
                ++m;
                ++i;
            }
            const SymFunc outer = (part % 2 == 0) ? e_in_p(m) : h_in_p(m);
            term = term * plethysm(outer, lie_dual_char(part));
        }
        out += term;
    }
    return out;
}

/// r_d = (-1)^d sum_{i <= d} s(n, n-i): the stable Betti number of degree d.
inline ZZ stable_betti(int n, int d) {
    if (d < 0 || d > n - 2) throw std::domain_error("stable_betti requires 0 <= d <= n-2");
    ZZ r = 0;
    for (int i = 0; i <= d; ++i) r += stirling_first(n, n - i);
    if (d % 2 != 0) r = -r;
    return r;
}

/// (-1)^d sum_{k <= d} (-1)^k ch_Ck(n, k).
inline SymFunc stable_char(int n, int d) {
    if (d < 0 || d > n - 2) throw std::domain_error("stable_char requires 0 <= d <= n-2");
    SymFunc out(n);
    for (int k = 0; k <= d; ++k) {
        SymFunc t = ch_Ck(n, k);
        if ((d - k) % 2 != 0) t = -t;
        out += t;
    }
    return out;
}

} // namespace milnor
